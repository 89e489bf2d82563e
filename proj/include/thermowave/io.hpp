#ifndef THERMOWAVE_IO_HPP
#define THERMOWAVE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "thermowave/analysis.hpp"
#include "thermowave/config.hpp"
#include "thermowave/energy.hpp"
#include "thermowave/state.hpp"
#include "thermowave/wave.hpp"

namespace thermowave {

/// Series CSV column contract (exact order).
extern const char* const kSeriesHeader;

void write_series_header(std::ostream& os);
void write_series_row(std::ostream& os, const EnergyRecord& r);

/// Reads the 15 contract columns back; the in-memory-only dissipation
/// components are left at zero.
std::vector<EnergyRecord> read_series_csv(const std::string& path);

/// Self-describing snapshot: '#'-prefixed header (params, grid, wave, t,
/// step, dt) + CSV body (x, rho, rho_t, theta_pert), 17 significant
/// digits throughout so resume is bit-exact.
struct Snapshot {
  State state;
  double grid_L = 0.0;
  int grid_n = 0;
  PhysParams params;
  WaveSpec wave;
  double dt = 0.0;
};

void write_snapshot(std::ostream& os, const State& s, const Grid& grid,
                    const PhysParams& p, const WaveSpec& wave, double dt);
Snapshot read_snapshot(const std::string& path);

/// Profile CSV: '#'-prefixed spec/params header + columns xi, w, w_prime.
void write_profile_csv(std::ostream& os, const WaveProfile& prof);

/// Analysis report with the exact key set
/// {exponent, c16, alpha, r2, theta_bound_pass, bernoulli_positive}.
void write_analysis_report(std::ostream& os, const AnalysisReport& r);

std::string format_g17(double v);

}  // namespace thermowave

#endif
