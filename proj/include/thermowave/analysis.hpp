#ifndef THERMOWAVE_ANALYSIS_HPP
#define THERMOWAVE_ANALYSIS_HPP

#include <vector>

#include "thermowave/state.hpp"

namespace thermowave {

struct PhysParams;

/// Fitted algebraic decay of a positive series.
struct DecayFit {
  double exponent = 0.0;  // slope of log(value) vs log(1+t)
  double C16_hat = 0.0;   // sup over the window of value*(1+t)
  double r2 = 0.0;
  double window_t0 = 0.0;
  double window_t1 = 0.0;
};

/// Least-squares line on (log(1+t), log value) over [t0, t1].
/// Requires >= 10 points in the window, all values > 0.
DecayFit fit_power_decay(const std::vector<double>& t,
                         const std::vector<double>& value, double t0,
                         double t1);

struct BernoulliFit {
  double alpha_hat = 0.0;    // least-squares slope of psi = 1/calE vs t
  double min_dpsi_dt = 0.0;  // min discrete forward difference of psi
};

/// Bernoulli slope of the reciprocal energy over [t0, t1]; calE must be
/// positive on the window.
BernoulliFit bernoulli_alpha(const std::vector<double>& t,
                             const std::vector<double>& calE, double t0,
                             double t1);

struct BoundCheck {
  bool pass = true;
  double worst_margin = 0.0;  // minimal relative slack of the bound
};

/// Verifies l2_theta_sq(t) <= 2*C16_hat/(1+t) at every record in the
/// window; margin is relative to the bound.
BoundCheck theta_bound_check(const std::vector<double>& t,
                             const std::vector<double>& l2_theta_sq,
                             double C16_hat, double t0, double t1);

struct DiffRecord {
  double t = 0.0;
  double lambda = 0.0;
};

/// Uniqueness functional for the difference of two runs sharing grid and
/// snapshot times:
///   Lambda = 1/2 ||w_t||^2 + 1/2 (1 - 3 M_U^2) ||w_x||^2
///            + delta/2 ||w_xx||^2 + 1/2 ||Phi||^2,
/// with w = rho^A - rho^B and Phi = Theta^A - Theta^B.
std::vector<DiffRecord> lambda_difference(const std::vector<State>& runA,
                                          const std::vector<State>& runB,
                                          const Grid& grid, double M_U,
                                          const PhysParams& p);

/// Exact key set of the analysis report:
/// exponent, c16, alpha, r2, theta_bound_pass, bernoulli_positive.
struct AnalysisReport {
  double exponent = 0.0;
  double c16 = 0.0;
  double alpha = 0.0;
  double r2 = 0.0;
  bool theta_bound_pass = true;
  bool bernoulli_positive = false;
};

struct EnergyRecord;

/// Full post-processing of a record series over [t0, t1]: decay fit of
/// ||Theta||^2, empirical C16 from calE, Bernoulli slope, bound check.
/// Degenerate (zero) series produce the all-zero report with
/// theta_bound_pass = true and bernoulli_positive = false.
AnalysisReport analyze_series(const std::vector<EnergyRecord>& records,
                              double t0, double t1);

}  // namespace thermowave

#endif
