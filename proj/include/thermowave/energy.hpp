#ifndef THERMOWAVE_ENERGY_HPP
#define THERMOWAVE_ENERGY_HPP

#include <vector>

#include "thermowave/state.hpp"
#include "thermowave/wave.hpp"

namespace thermowave {

/// Transformed mechanical perturbation: v = e^{-t/eps} rho and
/// v_t = e^{-t/eps} (rho_t - rho/eps).
struct VState {
  double t = 0.0;
  Field v;
  Field v_t;
};

VState to_v(const State& s, const PhysParams& p);

/// Inverse transform; round-trips to machine precision.
void to_rho(const VState& vs, const PhysParams& p, Field& rho, Field& rho_t);

/// One time sample of all monitored functionals.
struct EnergyRecord {
  double t = 0.0;
  double E1 = 0.0;
  double E2 = 0.0;
  double calE = 0.0;
  double calF = 0.0;
  double calG = 0.0;
  double D = 0.0;
  double l2_theta_sq = 0.0;
  double l1_theta = 0.0;
  double l1_v = 0.0;
  double min_abs_temp = 0.0;
  double coercive_a = 0.0;  // int (3/2) U'^2 v_x^2
  double coercive_b = 0.0;  // int (1/2) (1 - 3 U'^2) v_x^2
  double dt_used = 0.0;
  bool overflow_flag = false;
  // Dissipation components kept for the inequality audit (in-memory only;
  // not part of the series CSV contract).
  double l2_vt_sq = 0.0;
  double l2_vtx_sq = 0.0;
  double l2_thx_sq = 0.0;
};

/// All functionals by quadrature of the printed integrands. The quartic
/// e^{2t/eps} ||v_x||_{L4}^4 term is evaluated through the identity
/// e^{2t/eps} v_x^4 = e^{-2t/eps} rho_x^4, which never overflows; E2 is
/// evaluated in log space and saturates with overflow_flag set.
EnergyRecord compute_record(const State& s, const VState& vs,
                            const BackgroundFields& bg, double M_U,
                            const PhysParams& p, const Grid& grid,
                            double dt_used);

/// Discrete-in-time residual margins of the two printed estimates:
///   mech:     dE1/dt + (1/eps)||v_t||^2 + (eps/2)||v_tx||^2
///               <= E2 E1 + (gamma/eps)||Theta_x||^2
///   gronwall: d calE/dt <= (E2 + C) calE + K
/// over a window of >= 3 uniformly spaced records (central differences).
/// Positive margin = inequality satisfied. C is fitted as the smallest
/// constant making the Gronwall form hold over the window; K = K_S0^2/2
/// is supplied by the caller (0 on a constant background).
struct InequalityMargins {
  std::vector<double> t;               // interior record times
  std::vector<double> mech_margin;
  std::vector<double> gronwall_margin;
  double fitted_C = 0.0;
  double K = 0.0;
};

InequalityMargins inequality_residual(const std::vector<EnergyRecord>& window,
                                      const PhysParams& p, double K_S0 = 0.0);

}  // namespace thermowave

#endif
