#ifndef THERMOWAVE_INTEGRATOR_HPP
#define THERMOWAVE_INTEGRATOR_HPP

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <functional>
#include <memory>
#include <vector>

#include "thermowave/config.hpp"
#include "thermowave/energy.hpp"
#include "thermowave/state.hpp"
#include "thermowave/wave.hpp"

namespace thermowave {

/// Acceleration rho_tt of the mechanical perturbation equation,
///   rho_tt = d/dx (rho_x - rho_x^3 - 3 U'^2 rho_x - 3 U' rho_x^2
///                  - gamma Theta) + eps rho_xxt - delta rho_xxxx.
Field mech_rhs(const State& s, const BackgroundFields& bg, const PhysParams& p,
               const Grid& grid);

/// Theta_t of the thermal perturbation equation,
///   Theta_t = kappa Theta_xx + eps (rho_xt)^2 - gamma theta0 rho_xt
///             + 2 eps W rho_xt + S0.
Field thermal_rhs(const State& s, const BackgroundFields& bg,
                  const PhysParams& p, const Grid& grid);

/// CFL-type step bound. The implicit treatment removes the delta/dx^4,
/// eps/dx^2 and kappa/dx^2 restrictions; what remains is the frozen-
/// coefficient hyperbolic bound c_max = sqrt(1 + 3 M_U^2 + amp_margin)
/// plus an optional dx^2 guard for explicitly treated nonlinear terms
/// (nl_diffusivity = 0 disables it).
double stable_dt(const Grid& grid, const PhysParams& p, double safety,
                 double M_U = 0.0, double amp_margin = 0.0,
                 double nl_diffusivity = 0.0);

/// Additive manufactured-solution forcing (test-only configuration):
/// mech adds to rho_tt, thermal adds to Theta_t.
struct ExtraForcing {
  std::function<double(double x, double t)> mech;
  std::function<double(double x, double t)> thermal;
  bool enabled() const {
    return static_cast<bool>(mech) || static_cast<bool>(thermal);
  }
};

/// One-step IMEX integrator for the perturbation system. Stiff linear
/// operators (eps d_xx rho_t, delta d_xxxx rho; kappa d_xx Theta) are
/// trapezoidal-implicit, everything else explicit at the half step, so
/// each update is one pre-factored banded solve. Second order in time.
class ImexStepper {
 public:
  ImexStepper(const Grid& grid, const PhysParams& p,
              const WaveProfile& profile, double dt,
              ExtraForcing forcing = {}, double blowup_cap = 1e6);

  /// Advance one step. s.t must equal s.step * dt.
  State step(const State& s) const;

  double dt() const { return dt_; }
  const Grid& grid() const { return grid_; }

 private:
  Field explicit_mech(const Field& rho, const Field& theta,
                      const BackgroundFields& bg, double t) const;
  Field thermal_source(const Field& rho_t, const BackgroundFields& bg,
                       double t) const;

  Grid grid_;
  PhysParams p_;
  const WaveProfile* profile_;
  double dt_;
  ExtraForcing forcing_;
  double blowup_cap_;
  Eigen::SparseMatrix<double> D2_, D4_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> mech_solver_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> thermal_solver_;
  BackgroundFields bg_static_;  // cached for constant backgrounds
};

/// Grid/background/initial-data assembly shared by simulate and the
/// verification studies. Throws SetupError when the background tails or
/// the initial data violate the far-field tolerance at +-L, or when
/// phi <= -theta0 anywhere.
struct RunSetup {
  Grid grid;
  WaveProfile profile;
  InitialData init;
  double dt = 0.0;
  long n_steps = 0;
};

RunSetup prepare_run(const RunConfig& cfg);

/// Streaming callbacks for simulate; both optional.
struct SimHooks {
  std::function<void(const EnergyRecord&)> on_record;
  std::function<void(const State&, long step)> on_snapshot;
};

struct RunResult {
  std::vector<EnergyRecord> records;
  std::vector<State> snapshots;
  WaveProfile profile;
  double dt = 0.0;
  long n_steps = 0;
};

/// Integrate from t = 0 (or from *resume_from) to t_end on the schedule
/// t_m = m * dt with dt = t_end / n_steps fixed by the config alone, so a
/// resumed run reproduces the uninterrupted one bit for bit. Records are
/// emitted every record_every steps (positivity-checked), snapshots every
/// snapshot_every steps plus the final state.
RunResult simulate(const RunConfig& cfg, const SimHooks* hooks = nullptr,
                   const State* resume_from = nullptr,
                   const ExtraForcing* forcing = nullptr);

}  // namespace thermowave

#endif
