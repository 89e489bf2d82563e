#include "thermowave/verification.hpp"

#include <cmath>

#include "thermowave/analysis.hpp"
#include "thermowave/errors.hpp"

namespace thermowave {

double heat_oracle(double A, double sigma, double kappa, double t) {
  if (sigma <= 0.0) throw SetupError("heat_oracle: sigma must be positive");
  if (t < 0.0) throw SetupError("heat_oracle: t must be >= 0");
  return A * A * sigma * sigma * std::sqrt(M_PI) /
         std::sqrt(sigma * sigma + 2.0 * kappa * t);
}

namespace {

// sech^2 and the derivatives of S(x) = sech^2(x) in terms of S and tanh.
inline double sech2(double x) {
  const double c = std::cosh(x);
  return 1.0 / (c * c);
}

struct SechDerivs {
  double S, S1, S2, S4;
};

inline SechDerivs sech_derivs(double x) {
  const double S = sech2(x);
  const double T = std::tanh(x);
  SechDerivs d;
  d.S = S;
  d.S1 = -2.0 * S * T;
  d.S2 = 4.0 * S - 6.0 * S * S;
  d.S4 = 16.0 * S - 120.0 * S * S + 120.0 * S * S * S;
  return d;
}

}  // namespace

double Manufactured::rho(double x, double t) const {
  return A * std::exp(-t) * sech2(x);
}

double Manufactured::rho_t(double x, double t) const { return -rho(x, t); }

double Manufactured::theta(double x, double t) const { return rho(x, t); }

double Manufactured::force_mech(double x, double t) const {
  const SechDerivs d = sech_derivs(x);
  const double E = std::exp(-t);
  const double AE = A * E;
  const double lin = d.S - d.S2 + 3.0 * c * c * d.S2 + p.gamma * d.S1 +
                     p.epsilon * d.S2 + p.delta * d.S4;
  return AE * lin + 3.0 * AE * AE * AE * d.S1 * d.S1 * d.S2 +
         6.0 * c * AE * AE * d.S1 * d.S2;
}

double Manufactured::force_thermal(double x, double t) const {
  const SechDerivs d = sech_derivs(x);
  const double AE = A * std::exp(-t);
  return AE * (-d.S - p.kappa * d.S2 - p.gamma * p.theta0 * d.S1) -
         p.epsilon * AE * AE * d.S1 * d.S1;
}

ExtraForcing Manufactured::forcing() const {
  ExtraForcing f;
  f.mech = [*this](double x, double t) { return force_mech(x, t); };
  f.thermal = [*this](double x, double t) { return force_thermal(x, t); };
  return f;
}

std::vector<double> observed_orders(const std::vector<double>& errs) {
  std::vector<double> orders;
  for (std::size_t k = 1; k < errs.size(); ++k) {
    if (errs[k] > errs[k - 1])
      throw NonMonotoneErrors("observed_orders: error grew under refinement (" +
                              std::to_string(errs[k - 1]) + " -> " +
                              std::to_string(errs[k]) + ")");
    orders.push_back(errs[k] > 0.0 ? std::log2(errs[k - 1] / errs[k]) : 0.0);
  }
  return orders;
}

namespace {

struct MmsRun {
  double err_rho = 0.0;
  double err_theta = 0.0;
  State final_state;
};

MmsRun run_mms(const Manufactured& m, const Grid& grid, long n_steps,
               double t_final) {
  WaveSpec spec{m.c, m.c, 0.0};
  const WaveProfile profile = build_profile(spec, m.p);
  const double dt = t_final / static_cast<double>(n_steps);
  ImexStepper stepper(grid, m.p, profile, dt, m.forcing());
  State s;
  s.t = 0.0;
  s.step = 0;
  s.rho = Field(grid.n);
  s.rho_t = Field(grid.n);
  s.theta_pert = Field(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    s.rho[i] = m.rho(x, 0.0);
    s.rho_t[i] = m.rho_t(x, 0.0);
    s.theta_pert[i] = m.theta(x, 0.0);
  }
  while (s.step < n_steps) s = stepper.step(s);

  MmsRun out;
  Field er(grid.n), et(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    er[i] = s.rho[i] - m.rho(x, t_final);
    et[i] = s.theta_pert[i] - m.theta(x, t_final);
  }
  out.err_rho = quadrature_norm(er, 2, grid);
  out.err_theta = quadrature_norm(et, 2, grid);
  out.final_state = std::move(s);
  return out;
}

}  // namespace

ConvergenceStudy mms_convergence(const Manufactured& m, int levels,
                                 double t_final, double L, int n_base) {
  if (levels < 2)
    throw SetupError("mms_convergence: need at least 2 refinement levels");
  ConvergenceStudy study;

  // Spatial: halve dx with dt proportional to dx (both second order).
  {
    std::vector<double> errs_r, errs_t;
    int n = n_base;
    Grid g0(L, n);
    long steps = static_cast<long>(std::ceil(t_final / (0.25 * g0.dx)));
    for (int lev = 0; lev < levels; ++lev) {
      Grid g(L, n);
      const MmsRun r = run_mms(m, g, steps, t_final);
      errs_r.push_back(r.err_rho);
      errs_t.push_back(r.err_theta);
      ConvergenceRow row;
      row.level = lev;
      row.dx = g.dx;
      row.dt = t_final / static_cast<double>(steps);
      row.err_rho = r.err_rho;
      row.err_theta = r.err_theta;
      if (lev > 0) {
        row.order_rho = std::log2(errs_r[lev - 1] / errs_r[lev]);
        row.order_theta = std::log2(errs_t[lev - 1] / errs_t[lev]);
      }
      study.spatial.push_back(row);
      n = 2 * (n + 1) - 1;
      steps *= 2;
    }
    observed_orders(errs_r);
    observed_orders(errs_t);
  }

  // Temporal: fixed grid, halve dt, error against a small-dt reference on
  // the same grid (isolates the time discretization).
  {
    const int n = 2 * (n_base + 1) - 1;
    Grid g(L, n);
    long steps0 = static_cast<long>(std::ceil(t_final / (0.6 * g.dx)));
    const long steps_ref = steps0 << (levels + 2);
    const MmsRun ref = run_mms(m, g, steps_ref, t_final);
    std::vector<double> errs_r, errs_t;
    for (int lev = 0; lev < levels; ++lev) {
      const long steps = steps0 << lev;
      const MmsRun r = run_mms(m, g, steps, t_final);
      Field dr = r.final_state.rho - ref.final_state.rho;
      Field dth = r.final_state.theta_pert - ref.final_state.theta_pert;
      errs_r.push_back(quadrature_norm(dr, 2, g));
      errs_t.push_back(quadrature_norm(dth, 2, g));
      ConvergenceRow row;
      row.level = lev;
      row.dx = g.dx;
      row.dt = t_final / static_cast<double>(steps);
      row.err_rho = errs_r.back();
      row.err_theta = errs_t.back();
      if (lev > 0) {
        row.order_rho = std::log2(errs_r[lev - 1] / errs_r[lev]);
        row.order_theta = std::log2(errs_t[lev - 1] / errs_t[lev]);
      }
      study.temporal.push_back(row);
    }
    observed_orders(errs_r);
    observed_orders(errs_t);
  }
  return study;
}

UniquenessStudy refinement_uniqueness(const RunConfig& base, int levels) {
  if (levels < 2)
    throw SetupError("refinement_uniqueness: need at least 2 levels");
  UniquenessStudy study;
  std::vector<State> finals;
  std::vector<Grid> grids;
  std::vector<double> mu;
  RunConfig cfg = base;
  cfg.snapshot_every = 0;  // final snapshot only
  for (int lev = 0; lev < levels; ++lev) {
    RunResult r = simulate(cfg);
    finals.push_back(r.snapshots.back());
    grids.push_back(Grid(cfg.grid_L, cfg.grid_n));
    mu.push_back(r.profile.M_U);
    study.dx.push_back(grids.back().dx);
    cfg.grid_n = 2 * (cfg.grid_n + 1) - 1;
  }
  for (int lev = 0; lev + 1 < levels; ++lev) {
    const Grid& gc = grids[lev];
    const State& fine = finals[lev + 1];
    State fine_on_coarse;
    fine_on_coarse.t = fine.t;
    fine_on_coarse.rho = Field(gc.n);
    fine_on_coarse.rho_t = Field(gc.n);
    fine_on_coarse.theta_pert = Field(gc.n);
    for (int i = 0; i < gc.n; ++i) {
      const int j = 2 * i + 1;  // fine node coinciding with coarse node i
      fine_on_coarse.rho[i] = fine.rho[j];
      fine_on_coarse.rho_t[i] = fine.rho_t[j];
      fine_on_coarse.theta_pert[i] = fine.theta_pert[j];
    }
    const auto lam = lambda_difference({finals[lev]}, {fine_on_coarse}, gc,
                                       mu[lev], base.physics);
    study.lambda_final.push_back(lam[0].lambda);
  }
  for (std::size_t k = 0; k + 1 < study.lambda_final.size(); ++k)
    study.ratios.push_back(study.lambda_final[k] / study.lambda_final[k + 1]);
  return study;
}

}  // namespace thermowave
