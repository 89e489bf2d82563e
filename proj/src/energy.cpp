#include "thermowave/energy.hpp"

#include <cmath>
#include <limits>

#include "thermowave/errors.hpp"

namespace thermowave {

VState to_v(const State& s, const PhysParams& p) {
  VState vs;
  vs.t = s.t;
  const double decay = std::exp(-s.t / p.epsilon);
  vs.v = decay * s.rho;
  vs.v_t = decay * (s.rho_t - s.rho / p.epsilon);
  return vs;
}

void to_rho(const VState& vs, const PhysParams& p, Field& rho, Field& rho_t) {
  const double grow = std::exp(vs.t / p.epsilon);
  rho = grow * vs.v;
  rho_t = grow * (vs.v_t + vs.v / p.epsilon);
}

EnergyRecord compute_record(const State& s, const VState& vs,
                            const BackgroundFields& bg, double M_U,
                            const PhysParams& p, const Grid& grid,
                            double dt_used) {
  EnergyRecord r;
  r.t = s.t;
  r.dt_used = dt_used;

  const Field vx = spatial_derivative(vs.v, 1, grid);
  const Field vxx = spatial_derivative(vs.v, 2, grid);
  const Field vxxx = spatial_derivative(vs.v, 3, grid);
  const Field vxxxx = spatial_derivative(vs.v, 4, grid);
  const Field vxt = spatial_derivative(vs.v_t, 1, grid);
  const Field vxxt = spatial_derivative(vs.v_t, 2, grid);
  const Field thx = spatial_derivative(s.theta_pert, 1, grid);
  const Field thxx = spatial_derivative(s.theta_pert, 2, grid);
  const Field rho_x = spatial_derivative(s.rho, 1, grid);

  const double eps = p.epsilon;
  // e^{2t/eps} int v_x^4 / 4 == e^{-2t/eps} int rho_x^4 / 4 exactly.
  const double quartic =
      std::exp(-2.0 * s.t / eps) * 0.25 * integrate(rho_x.pow(4), grid);
  r.coercive_a = integrate(1.5 * bg.Uprime.square() * vx.square(), grid);
  r.coercive_b =
      integrate(0.5 * (1.0 - 3.0 * bg.Uprime.square()) * vx.square(), grid);
  r.E1 = integrate(vs.v.square() / (2.0 * eps * eps) +
                       0.5 * vs.v_t.square() + (0.5 * p.delta) * vxx.square(),
                   grid) +
         r.coercive_a + quartic;

  const double log_e2 = std::log((1.0 + 3.0 * M_U) / (2.0 * eps)) +
                        2.0 * s.t / eps;
  if (log_e2 > 700.0) {
    r.overflow_flag = true;
    r.E2 = std::exp(700.0);
  } else {
    r.E2 = std::exp(log_e2);
  }

  const double l2th = quadrature_norm(s.theta_pert, 2, grid);
  r.l2_theta_sq = l2th * l2th;
  r.calE = r.E1 + 0.5 * r.l2_theta_sq;

  const double vt2 = grid.dx * vs.v_t.square().sum();
  const double vtx2 = grid.dx * vxt.square().sum();
  const double thx2 = grid.dx * thx.square().sum();
  r.l2_vt_sq = vt2;
  r.l2_vtx_sq = vtx2;
  r.l2_thx_sq = thx2;
  r.calF = vtx2 + p.delta * grid.dx * vxxx.square().sum() + thx2;
  r.calG = grid.dx * vxxt.square().sum() +
           p.delta * grid.dx * vxxxx.square().sum() +
           grid.dx * thxx.square().sum();
  r.D = vt2 + vtx2 + thx2;

  r.l1_theta = quadrature_norm(s.theta_pert, 1, grid);
  r.l1_v = quadrature_norm(vs.v, 1, grid);
  r.min_abs_temp = p.theta0 + s.theta_pert.minCoeff();
  return r;
}

InequalityMargins inequality_residual(const std::vector<EnergyRecord>& window,
                                      const PhysParams& p, double K_S0) {
  const int n = static_cast<int>(window.size());
  if (n < 3)
    throw InsufficientWindow("inequality_residual: need >= 3 records");
  const double dt = window[1].t - window[0].t;
  for (int i = 1; i + 1 < n; ++i) {
    if (std::abs((window[i + 1].t - window[i].t) - dt) >
        1e-9 * std::max(1.0, std::abs(dt)))
      throw InsufficientWindow(
          "inequality_residual: records are not uniformly spaced");
  }

  InequalityMargins m;
  m.K = 0.5 * K_S0 * K_S0;

  // Fit C as the smallest constant for which the Gronwall form holds at
  // every interior record (the paper's C is nonconstructive).
  double C = 0.0;
  for (int i = 1; i + 1 < n; ++i) {
    const EnergyRecord& r = window[i];
    if (r.calE <= 0.0) continue;
    const double dcalE = (window[i + 1].calE - window[i - 1].calE) / (2.0 * dt);
    const double c_i = (dcalE - r.E2 * r.calE - m.K) / r.calE;
    C = std::max(C, c_i);
  }
  m.fitted_C = C;

  for (int i = 1; i + 1 < n; ++i) {
    const EnergyRecord& r = window[i];
    const double dE1 = (window[i + 1].E1 - window[i - 1].E1) / (2.0 * dt);
    const double lhs = dE1 + r.l2_vt_sq / p.epsilon +
                       0.5 * p.epsilon * r.l2_vtx_sq;
    const double rhs = r.E2 * r.E1 + (p.gamma / p.epsilon) * r.l2_thx_sq;
    m.t.push_back(r.t);
    m.mech_margin.push_back(rhs - lhs);
    const double dcalE = (window[i + 1].calE - window[i - 1].calE) / (2.0 * dt);
    m.gronwall_margin.push_back((r.E2 + C) * r.calE + m.K - dcalE);
  }
  return m;
}

}  // namespace thermowave
