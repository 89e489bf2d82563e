#include "thermowave/wave.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thermowave/errors.hpp"

namespace thermowave {

namespace {

// Fritsch-Carlson monotone cubic slopes on a uniform grid.
Field pchip_slopes(const Field& y, double h) {
  const int n = static_cast<int>(y.size());
  Field m(n);
  if (n == 1) {
    m[0] = 0.0;
    return m;
  }
  auto delta = [&](int i) { return (y[i + 1] - y[i]) / h; };
  m[0] = delta(0);
  m[n - 1] = delta(n - 2);
  for (int i = 1; i < n - 1; ++i) {
    const double dl = delta(i - 1), dr = delta(i);
    m[i] = (dl * dr > 0.0) ? 2.0 * dl * dr / (dl + dr) : 0.0;
  }
  return m;
}

double hermite_eval(double y0, double y1, double m0, double m1, double h,
                    double s) {
  // s in [0,1] across the cell
  const double s2 = s * s, s3 = s2 * s;
  return y0 * (2 * s3 - 3 * s2 + 1) + h * m0 * (s3 - 2 * s2 + s) +
         y1 * (-2 * s3 + 3 * s2) + h * m1 * (s3 - s2);
}

double pchip_eval(const Field& xi, const Field& y, const Field& m, double dxi,
                  double x, double left, double right) {
  const int n = static_cast<int>(y.size());
  if (x <= xi[0]) return left;
  if (x >= xi[n - 1]) return right;
  int i = static_cast<int>((x - xi[0]) / dxi);
  i = std::clamp(i, 0, n - 2);
  const double s = (x - xi[i]) / dxi;
  return hermite_eval(y[i], y[i + 1], m[i], m[i + 1], dxi, s);
}

struct Shot {
  std::vector<double> w, p;
};

// Forward trajectory from z0 until it settles into (target, 0), and the
// backward trajectory from z0 into the saddle (source, 0).
constexpr double kLandEps = 1e-12;

}  // namespace

double reduced_cubic(double w, const WaveSpec& spec) {
  const double s2 = spec.s * spec.s;
  return stress_isothermal(w) - stress_isothermal(spec.u_minus) -
         s2 * (w - spec.u_minus);
}

double profile_rhs(double w, double w_prime, const WaveSpec& spec,
                   const PhysParams& p) {
  return (reduced_cubic(w, spec) - p.epsilon * spec.s * w_prime) / p.delta;
}

std::vector<std::array<double, 2>> integrate_reduced_ode(
    const std::function<double(double)>& force, double friction, double delta,
    double w0, double p0, double h, int nsteps) {
  std::vector<std::array<double, 2>> out;
  out.reserve(nsteps + 1);
  double w = w0, p = p0;
  out.push_back({w, p});
  auto fp = [&](double wv, double pv) { return (force(wv) - friction * pv) / delta; };
  for (int i = 0; i < nsteps; ++i) {
    const double k1w = p, k1p = fp(w, p);
    const double k2w = p + 0.5 * h * k1p, k2p = fp(w + 0.5 * h * k1w, p + 0.5 * h * k1p);
    const double k3w = p + 0.5 * h * k2p, k3p = fp(w + 0.5 * h * k2w, p + 0.5 * h * k2p);
    const double k4w = p + h * k3p, k4p = fp(w + h * k3w, p + h * k3p);
    w += h / 6.0 * (k1w + 2 * k2w + 2 * k3w + k4w);
    p += h / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
    out.push_back({w, p});
  }
  return out;
}

TanhReference tanh_reference(const PhysParams& p, double u_minus,
                             double u_plus) {
  if (u_plus != -u_minus)
    throw SetupError("tanh_reference: requires symmetric end strains u_plus = -u_minus");
  if (u_plus == 0.0)
    throw SetupError("tanh_reference: trivial symmetric pair");
  const double a = u_plus;
  const double s2 = (stress_isothermal(a) - stress_isothermal(-a)) / (2.0 * a);
  // Matching w = a tanh(k xi) against delta w'' + c w' = g(w):
  // the cubic coefficient forces 2 delta k^2 / a^2 = -1, the constant
  // forces c = 0.
  const double k2_required = -a * a / (2.0 * p.delta);
  if (k2_required > 0.0) {
    TanhReference ref;
    ref.spec = {-a, a, s2 >= 0.0 ? std::sqrt(s2) : 0.0};
    ref.k = std::sqrt(k2_required);
    ref.eps_s = 0.0;
    ref.w = [a, k = ref.k](double x) { return a * std::tanh(k * x); };
    return ref;
  }
  std::ostringstream msg;
  msg << "tanh_reference: the ansatz requires k^2 = -u_plus^2/(2 delta) = "
      << k2_required << " < 0 and eps*s = 0; the cubic coefficient of the "
      << "reduced ODE cannot match a tanh profile for this stress law "
      << "(no real closed form exists)";
  throw NoClosedForm(msg.str());
}

namespace {

WaveProfile constant_profile(const WaveSpec& spec, const PhysParams& p) {
  WaveProfile prof;
  prof.is_constant = true;
  prof.spec = spec;
  prof.spec.s = 0.0;
  prof.params = p;
  const int n = 3;
  prof.L_w = 1.0;
  prof.dxi = 1.0;
  prof.xi = Field::LinSpaced(n, -1.0, 1.0);
  prof.w = Field::Constant(n, spec.u_minus);
  prof.w_prime = Field::Zero(n);
  prof.w_slope = Field::Zero(n);
  prof.wp_slope = Field::Zero(n);
  prof.M_U = std::abs(spec.u_minus);
  prof.K_W = 0.0;
  prof.K_S0 = 0.0;
  prof.residual_sup = 0.0;
  return prof;
}

}  // namespace

WaveProfile build_profile(const WaveSpec& spec, const PhysParams& p,
                          double tol, double L_w, bool check_admissibility,
                          double shoot_step) {
  if (spec.constant()) {
    WaveProfile prof = constant_profile(spec, p);
    if (check_admissibility && 3.0 * prof.M_U * prof.M_U >= 1.0)
      throw InadmissibleProfile("build_profile: 3 M_U^2 >= 1 for constant background");
    return prof;
  }

  // Left-moving waves are the spatial mirror of right-moving ones with the
  // end states swapped; build the mirror and reflect.
  if (spec.s < 0.0) {
    WaveSpec mirror{spec.u_plus, spec.u_minus, -spec.s};
    WaveProfile m =
        build_profile(mirror, p, tol, L_w, check_admissibility, shoot_step);
    WaveProfile prof = m;
    prof.spec = spec;
    const Eigen::Index n = m.xi.size();
    for (Eigen::Index i = 0; i < n; ++i) {
      prof.xi[i] = -m.xi[n - 1 - i];
      prof.w[i] = m.w[n - 1 - i];
      prof.w_prime[i] = -m.w_prime[n - 1 - i];
    }
    prof.L_w = -prof.xi[0];
    prof.w_slope = pchip_slopes(prof.w, prof.dxi);
    prof.wp_slope = pchip_slopes(prof.w_prime, prof.dxi);
    return prof;
  }

  const double du = spec.u_plus - spec.u_minus;
  const double s2 = spec.s * spec.s;
  const double s2_rh = (stress_isothermal(spec.u_plus) -
                        stress_isothermal(spec.u_minus)) / du;
  if (std::abs(s2 - s2_rh) > 1e-10 * std::max(1.0, std::abs(s2_rh)))
    throw NoConnection("build_profile: wave speed violates the Rankine-Hugoniot relation (s^2 = " +
                       std::to_string(s2) + ", secant = " + std::to_string(s2_rh) + ")");

  // Saddle at u_minus needs g'(u_minus) = tau'(u_minus) - s^2 > 0; the
  // landing state must be stable, g'(u_plus) < 0. With the cubic stress
  // this puts u_minus strictly between the other two roots of g.
  const double gp_minus = 1.0 - 3.0 * spec.u_minus * spec.u_minus - s2;
  const double gp_plus = 1.0 - 3.0 * spec.u_plus * spec.u_plus - s2;
  if (gp_minus <= 0.0)
    throw NoConnection(
        "build_profile: (u_minus, 0) is not a saddle (tau'(u_minus) - s^2 = " +
        std::to_string(gp_minus) +
        " <= 0); no heteroclinic leaves this state");
  if (gp_plus >= 0.0)
    throw NoConnection("build_profile: u_plus is not a stable end state");
  const double friction = p.epsilon * spec.s;
  if (friction <= 0.0)
    throw NoConnection("build_profile: eps*s must be positive for a landing connection");

  const double b = friction / p.delta;
  const double lam_u = 0.5 * (-b + std::sqrt(b * b + 4.0 * gp_minus / p.delta));
  const double dir = du > 0.0 ? 1.0 : -1.0;
  const double eta = 1e-6 * std::abs(du);
  const double w0 = spec.u_minus + dir * eta;
  const double p0 = dir * eta * lam_u;
  const double h = shoot_step;
  auto force = [&spec](double w) { return reduced_cubic(w, spec); };

  auto fp = [&](double wv, double pv) {
    return (force(wv) - friction * pv) / p.delta;
  };
  auto rk4 = [&fp](double& w, double& pp, double hstep) {
    const double k1w = pp, k1p = fp(w, pp);
    const double k2w = pp + 0.5 * hstep * k1p,
                 k2p = fp(w + 0.5 * hstep * k1w, pp + 0.5 * hstep * k1p);
    const double k3w = pp + 0.5 * hstep * k2p,
                 k3p = fp(w + 0.5 * hstep * k2w, pp + 0.5 * hstep * k2p);
    const double k4w = pp + hstep * k3p, k4p = fp(w + hstep * k3w, pp + hstep * k3p);
    w += hstep / 6.0 * (k1w + 2 * k2w + 2 * k3w + k4w);
    pp += hstep / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
  };
  const long max_steps = static_cast<long>(4000.0 / h);
  const double guard = 10.0 * std::abs(du) + 1.0;

  // Forward: follow the unstable manifold until it lands in the sink.
  Shot fwd;
  {
    double w = w0, pp = p0;
    fwd.w.push_back(w);
    fwd.p.push_back(pp);
    long i = 0;
    for (; i < max_steps; ++i) {
      rk4(w, pp, h);
      fwd.w.push_back(w);
      fwd.p.push_back(pp);
      if (std::abs(w - spec.u_minus) > guard)
        throw NoConnection("build_profile: shot diverged before landing");
      if (std::abs(w - spec.u_plus) < kLandEps && std::abs(pp) < kLandEps) break;
    }
    if (i == max_steps)
      throw NoConnection("build_profile: shot failed to land within the xi budget");
  }

  // Saddle tail: near (u_minus, 0) the unstable manifold is
  // w = u_minus + c e^{lam_u xi} up to O(c^2), and the eigenvalue relation
  // delta lam^2 + eps*s lam = g'(u_minus) makes the pure exponential an
  // exact solution of the linearized ODE. Integrating backward instead
  // would blow up along the stable direction, so the tail is extended
  // analytically until it drops below the landing threshold.
  Shot bwd;
  {
    const int n_ext = static_cast<int>(
        std::ceil(std::log(eta / kLandEps) / (lam_u * h)));
    for (int j = 1; j <= n_ext; ++j) {
      const double decay = std::exp(-lam_u * j * h);
      bwd.w.push_back(spec.u_minus + dir * eta * decay);
      bwd.p.push_back(dir * eta * lam_u * decay);
    }
  }

  // Assemble on the uniform shooting grid; combined node j sits at
  // xi = (j - n_b) * h relative to the shot start (j = n_b is the start).
  const int n_b = static_cast<int>(bwd.w.size());
  const int n_f = static_cast<int>(fwd.w.size());
  const int n_all = n_b + n_f;
  std::vector<double> wv(n_all), pv(n_all);
  for (int j = 0; j < n_b; ++j) {
    wv[n_b - 1 - j] = bwd.w[j];
    pv[n_b - 1 - j] = bwd.p[j];
  }
  for (int j = 0; j < n_f; ++j) {
    wv[n_b + j] = fwd.w[j];
    pv[n_b + j] = fwd.p[j];
  }

  // Phase condition: xi = 0 at the first crossing of the midpoint.
  const double mid = 0.5 * (spec.u_minus + spec.u_plus);
  int jc = -1;
  for (int j = 0; j + 1 < n_all; ++j) {
    if ((wv[j] - mid) * (wv[j + 1] - mid) <= 0.0 && wv[j] != wv[j + 1]) {
      jc = j;
      break;
    }
  }
  if (jc < 0) throw NoConnection("build_profile: profile never crosses the midpoint");
  // Hermite refinement of the crossing inside cell jc.
  double sloc = (mid - wv[jc]) / (wv[jc + 1] - wv[jc]);
  for (int it = 0; it < 8; ++it) {
    const double f = hermite_eval(wv[jc], wv[jc + 1], pv[jc], pv[jc + 1], h, sloc) - mid;
    const double df = (hermite_eval(wv[jc], wv[jc + 1], pv[jc], pv[jc + 1], h, sloc + 1e-7) -
                       hermite_eval(wv[jc], wv[jc + 1], pv[jc], pv[jc + 1], h, sloc - 1e-7)) / 2e-7;
    if (df == 0.0) break;
    sloc -= f / df;
    sloc = std::clamp(sloc, 0.0, 1.0);
  }
  const double xi_center = (jc - n_b) * h + sloc * h;

  // Half-width: cover both computed tails, node-aligned.
  const double span_left = xi_center + n_b * h;
  const double span_right = (n_f - 1) * h - xi_center;
  double half = std::max(span_left, span_right) + 10.0 * h;
  if (L_w > 0.0) {
    if (L_w < std::max(span_left, span_right) * 0.5)
      throw SetupError("build_profile: requested L_w truncates the transition layer");
    half = L_w;
  }
  const long n_half = static_cast<long>(std::ceil(half / h));
  const long n_tab = 2 * n_half + 1;

  WaveProfile prof;
  prof.spec = spec;
  prof.params = p;
  prof.dxi = h;
  prof.xi = Field(n_tab);
  prof.w = Field(n_tab);
  prof.w_prime = Field(n_tab);
  // The centering shift is split into a whole number of cells (data are
  // moved by exact index offsets, never resampled) and a sub-cell
  // fraction absorbed into the stored coordinates.
  const double shift = std::floor(xi_center / h);
  const double frac = xi_center / h - shift;
  for (long i = 0; i < n_tab; ++i) {
    prof.xi[i] = (i - n_half) * h - frac * h;
    const long j = (i - n_half) + static_cast<long>(shift) + n_b;
    if (j < 0) {
      prof.w[i] = spec.u_minus;
      prof.w_prime[i] = 0.0;
    } else if (j >= n_all) {
      prof.w[i] = spec.u_plus;
      prof.w_prime[i] = 0.0;
    } else {
      prof.w[i] = wv[j];
      prof.w_prime[i] = pv[j];
    }
  }
  prof.L_w = -prof.xi[0];

  prof.w_slope = pchip_slopes(prof.w, h);
  prof.wp_slope = pchip_slopes(prof.w_prime, h);

  // M_U from the tabulated max, refined by one Newton step on w'(xi)=0.
  Eigen::Index imax;
  prof.w.abs().maxCoeff(&imax);
  double m_u = std::abs(prof.w[imax]);
  if (imax > 0 && imax + 1 < prof.w.size()) {
    const double p_i = prof.w_prime[imax];
    const double dp_i = profile_rhs(prof.w[imax], p_i, spec, p);
    if (dp_i != 0.0) {
      const double dxi_star = std::clamp(-p_i / dp_i, -h, h);
      const double w_star = prof.w[imax] + p_i * dxi_star +
                            0.5 * dp_i * dxi_star * dxi_star;
      m_u = std::max(m_u, std::abs(w_star));
    }
  }
  prof.M_U = m_u;

  // Integrated-ODE residual from a fourth-order difference of the stored
  // w' samples (independent of the shooting integrator).
  double rsup = 0.0;
  for (long i = 2; i + 2 < n_tab; ++i) {
    const double wpp = (-prof.w_prime[i + 2] + 8.0 * prof.w_prime[i + 1] -
                        8.0 * prof.w_prime[i - 1] + prof.w_prime[i - 2]) /
                       (12.0 * h);
    const double r = p.delta * wpp + friction * prof.w_prime[i] -
                     reduced_cubic(prof.w[i], spec);
    rsup = std::max(rsup, std::abs(r));
  }
  prof.residual_sup = rsup;
  if (rsup > tol)
    throw NoConnection("build_profile: integrated-ODE residual " +
                       std::to_string(rsup) + " exceeds tolerance");

  // Derived constants.
  prof.K_W = std::abs(spec.s) * prof.w_prime.abs().maxCoeff();
  const double l2sq = h * (prof.w_prime * prof.w_prime).sum();
  const double l4sq = std::sqrt(h * prof.w_prime.pow(4).sum());
  prof.K_S0 = p.epsilon * s2 * l4sq +
              p.gamma * p.theta0 * std::abs(spec.s) * std::sqrt(l2sq);

  if (check_admissibility && 3.0 * prof.M_U * prof.M_U >= 1.0)
    throw InadmissibleProfile("build_profile: 3 M_U^2 = " +
                              std::to_string(3.0 * prof.M_U * prof.M_U) +
                              " >= 1, profile leaves the coercive range");
  return prof;
}

double WaveProfile::eval_w(double x) const {
  if (is_constant) return spec.u_minus;
  return pchip_eval(xi, w, w_slope, dxi, x, spec.u_minus, spec.u_plus);
}

double WaveProfile::eval_wp(double x) const {
  if (is_constant) return 0.0;
  return pchip_eval(xi, w_prime, wp_slope, dxi, x, 0.0, 0.0);
}

BackgroundFields sample_background(const WaveProfile& profile,
                                   const Grid& grid, double t) {
  BackgroundFields bg;
  bg.Uprime = Field(grid.n);
  bg.Usecond = Field(grid.n);
  bg.W = Field(grid.n);
  bg.S0 = Field(grid.n);
  const PhysParams& p = profile.params;
  const double s = profile.spec.s;
  if (profile.is_constant) {
    bg.Uprime.setConstant(profile.spec.u_minus);
    bg.Usecond.setZero();
    bg.W.setZero();
    bg.S0.setZero();
    return bg;
  }
  const double xi_lo = profile.xi[0];
  const double xi_hi = profile.xi[profile.xi.size() - 1];
  for (int i = 0; i < grid.n; ++i) {
    const double xi = grid.x(i) - s * t;
    if (xi < xi_lo || xi > xi_hi) ++bg.n_tail_extended;
    const double up = profile.eval_w(xi);
    const double upp = profile.eval_wp(xi);
    bg.Uprime[i] = up;
    bg.Usecond[i] = upp;
    bg.W[i] = -s * upp;
    bg.S0[i] = p.epsilon * s * s * upp * upp + p.gamma * p.theta0 * s * upp;
  }
  return bg;
}

}  // namespace thermowave
