#include "thermowave/analysis.hpp"

#include <cmath>
#include <limits>

#include "thermowave/energy.hpp"
#include "thermowave/errors.hpp"
#include "thermowave/model.hpp"

namespace thermowave {

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

LineFit least_squares(const std::vector<double>& x,
                      const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  f.r2 = (sxx > 0.0 && syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

void window_select(const std::vector<double>& t, double t0, double t1,
                   std::vector<int>& idx) {
  idx.clear();
  for (int i = 0; i < static_cast<int>(t.size()); ++i)
    if (t[i] >= t0 && t[i] <= t1) idx.push_back(i);
}

}  // namespace

DecayFit fit_power_decay(const std::vector<double>& t,
                         const std::vector<double>& value, double t0,
                         double t1) {
  if (t.size() != value.size())
    throw TooFewPoints("fit_power_decay: mismatched series lengths");
  std::vector<int> idx;
  window_select(t, t0, t1, idx);
  if (idx.size() < 10)
    throw TooFewPoints("fit_power_decay: need >= 10 points in window, have " +
                       std::to_string(idx.size()));
  std::vector<double> x, y;
  DecayFit fit;
  fit.window_t0 = t0;
  fit.window_t1 = t1;
  for (int i : idx) {
    if (value[i] <= 0.0)
      throw NonPositiveValues("fit_power_decay: value " +
                              std::to_string(value[i]) + " at t = " +
                              std::to_string(t[i]));
    x.push_back(std::log1p(t[i]));
    y.push_back(std::log(value[i]));
    fit.C16_hat = std::max(fit.C16_hat, value[i] * (1.0 + t[i]));
  }
  const LineFit lf = least_squares(x, y);
  fit.exponent = lf.slope;
  fit.r2 = lf.r2;
  return fit;
}

BernoulliFit bernoulli_alpha(const std::vector<double>& t,
                             const std::vector<double>& calE, double t0,
                             double t1) {
  if (t.size() != calE.size())
    throw TooFewPoints("bernoulli_alpha: mismatched series lengths");
  std::vector<int> idx;
  window_select(t, t0, t1, idx);
  if (idx.size() < 2)
    throw TooFewPoints("bernoulli_alpha: need >= 2 points in window");
  std::vector<double> x, psi;
  for (int i : idx) {
    if (calE[i] <= 0.0)
      throw NonPositiveValues("bernoulli_alpha: calE <= 0 at t = " +
                              std::to_string(t[i]));
    x.push_back(t[i]);
    psi.push_back(1.0 / calE[i]);
  }
  BernoulliFit out;
  out.alpha_hat = least_squares(x, psi).slope;
  double mind = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < psi.size(); ++i)
    mind = std::min(mind, (psi[i + 1] - psi[i]) / (x[i + 1] - x[i]));
  out.min_dpsi_dt = mind;
  return out;
}

BoundCheck theta_bound_check(const std::vector<double>& t,
                             const std::vector<double>& l2_theta_sq,
                             double C16_hat, double t0, double t1) {
  BoundCheck out;
  out.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t0 || t[i] > t1) continue;
    const double bound = 2.0 * C16_hat / (1.0 + t[i]);
    const double margin =
        bound > 0.0 ? (bound - l2_theta_sq[i]) / bound
                    : (l2_theta_sq[i] > 0.0 ? -1.0 : 0.0);
    out.worst_margin = std::min(out.worst_margin, margin);
  }
  if (!std::isfinite(out.worst_margin)) out.worst_margin = 0.0;
  out.pass = out.worst_margin >= 0.0;
  return out;
}

std::vector<DiffRecord> lambda_difference(const std::vector<State>& runA,
                                          const std::vector<State>& runB,
                                          const Grid& grid, double M_U,
                                          const PhysParams& p) {
  if (runA.size() != runB.size())
    throw GridMismatch("lambda_difference: different snapshot counts");
  std::vector<DiffRecord> out;
  out.reserve(runA.size());
  for (std::size_t k = 0; k < runA.size(); ++k) {
    const State& a = runA[k];
    const State& b = runB[k];
    if (a.rho.size() != grid.n || b.rho.size() != grid.n)
      throw GridMismatch("lambda_difference: snapshot size != grid.n");
    if (std::abs(a.t - b.t) > 1e-12 * std::max(1.0, std::abs(a.t)))
      throw GridMismatch("lambda_difference: snapshot times differ");
    const Field w = a.rho - b.rho;
    const Field wt = a.rho_t - b.rho_t;
    const Field phi = a.theta_pert - b.theta_pert;
    const Field wx = spatial_derivative(w, 1, grid);
    const Field wxx = spatial_derivative(w, 2, grid);
    const double lambda =
        0.5 * grid.dx * wt.square().sum() +
        0.5 * (1.0 - 3.0 * M_U * M_U) * grid.dx * wx.square().sum() +
        0.5 * p.delta * grid.dx * wxx.square().sum() +
        0.5 * grid.dx * phi.square().sum();
    out.push_back({a.t, lambda});
  }
  return out;
}

AnalysisReport analyze_series(const std::vector<EnergyRecord>& records,
                              double t0, double t1) {
  AnalysisReport rep;
  std::vector<double> t, th2, calE;
  for (const auto& r : records) {
    t.push_back(r.t);
    th2.push_back(r.l2_theta_sq);
    calE.push_back(r.calE);
  }
  try {
    const DecayFit theta_fit = fit_power_decay(t, th2, t0, t1);
    rep.exponent = theta_fit.exponent;
    rep.r2 = theta_fit.r2;
    const DecayFit e_fit = fit_power_decay(t, calE, t0, t1);
    rep.c16 = e_fit.C16_hat;
    const BernoulliFit b = bernoulli_alpha(t, calE, t0, t1);
    rep.alpha = b.alpha_hat;
    rep.bernoulli_positive = b.min_dpsi_dt > 0.0;
  } catch (const NonPositiveValues&) {
    return rep;  // degenerate (zero) series
  } catch (const TooFewPoints&) {
    return rep;
  }
  rep.theta_bound_pass = theta_bound_check(t, th2, rep.c16, t0, t1).pass;
  return rep;
}

}  // namespace thermowave
