#ifndef THERMOWAVE_WAVE_HPP
#define THERMOWAVE_WAVE_HPP

#include <array>
#include <functional>
#include <vector>

#include "thermowave/grid.hpp"
#include "thermowave/model.hpp"

namespace thermowave {

/// Tabulated strain profile U'(xi) of the isothermal traveling wave and
/// its derived constants. Immutable after construction; safe to share
/// across threads.
struct WaveProfile {
  Field xi;        // uniform grid on [-L_w, L_w]
  Field w;         // U'(xi)
  Field w_prime;   // U''(xi)
  WaveSpec spec;
  PhysParams params;
  double M_U = 0.0;   // max |U'|
  double K_W = 0.0;   // |s| * max |U''|
  double K_S0 = 0.0;  // eps*s^2*||U''||_{L4}^2 + gamma*theta0*|s|*||U''||_{L2}
  double L_w = 0.0;
  double dxi = 0.0;
  double residual_sup = 0.0;  // sup-norm residual of the integrated ODE
  bool is_constant = false;

  // Monotone cubic (pchip) slopes, precomputed for interpolation.
  Field w_slope, wp_slope;

  /// Evaluate U' / U'' at an arbitrary coordinate; outside the tabulated
  /// range the asymptotic constants are used.
  double eval_w(double x) const;
  double eval_wp(double x) const;
};

/// Right-hand side of the once-integrated profile ODE
///   delta w'' + eps*s w' = tau(w) - tau(u_minus) - s^2 (w - u_minus),
/// solved for w''.
double profile_rhs(double w, double w_prime, const WaveSpec& spec,
                   const PhysParams& p);

/// Reduced cubic g(w) = tau(w) - tau(u_minus) - s^2 (w - u_minus).
double reduced_cubic(double w, const WaveSpec& spec);

/// Construct the heteroclinic strain profile by shooting along the
/// unstable manifold of the saddle at (u_minus, 0), phase-centered so
/// that w(0) = (u_minus + u_plus)/2. The saddle condition requires
/// tau'(u_minus) > s^2 (and tau'(u_plus) < s^2 for the landing state);
/// otherwise no connection exists and NoConnection is thrown.
/// L_w <= 0 selects the half-width automatically from the tail decay.
WaveProfile build_profile(const WaveSpec& spec, const PhysParams& p,
                          double tol = 1e-8, double L_w = 0.0,
                          bool check_admissibility = true,
                          double shoot_step = 2e-3);

struct TanhReference {
  WaveSpec spec;
  double k = 0.0;      // profile width
  double eps_s = 0.0;  // friction value required by the ansatz
  std::function<double(double)> w;
};

/// Symbolic-substitution compatibility of the ansatz w = u_plus*tanh(k xi)
/// with the integrated profile ODE for symmetric end strains. Matching the
/// cubic coefficient forces k^2 = -u_plus^2/(2 delta) < 0, so for this
/// stress law the relation has no real solution and NoClosedForm is thrown
/// carrying the diagnosis.
TanhReference tanh_reference(const PhysParams& p, double u_minus,
                             double u_plus);

/// Background fields on a simulation grid at time t:
///   W(x,t)  = -s U''(x - s t)
///   S0(x,t) = eps s^2 U''(x-st)^2 + gamma theta0 s U''(x-st)
struct BackgroundFields {
  Field Uprime;
  Field Usecond;
  Field W;
  Field S0;
  int n_tail_extended = 0;  // nodes evaluated beyond the tabulated range
};

BackgroundFields sample_background(const WaveProfile& profile,
                                   const Grid& grid, double t);

/// Fixed-step RK4 on the reduced phase plane
///   dw/dxi = p,  dp/dxi = (force(w) - friction*p)/delta,
/// returning the (w, p) trajectory including the initial point.
/// Shared by the profile shooter and the integrator-kernel tests.
std::vector<std::array<double, 2>> integrate_reduced_ode(
    const std::function<double(double)>& force, double friction, double delta,
    double w0, double p0, double h, int nsteps);

}  // namespace thermowave

#endif
