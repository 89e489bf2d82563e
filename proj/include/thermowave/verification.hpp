#ifndef THERMOWAVE_VERIFICATION_HPP
#define THERMOWAVE_VERIFICATION_HPP

#include <vector>

#include "thermowave/integrator.hpp"

namespace thermowave {

/// Exact ||Theta(.,t)||_{L2}^2 of the pure heat evolution of the Gaussian
/// A exp(-x^2/(2 sigma^2)):  A^2 sigma^2 sqrt(pi) / sqrt(sigma^2 + 2 kappa t).
double heat_oracle(double A, double sigma, double kappa, double t);

/// Manufactured pair rho* = Theta* = A e^{-t} sech^2(x) on a constant
/// background of strain c, with the forcing obtained by closed-form
/// substitution into the perturbation system.
struct Manufactured {
  PhysParams p;
  double c = 0.2;
  double A = 1.0;

  double rho(double x, double t) const;
  double rho_t(double x, double t) const;
  double theta(double x, double t) const;
  double force_mech(double x, double t) const;
  double force_thermal(double x, double t) const;
  ExtraForcing forcing() const;
};

struct ConvergenceRow {
  int level = 0;
  double dx = 0.0;
  double dt = 0.0;
  double err_rho = 0.0;
  double err_theta = 0.0;
  double order_rho = 0.0;   // 0 on the first level
  double order_theta = 0.0;
};

struct ConvergenceStudy {
  std::vector<ConvergenceRow> spatial;
  std::vector<ConvergenceRow> temporal;
};

/// log2 error-ratio orders; throws NonMonotoneErrors if refinement fails
/// to reduce the error.
std::vector<double> observed_orders(const std::vector<double>& errs);

/// Runs `levels` dx-halvings (dt proportional to dx) against the
/// manufactured solution, then `levels` dt-halvings at a fixed grid
/// against a small-dt reference on the same grid.
ConvergenceStudy mms_convergence(const Manufactured& m, int levels,
                                 double t_final = 1.0, double L = 15.0,
                                 int n_base = 200);

struct UniquenessStudy {
  std::vector<double> dx;            // per level
  std::vector<double> lambda_final;  // Lambda between consecutive levels
  std::vector<double> ratios;        // lambda_k / lambda_{k+1}
};

/// Grid-consistency realization of the uniqueness argument: the same
/// initial data run at `levels` resolutions (dx halved each time), with
/// Lambda between consecutive levels evaluated at the final time on the
/// coarser grid (the fine solution restricted to the coarse nodes).
UniquenessStudy refinement_uniqueness(const RunConfig& base, int levels);

}  // namespace thermowave

#endif
