#ifndef THERMOWAVE_GRID_HPP
#define THERMOWAVE_GRID_HPP

#include <Eigen/Core>

namespace thermowave {

/// Nodal values on the interior of the truncated line.
/// Fields are extended by zero beyond the boundary nodes (perturbations
/// vanish at infinity), which every derivative stencil assumes.
using Field = Eigen::ArrayXd;

/// Uniform grid of n interior points on [-L, L], spacing dx = 2L/(n+1).
struct Grid {
  double L = 0.0;
  int n = 0;
  double dx = 0.0;

  Grid() = default;
  Grid(double half_width, int n_interior);

  double x(int i) const { return -L + (i + 1) * dx; }
  Field coords() const;

  bool operator==(const Grid& o) const {
    return L == o.L && n == o.n;
  }
};

/// Second-order central stencils of order k in {1,2,3,4} with
/// zero-Dirichlet ghost values. The third and fourth derivatives are
/// compositions (D1*D2 and D2*D2), so the discrete capillarity operator
/// is exactly the square of the Laplacian stencil.
Field spatial_derivative(const Field& f, int k, const Grid& grid);

/// Marker for the max norm in quadrature_norm.
inline constexpr int norm_inf = -1;

/// Trapezoidal L^1/L^2 norms (zero boundary values) for p = 1, 2 and the
/// max norm for p = norm_inf. p = 2 returns the norm itself, not its square.
double quadrature_norm(const Field& f, int p, const Grid& grid);

/// Trapezoidal integral of f (zero boundary values): dx * sum(f).
double integrate(const Field& f, const Grid& grid);

bool all_finite(const Field& f);

}  // namespace thermowave

#endif
