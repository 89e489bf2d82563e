#include "thermowave/grid.hpp"

#include <cmath>

#include "thermowave/errors.hpp"

namespace thermowave {

Grid::Grid(double half_width, int n_interior) : L(half_width), n(n_interior) {
  if (n < 16) throw SetupError("Grid: n must be >= 16");
  if (L <= 0.0) throw SetupError("Grid: L must be positive");
  dx = 2.0 * L / (n + 1);
}

Field Grid::coords() const {
  Field x(n);
  for (int i = 0; i < n; ++i) x[i] = this->x(i);
  return x;
}

namespace {

// (f_{i+1} - f_{i-1}) / (2 dx), ghost values 0.
Field d1(const Field& f, double dx) {
  const int n = static_cast<int>(f.size());
  Field out(n);
  const double c = 0.5 / dx;
  for (int i = 0; i < n; ++i) {
    const double fm = (i > 0) ? f[i - 1] : 0.0;
    const double fp = (i < n - 1) ? f[i + 1] : 0.0;
    out[i] = c * (fp - fm);
  }
  return out;
}

// (f_{i+1} - 2 f_i + f_{i-1}) / dx^2, ghost values 0.
Field d2(const Field& f, double dx) {
  const int n = static_cast<int>(f.size());
  Field out(n);
  const double c = 1.0 / (dx * dx);
  for (int i = 0; i < n; ++i) {
    const double fm = (i > 0) ? f[i - 1] : 0.0;
    const double fp = (i < n - 1) ? f[i + 1] : 0.0;
    out[i] = c * (fp - 2.0 * f[i] + fm);
  }
  return out;
}

}  // namespace

Field spatial_derivative(const Field& f, int k, const Grid& grid) {
  switch (k) {
    case 1:
      return d1(f, grid.dx);
    case 2:
      return d2(f, grid.dx);
    case 3:
      return d1(d2(f, grid.dx), grid.dx);
    case 4:
      return d2(d2(f, grid.dx), grid.dx);
    default:
      throw SetupError("spatial_derivative: order must be in {1,2,3,4}");
  }
}

double integrate(const Field& f, const Grid& grid) {
  // Trapezoid with zero boundary values reduces to dx * sum over interior.
  return grid.dx * f.sum();
}

double quadrature_norm(const Field& f, int p, const Grid& grid) {
  switch (p) {
    case 1:
      return grid.dx * f.abs().sum();
    case 2:
      return std::sqrt(grid.dx * (f * f).sum());
    default:
      return f.abs().maxCoeff();
  }
}

bool all_finite(const Field& f) { return f.isFinite().all(); }

}  // namespace thermowave
