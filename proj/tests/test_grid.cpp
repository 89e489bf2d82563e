#include <doctest.h>

#include <cmath>

#include "thermowave/grid.hpp"

using namespace thermowave;

namespace {

Field sample(const Grid& g, double (*f)(double)) {
  Field out(g.n);
  for (int i = 0; i < g.n; ++i) out[i] = f(g.x(i));
  return out;
}

}  // namespace

TEST_CASE("grid geometry") {
  Grid g(10.0, 199);
  CHECK(g.dx == doctest::Approx(0.1));
  CHECK(g.x(0) == doctest::Approx(-10.0 + 0.1));
  CHECK(g.x(g.n - 1) == doctest::Approx(10.0 - 0.1));
}

TEST_CASE("derivatives of zero are zero") {
  Grid g(5.0, 64);
  const Field z = Field::Zero(g.n);
  for (int k = 1; k <= 4; ++k)
    CHECK(spatial_derivative(z, k, g).abs().maxCoeff() == 0.0);
}

TEST_CASE("second derivative exact on quadratics away from the boundary") {
  Grid g(5.0, 99);
  const Field f = g.coords().square();
  const Field d2 = spatial_derivative(f, 2, g);
  for (int i = 2; i < g.n - 2; ++i)
    CHECK(d2[i] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("Gaussian derivative error shrinks at second order") {
  auto gauss = [](double x) { return std::exp(-x * x); };
  auto d1 = [](double x) { return -2.0 * x * std::exp(-x * x); };
  auto d2a = [](double x) { return (4.0 * x * x - 2.0) * std::exp(-x * x); };
  for (int k : {1, 2}) {
    double prev_err = 0.0;
    for (int n : {200, 401, 803}) {  // dx halves each time
      Grid g(8.0, n);
      Field f(g.n), exact(g.n);
      for (int i = 0; i < g.n; ++i) {
        f[i] = gauss(g.x(i));
        exact[i] = (k == 1) ? d1(g.x(i)) : d2a(g.x(i));
      }
      const Field err = spatial_derivative(f, k, g) - exact;
      double maxerr = 0.0;
      for (int i = 4; i < g.n - 4; ++i) maxerr = std::max(maxerr, std::abs(err[i]));
      if (prev_err > 0.0) {
        const double factor = prev_err / maxerr;
        CHECK(factor > 3.3);
        CHECK(factor < 4.7);
      }
      prev_err = maxerr;
    }
  }
}

TEST_CASE("fourth derivative is exactly the composed Laplacian") {
  Grid g(4.0, 57);
  Field f(g.n);
  for (int i = 0; i < g.n; ++i) f[i] = std::sin(1.3 * g.x(i)) + 0.2 * g.x(i);
  const Field via_k4 = spatial_derivative(f, 4, g);
  const Field composed = spatial_derivative(spatial_derivative(f, 2, g), 2, g);
  CHECK((via_k4 - composed).abs().maxCoeff() == 0.0);
}

TEST_CASE("quadrature norms") {
  SUBCASE("zero field") {
    Grid g(5.0, 50);
    const Field z = Field::Zero(g.n);
    CHECK(quadrature_norm(z, 1, g) == 0.0);
    CHECK(quadrature_norm(z, 2, g) == 0.0);
    CHECK(quadrature_norm(z, norm_inf, g) == 0.0);
  }
  SUBCASE("Gaussian L2 norm matches the analytic integral") {
    // ||e^{-x^2}||_2^2 = int e^{-2x^2} dx = sqrt(pi/2).
    Grid g(10.0, 2001);
    const Field f = (-g.coords().square()).exp();
    const double n2 = quadrature_norm(f, 2, g);
    CHECK(n2 * n2 == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-6));
    CHECK(n2 == doctest::Approx(std::pow(M_PI / 2.0, 0.25)).epsilon(1e-6));
  }
  SUBCASE("hat function L1 norm is the triangle area") {
    // Height 1, base 2, apex and feet on grid nodes: trapezoid is exact.
    Grid g(8.0, 15);  // dx = 1, nodes at integers
    REQUIRE(g.dx == doctest::Approx(1.0));
    Field f = Field::Zero(g.n);
    for (int i = 0; i < g.n; ++i) {
      const double x = g.x(i);
      f[i] = std::max(0.0, 1.0 - std::abs(x));
    }
    CHECK(quadrature_norm(f, 1, g) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("summation by parts is exact for compactly supported fields") {
  Grid g(6.0, 120);
  Field f(g.n), h(g.n);
  for (int i = 0; i < g.n; ++i) {
    const double x = g.x(i);
    f[i] = std::exp(-2.0 * x * x);
    h[i] = x * std::exp(-x * x);
  }
  const double lhs = integrate(f * spatial_derivative(h, 1, g), g) +
                     integrate(spatial_derivative(f, 1, g) * h, g);
  CHECK(std::abs(lhs) < 1e-14);
}

TEST_CASE("norms are monotone under pointwise domination") {
  Grid g(5.0, 77);
  Field f(g.n), h(g.n);
  for (int i = 0; i < g.n; ++i) {
    const double x = g.x(i);
    f[i] = 0.5 * std::sin(3 * x) * std::exp(-x * x);
    h[i] = std::exp(-x * x);
  }
  for (int p : {1, 2, norm_inf})
    CHECK(quadrature_norm(f, p, g) <= quadrature_norm(h, p, g));
}
