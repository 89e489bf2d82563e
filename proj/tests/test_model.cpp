#include <doctest.h>

#include <cmath>

#include "thermowave/errors.hpp"
#include "thermowave/model.hpp"

using namespace thermowave;

TEST_CASE("stress law examples") {
  PhysParams p;
  p.gamma = 0.1;
  CHECK(stress(0.0, p.theta0, p) == doctest::Approx(0.0));
  CHECK(stress(1.0, p.theta0, p) == doctest::Approx(0.0));
  CHECK(stress(0.5, p.theta0 + 1.0, p) == doctest::Approx(0.275));
}

TEST_CASE("stress is odd in w at the reference temperature") {
  PhysParams p;
  p.gamma = 0.7;
  for (double w = -1.5; w <= 1.5; w += 0.05) {
    CHECK(stress(-w, p.theta0, p) ==
          doctest::Approx(-stress(w, p.theta0, p)).epsilon(1e-14));
  }
}

TEST_CASE("rankine_hugoniot_speed examples") {
  CHECK(rankine_hugoniot_speed(-0.5, 0.5) ==
        doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));
  CHECK(rankine_hugoniot_speed(-0.1, 0.1) ==
        doctest::Approx(std::sqrt(0.99)).epsilon(1e-12));
  CHECK_THROWS_AS(rankine_hugoniot_speed(0.7, 0.9), ImaginarySpeed);
  CHECK_THROWS_AS(rankine_hugoniot_speed(0.3, 0.3), EqualStates);
}

TEST_CASE("rankine_hugoniot_speed is symmetric in the end states") {
  const double pairs[][2] = {{-0.5, 0.5}, {0.0, 0.4}, {-0.2, 0.1}, {0.05, 0.5}};
  for (auto& q : pairs) {
    CHECK(rankine_hugoniot_speed(q[0], q[1]) ==
          doctest::Approx(rankine_hugoniot_speed(q[1], q[0])).epsilon(1e-14));
  }
}

TEST_CASE("secant slope stays in (0,1) inside the coercive strain range") {
  // tau' = 1 - 3w^2 < 1 on R, > 0 for |w| < 1/sqrt(3); the secant between
  // two such states inherits both bounds.
  const double bound = 1.0 / std::sqrt(3.0) - 1e-3;
  for (int i = -8; i <= 8; ++i) {
    for (int j = -8; j <= 8; ++j) {
      if (i == j) continue;
      const double a = bound * i / 8.0;
      const double b = bound * j / 8.0;
      const double s = rankine_hugoniot_speed(a, b);
      CHECK(s * s > 0.0);
      CHECK(s * s < 1.0);
    }
  }
}

TEST_CASE("validate_params examples") {
  SUBCASE("all conditions pass") {
    PhysParams p{1.0, 1.0, 2.0, 1.0, 1.0};
    const auto r = validate_params(p);
    CHECK(r.all_pass());
    // gamma*eps^2 = 1 <= 4, gamma = 1 <= kappa*eps/2 = 1, gamma = 1 <= 1.
    CHECK(r.conditions[5].margin == doctest::Approx(3.0));
    CHECK(r.conditions[6].margin == doctest::Approx(0.0));
    CHECK(r.conditions[7].margin == doctest::Approx(0.0));
  }
  SUBCASE("first coupling condition fails") {
    PhysParams p{3.0, 1.0, 2.0, 1.0, 1.0};
    const auto r = validate_params(p);
    CHECK_FALSE(r.all_pass());
    CHECK_FALSE(r.conditions[5].pass);  // gamma*eps^2 = 9 > 4
    CHECK(r.conditions[5].margin == doctest::Approx(-5.0));
  }
  SUBCASE("third coupling condition fails") {
    PhysParams p{1.0, 1.0, 4.0, 1.5, 1.0};
    const auto r = validate_params(p);
    CHECK_FALSE(r.all_pass());
    CHECK(r.conditions[5].pass);        // 1.5 <= 4
    CHECK(r.conditions[6].pass);        // 1.5 <= 2
    CHECK_FALSE(r.conditions[7].pass);  // 1.5 > 1
  }
  SUBCASE("negative viscosity is reported") {
    PhysParams p{-1.0, 1.0, 1.0, 0.5, 1.0};
    CHECK_FALSE(validate_params(p).all_pass());
  }
}
