#ifndef THERMOWAVE_MODEL_HPP
#define THERMOWAVE_MODEL_HPP

#include <array>
#include <string>
#include <vector>

namespace thermowave {

/// The five physical constants of the coupled system.
/// epsilon: viscosity, delta: capillarity, kappa: thermal conductivity,
/// gamma: thermoelastic coupling, theta0: reference temperature.
struct PhysParams {
  double epsilon = 1.0;
  double delta = 1.0;
  double kappa = 1.0;
  double gamma = 0.0;
  double theta0 = 1.0;
};

/// Asymptotic strains and signed wave speed of the background wave.
/// u_minus = u_plus denotes the constant-background degenerate case
/// (s is stored as 0 there).
struct WaveSpec {
  double u_minus = 0.0;
  double u_plus = 0.0;
  double s = 0.0;

  bool constant() const { return u_minus == u_plus; }
};

/// One coupling/positivity condition with its computed margin
/// (margin > 0 means satisfied, with room to spare).
struct ConditionReport {
  std::string name;
  bool pass = false;
  double margin = 0.0;
};

struct ValidationReport {
  std::vector<ConditionReport> conditions;

  bool all_pass() const {
    for (const auto& c : conditions)
      if (!c.pass) return false;
    return true;
  }
};

/// Stress law: tau(w, theta) = w - w^3 - gamma*(theta - theta0).
double stress(double w, double theta, const PhysParams& p);

/// Isothermal stress tau(w, theta0) = w - w^3.
double stress_isothermal(double w);

/// Magnitude of the wave speed from the stress secant between end strains,
/// s^2 = (tau(u_plus) - tau(u_minus)) / (u_plus - u_minus) at theta0.
/// The caller selects the sign. Throws EqualStates / ImaginarySpeed.
double rankine_hugoniot_speed(double u_minus, double u_plus);

/// Checks positivity of all five constants plus the three coupling
/// conditions  gamma*eps^2 <= 4,  gamma <= kappa*eps/2,  gamma <= 1,
/// reporting numeric margins for each.
ValidationReport validate_params(const PhysParams& p);

}  // namespace thermowave

#endif
