#include "thermowave/model.hpp"

#include <cmath>

#include "thermowave/errors.hpp"

namespace thermowave {

double stress(double w, double theta, const PhysParams& p) {
  return w - w * w * w - p.gamma * (theta - p.theta0);
}

double stress_isothermal(double w) { return w - w * w * w; }

double rankine_hugoniot_speed(double u_minus, double u_plus) {
  if (u_minus == u_plus)
    throw EqualStates("rankine_hugoniot_speed: u_minus == u_plus");
  const double s2 = (stress_isothermal(u_plus) - stress_isothermal(u_minus)) /
                    (u_plus - u_minus);
  if (s2 < 0.0)
    throw ImaginarySpeed("rankine_hugoniot_speed: secant slope " +
                         std::to_string(s2) +
                         " is negative, no real-speed wave");
  return std::sqrt(s2);
}

ValidationReport validate_params(const PhysParams& p) {
  ValidationReport r;
  auto add = [&r](const std::string& name, double margin) {
    r.conditions.push_back({name, margin > 0.0, margin});
  };
  add("epsilon > 0", p.epsilon);
  add("delta > 0", p.delta);
  add("kappa > 0", p.kappa);
  // gamma = 0 is the decoupled special case and validates.
  r.conditions.push_back({"gamma >= 0", p.gamma >= 0.0, p.gamma});
  add("theta0 > 0", p.theta0);
  add("gamma*epsilon^2 <= 4", 4.0 - p.gamma * p.epsilon * p.epsilon);
  add("gamma <= kappa*epsilon/2", 0.5 * p.kappa * p.epsilon - p.gamma);
  add("gamma <= 1", 1.0 - p.gamma);
  // The coupling conditions are non-strict; margin exactly 0 still passes.
  for (std::size_t i = 5; i < r.conditions.size(); ++i)
    if (r.conditions[i].margin == 0.0) r.conditions[i].pass = true;
  return r;
}

}  // namespace thermowave
