#ifndef THERMOWAVE_STATE_HPP
#define THERMOWAVE_STATE_HPP

#include "thermowave/grid.hpp"

namespace thermowave {

/// Grid snapshot of the perturbation Cauchy problem.
/// theta_pert must stay above -theta0 (positive absolute temperature);
/// the run driver enforces this at every record.
struct State {
  double t = 0.0;
  long step = 0;  // index in the run schedule; t == step * dt exactly
  Field rho;
  Field rho_t;
  Field theta_pert;
};

/// Initial mechanical perturbation, its velocity, and the initial
/// temperature perturbation. phi > -theta0 nodewise, all three decaying
/// below the far-field tolerance at the domain boundaries.
struct InitialData {
  Field rho0;
  Field rho0_t;
  Field phi;
};

}  // namespace thermowave

#endif
