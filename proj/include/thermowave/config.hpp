#ifndef THERMOWAVE_CONFIG_HPP
#define THERMOWAVE_CONFIG_HPP

#include <string>
#include <vector>

#include "thermowave/model.hpp"

namespace thermowave {

/// Named initial-data shape: zero, gaussian(amplitude, center, width),
/// or a file of nodal values (one per line).
struct ShapeSpec {
  enum class Kind { Zero, Gaussian, File };
  Kind kind = Kind::Zero;
  double amplitude = 0.0;
  double center = 0.0;
  double width = 1.0;
  std::string path;
};

/// Fully parsed run configuration (flat key = value text with section
/// prefixes, e.g. "physics.epsilon = 1.0").
struct RunConfig {
  PhysParams physics;

  bool constant_background = true;
  double background_value = 0.0;  // strain of the constant background
  double wave_u_minus = 0.0;
  double wave_u_plus = 0.0;
  int wave_s_sign = 1;
  double profile_tol = 1e-8;
  double profile_L_w = 0.0;  // 0 = automatic

  double grid_L = 20.0;
  int grid_n = 801;
  double far_field_tol = 1e-6;

  double t_end = 1.0;
  double safety = 0.8;
  int record_every = 1;
  int snapshot_every = 0;
  double blowup_cap = 1e6;
  double amp_margin = 0.0;      // nonlinear amplitude margin in c_max
  double nl_diffusivity = 0.0;  // explicit dx^2 guard; 0 disables

  ShapeSpec rho0, rho0_t, phi;

  std::string out_dir = ".";
  double window_t0 = 1.0;
  double window_t1 = -1.0;  // -1 = t_end
};

/// Parse a config file. Collects all problems (with line numbers) and
/// throws ParseError listing them if any.
RunConfig parse_config(const std::string& path);

/// Parse from text; on failure fills `errors` (one "line N: ..." entry per
/// problem) and returns a default config.
RunConfig parse_config_text(const std::string& text,
                            std::vector<std::string>& errors);

}  // namespace thermowave

#endif
