#include "thermowave/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "thermowave/errors.hpp"

namespace thermowave {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

bool parse_int(const std::string& s, int& out) {
  try {
    std::size_t pos = 0;
    out = std::stoi(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

bool parse_bool(const std::string& s, bool& out) {
  if (s == "true" || s == "1" || s == "yes") {
    out = true;
    return true;
  }
  if (s == "false" || s == "0" || s == "no") {
    out = false;
    return true;
  }
  return false;
}

// gaussian(amplitude, center, width) | zero | file:PATH
bool parse_shape(const std::string& s, ShapeSpec& out) {
  if (s == "zero") {
    out = ShapeSpec{};
    return true;
  }
  if (s.rfind("file:", 0) == 0) {
    out.kind = ShapeSpec::Kind::File;
    out.path = trim(s.substr(5));
    return !out.path.empty();
  }
  if (s.rfind("gaussian(", 0) == 0 && s.back() == ')') {
    std::string args = s.substr(9, s.size() - 10);
    std::replace(args.begin(), args.end(), ',', ' ');
    std::istringstream is(args);
    double a, c, w;
    if (!(is >> a >> c >> w)) return false;
    std::string rest;
    if (is >> rest) return false;
    if (w <= 0.0) return false;
    out.kind = ShapeSpec::Kind::Gaussian;
    out.amplitude = a;
    out.center = c;
    out.width = w;
    return true;
  }
  return false;
}

}  // namespace

RunConfig parse_config_text(const std::string& text,
                            std::vector<std::string>& errors) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_wave_pair = false;
  auto err = [&](const std::string& what) {
    errors.push_back("line " + std::to_string(lineno) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) {
      err("expected 'key = value'");
      continue;
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (key.empty() || val.empty()) {
      err("empty key or value");
      continue;
    }

    auto want_d = [&](double& target) {
      if (!parse_double(val, target)) err("'" + val + "' is not a number");
    };
    auto want_i = [&](int& target) {
      if (!parse_int(val, target)) err("'" + val + "' is not an integer");
    };

    if (key == "physics.epsilon") want_d(cfg.physics.epsilon);
    else if (key == "physics.delta") want_d(cfg.physics.delta);
    else if (key == "physics.kappa") want_d(cfg.physics.kappa);
    else if (key == "physics.gamma") want_d(cfg.physics.gamma);
    else if (key == "physics.theta0") want_d(cfg.physics.theta0);
    else if (key == "wave.constant") {
      if (!parse_bool(val, cfg.constant_background)) err("expected true/false");
    } else if (key == "wave.background") want_d(cfg.background_value);
    else if (key == "wave.u_minus") { want_d(cfg.wave_u_minus); saw_wave_pair = true; }
    else if (key == "wave.u_plus") { want_d(cfg.wave_u_plus); saw_wave_pair = true; }
    else if (key == "wave.s_sign") want_i(cfg.wave_s_sign);
    else if (key == "wave.profile_tol") want_d(cfg.profile_tol);
    else if (key == "wave.L_w") want_d(cfg.profile_L_w);
    else if (key == "grid.L") want_d(cfg.grid_L);
    else if (key == "grid.n") want_i(cfg.grid_n);
    else if (key == "grid.far_field_tol") want_d(cfg.far_field_tol);
    else if (key == "time.t_end") want_d(cfg.t_end);
    else if (key == "time.safety") want_d(cfg.safety);
    else if (key == "time.record_every") want_i(cfg.record_every);
    else if (key == "time.snapshot_every") want_i(cfg.snapshot_every);
    else if (key == "time.blowup_cap") want_d(cfg.blowup_cap);
    else if (key == "time.amp_margin") want_d(cfg.amp_margin);
    else if (key == "time.nl_diffusivity") want_d(cfg.nl_diffusivity);
    else if (key == "init.rho0") {
      if (!parse_shape(val, cfg.rho0)) err("bad shape '" + val + "'");
    } else if (key == "init.rho0_t") {
      if (!parse_shape(val, cfg.rho0_t)) err("bad shape '" + val + "'");
    } else if (key == "init.phi") {
      if (!parse_shape(val, cfg.phi)) err("bad shape '" + val + "'");
    } else if (key == "output.dir") cfg.out_dir = val;
    else if (key == "analysis.window") {
      auto colon = val.find(':');
      if (colon == std::string::npos) {
        err("window must be T0:T1");
      } else {
        if (!parse_double(trim(val.substr(0, colon)), cfg.window_t0) ||
            !parse_double(trim(val.substr(colon + 1)), cfg.window_t1))
          err("bad window bounds '" + val + "'");
      }
    } else {
      err("unknown key '" + key + "'");
    }
  }

  if (saw_wave_pair) cfg.constant_background = false;

  // Semantic checks that do not need the grid.
  lineno = 0;  // attribute to the file as a whole
  if (cfg.physics.epsilon <= 0 || cfg.physics.delta <= 0 ||
      cfg.physics.kappa <= 0 || cfg.physics.theta0 <= 0)
    errors.push_back("line 0: epsilon, delta, kappa, theta0 must be positive");
  if (cfg.physics.gamma < 0)
    errors.push_back("line 0: gamma must be nonnegative");
  if (cfg.grid_n < 16) errors.push_back("line 0: grid.n must be >= 16");
  if (cfg.grid_L <= 0) errors.push_back("line 0: grid.L must be positive");
  if (cfg.t_end < 0) errors.push_back("line 0: time.t_end must be >= 0");
  if (cfg.safety <= 0 || cfg.safety > 1)
    errors.push_back("line 0: time.safety must be in (0, 1]");
  if (cfg.record_every < 1)
    errors.push_back("line 0: time.record_every must be >= 1");
  if (cfg.snapshot_every < 0)
    errors.push_back("line 0: time.snapshot_every must be >= 0");
  if (cfg.phi.kind == ShapeSpec::Kind::Gaussian &&
      cfg.phi.amplitude <= -cfg.physics.theta0)
    errors.push_back("line 0: init.phi amplitude violates phi > -theta0");
  if (!cfg.constant_background && cfg.wave_u_minus == cfg.wave_u_plus)
    errors.push_back("line 0: wave.u_minus == wave.u_plus (use wave.constant)");
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  std::vector<std::string> errors;
  RunConfig cfg = parse_config_text(ss.str(), errors);
  if (!errors.empty()) {
    std::string msg = "config '" + path + "' has problems:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw ParseError(msg);
  }
  return cfg;
}

}  // namespace thermowave
