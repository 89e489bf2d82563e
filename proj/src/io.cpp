#include "thermowave/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "thermowave/errors.hpp"

namespace thermowave {

const char* const kSeriesHeader =
    "t,E1,E2,calE,calF,calG,D,l2_theta_sq,l1_theta,l1_v,min_abs_temp,"
    "coercive_a,coercive_b,dt_used,overflow_flag";

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_series_header(std::ostream& os) { os << kSeriesHeader << "\n"; }

void write_series_row(std::ostream& os, const EnergyRecord& r) {
  os << format_g17(r.t) << ',' << format_g17(r.E1) << ',' << format_g17(r.E2)
     << ',' << format_g17(r.calE) << ',' << format_g17(r.calF) << ','
     << format_g17(r.calG) << ',' << format_g17(r.D) << ','
     << format_g17(r.l2_theta_sq) << ',' << format_g17(r.l1_theta) << ','
     << format_g17(r.l1_v) << ',' << format_g17(r.min_abs_temp) << ','
     << format_g17(r.coercive_a) << ',' << format_g17(r.coercive_b) << ','
     << format_g17(r.dt_used) << ',' << (r.overflow_flag ? 1 : 0) << "\n";
}

std::vector<EnergyRecord> read_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open series file '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != kSeriesHeader)
    throw ParseError("series file '" + path + "' has an unexpected header");
  std::vector<EnergyRecord> out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream is(line);
    EnergyRecord r;
    double flag = 0.0;
    char comma;
    double* fields[] = {&r.t,        &r.E1,          &r.E2,
                        &r.calE,     &r.calF,        &r.calG,
                        &r.D,        &r.l2_theta_sq, &r.l1_theta,
                        &r.l1_v,     &r.min_abs_temp, &r.coercive_a,
                        &r.coercive_b, &r.dt_used,   &flag};
    for (int i = 0; i < 15; ++i) {
      if (!(is >> *fields[i]))
        throw ParseError("series file '" + path + "' line " +
                         std::to_string(lineno) + ": bad number in column " +
                         std::to_string(i + 1));
      if (i < 14 && !(is >> comma))
        throw ParseError("series file '" + path + "' line " +
                         std::to_string(lineno) + ": missing comma");
    }
    r.overflow_flag = flag != 0.0;
    out.push_back(r);
  }
  return out;
}

void write_snapshot(std::ostream& os, const State& s, const Grid& grid,
                    const PhysParams& p, const WaveSpec& wave, double dt) {
  os << "# thermowave snapshot\n";
  os << "# t = " << format_g17(s.t) << "\n";
  os << "# step = " << s.step << "\n";
  os << "# dt = " << format_g17(dt) << "\n";
  os << "# grid.L = " << format_g17(grid.L) << "\n";
  os << "# grid.n = " << grid.n << "\n";
  os << "# physics.epsilon = " << format_g17(p.epsilon) << "\n";
  os << "# physics.delta = " << format_g17(p.delta) << "\n";
  os << "# physics.kappa = " << format_g17(p.kappa) << "\n";
  os << "# physics.gamma = " << format_g17(p.gamma) << "\n";
  os << "# physics.theta0 = " << format_g17(p.theta0) << "\n";
  os << "# wave.u_minus = " << format_g17(wave.u_minus) << "\n";
  os << "# wave.u_plus = " << format_g17(wave.u_plus) << "\n";
  os << "# wave.s = " << format_g17(wave.s) << "\n";
  os << "x,rho,rho_t,theta_pert\n";
  for (int i = 0; i < grid.n; ++i) {
    os << format_g17(grid.x(i)) << ',' << format_g17(s.rho[i]) << ','
       << format_g17(s.rho_t[i]) << ',' << format_g17(s.theta_pert[i])
       << "\n";
  }
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open snapshot '" + path + "'");
  Snapshot snap;
  std::string line;
  auto header_value = [&](const std::string& l) {
    auto eq = l.find('=');
    if (eq == std::string::npos)
      throw ParseError("snapshot '" + path + "': bad header line '" + l + "'");
    return l.substr(eq + 1);
  };
  std::vector<double> rho, rho_t, theta;
  bool in_body = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!in_body && line[0] == '#') {
      if (line.find("# t =") == 0) snap.state.t = std::stod(header_value(line));
      else if (line.find("# step =") == 0) snap.state.step = std::stol(header_value(line));
      else if (line.find("# dt =") == 0) snap.dt = std::stod(header_value(line));
      else if (line.find("# grid.L =") == 0) snap.grid_L = std::stod(header_value(line));
      else if (line.find("# grid.n =") == 0) snap.grid_n = std::stoi(header_value(line));
      else if (line.find("# physics.epsilon =") == 0) snap.params.epsilon = std::stod(header_value(line));
      else if (line.find("# physics.delta =") == 0) snap.params.delta = std::stod(header_value(line));
      else if (line.find("# physics.kappa =") == 0) snap.params.kappa = std::stod(header_value(line));
      else if (line.find("# physics.gamma =") == 0) snap.params.gamma = std::stod(header_value(line));
      else if (line.find("# physics.theta0 =") == 0) snap.params.theta0 = std::stod(header_value(line));
      else if (line.find("# wave.u_minus =") == 0) snap.wave.u_minus = std::stod(header_value(line));
      else if (line.find("# wave.u_plus =") == 0) snap.wave.u_plus = std::stod(header_value(line));
      else if (line.find("# wave.s =") == 0) snap.wave.s = std::stod(header_value(line));
      continue;
    }
    if (line == "x,rho,rho_t,theta_pert") {
      in_body = true;
      continue;
    }
    if (!in_body)
      throw ParseError("snapshot '" + path + "': unexpected line before body");
    std::istringstream is(line);
    double x, r, rt, th;
    char c1, c2, c3;
    if (!(is >> x >> c1 >> r >> c2 >> rt >> c3 >> th))
      throw ParseError("snapshot '" + path + "': bad body line '" + line + "'");
    rho.push_back(r);
    rho_t.push_back(rt);
    theta.push_back(th);
  }
  if (snap.grid_n != static_cast<int>(rho.size()))
    throw ParseError("snapshot '" + path + "': body has " +
                     std::to_string(rho.size()) + " rows, header says n = " +
                     std::to_string(snap.grid_n));
  snap.state.rho = Eigen::Map<Eigen::ArrayXd>(rho.data(), rho.size());
  snap.state.rho_t = Eigen::Map<Eigen::ArrayXd>(rho_t.data(), rho_t.size());
  snap.state.theta_pert = Eigen::Map<Eigen::ArrayXd>(theta.data(), theta.size());
  return snap;
}

void write_profile_csv(std::ostream& os, const WaveProfile& prof) {
  os << "# thermowave wave profile\n";
  os << "# wave.u_minus = " << format_g17(prof.spec.u_minus) << "\n";
  os << "# wave.u_plus = " << format_g17(prof.spec.u_plus) << "\n";
  os << "# wave.s = " << format_g17(prof.spec.s) << "\n";
  os << "# physics.epsilon = " << format_g17(prof.params.epsilon) << "\n";
  os << "# physics.delta = " << format_g17(prof.params.delta) << "\n";
  os << "# physics.kappa = " << format_g17(prof.params.kappa) << "\n";
  os << "# physics.gamma = " << format_g17(prof.params.gamma) << "\n";
  os << "# physics.theta0 = " << format_g17(prof.params.theta0) << "\n";
  os << "# M_U = " << format_g17(prof.M_U) << "\n";
  os << "# K_W = " << format_g17(prof.K_W) << "\n";
  os << "# K_S0 = " << format_g17(prof.K_S0) << "\n";
  os << "# residual_sup = " << format_g17(prof.residual_sup) << "\n";
  os << "xi,w,w_prime\n";
  for (Eigen::Index i = 0; i < prof.xi.size(); ++i) {
    os << format_g17(prof.xi[i]) << ',' << format_g17(prof.w[i]) << ','
       << format_g17(prof.w_prime[i]) << "\n";
  }
}

void write_analysis_report(std::ostream& os, const AnalysisReport& r) {
  nlohmann::json j;
  j["exponent"] = r.exponent;
  j["c16"] = r.c16;
  j["alpha"] = r.alpha;
  j["r2"] = r.r2;
  j["theta_bound_pass"] = r.theta_bound_pass;
  j["bernoulli_positive"] = r.bernoulli_positive;
  os << j.dump(2) << "\n";
}

}  // namespace thermowave
