// thermowave: command-line front end for the coupled thermoelastic
// phase-transition simulator. Subcommands: validate-params, make-wave,
// simulate, mms, analyze. Exit codes: 0 success, 1 domain failure,
// 2 usage/parse failure.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "thermowave/analysis.hpp"
#include "thermowave/config.hpp"
#include "thermowave/errors.hpp"
#include "thermowave/integrator.hpp"
#include "thermowave/io.hpp"
#include "thermowave/verification.hpp"

namespace fs = std::filesystem;
using namespace thermowave;

namespace {

int cmd_validate_params(const std::string& config_path) {
  const RunConfig cfg = parse_config(config_path);
  const ValidationReport report = validate_params(cfg.physics);
  for (const auto& c : report.conditions) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
              << "  (margin " << format_g17(c.margin) << ")\n";
  }
  if (!report.all_pass()) {
    std::cout << "validation failed\n";
    return 1;
  }
  std::cout << "all conditions satisfied\n";
  return 0;
}

int cmd_make_wave(const std::string& config_path, const std::string& out_path) {
  const RunConfig cfg = parse_config(config_path);
  WaveSpec spec;
  if (cfg.constant_background) {
    spec.u_minus = spec.u_plus = cfg.background_value;
    spec.s = 0.0;
  } else {
    spec.u_minus = cfg.wave_u_minus;
    spec.u_plus = cfg.wave_u_plus;
    spec.s = (cfg.wave_s_sign < 0 ? -1.0 : 1.0) *
             rankine_hugoniot_speed(spec.u_minus, spec.u_plus);
  }
  const WaveProfile prof =
      build_profile(spec, cfg.physics, cfg.profile_tol, cfg.profile_L_w);
  std::ofstream out(out_path);
  if (!out) throw SetupError("cannot write profile to '" + out_path + "'");
  write_profile_csv(out, prof);
  std::cout << "M_U = " << format_g17(prof.M_U) << "\n";
  std::cout << "s = " << format_g17(prof.spec.s) << "\n";
  std::cout << "K_W = " << format_g17(prof.K_W) << "\n";
  std::cout << "K_S0 = " << format_g17(prof.K_S0) << "\n";
  std::cout << "residual_sup = " << format_g17(prof.residual_sup) << "\n";
  std::cout << "3 M_U^2 = " << format_g17(3.0 * prof.M_U * prof.M_U)
            << " < 1: admissible\n";
  std::cout << "profile written to " << out_path << "\n";
  return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& out_override,
                 const std::string& resume_path) {
  RunConfig cfg = parse_config(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  fs::create_directories(cfg.out_dir);
  const fs::path outdir(cfg.out_dir);

  Snapshot resume;
  const State* resume_from = nullptr;
  if (!resume_path.empty()) {
    resume = read_snapshot(resume_path);
    if (resume.grid_n != cfg.grid_n || resume.grid_L != cfg.grid_L)
      throw GridMismatch("resume snapshot grid does not match the config");
    resume_from = &resume.state;
  }

  std::ofstream series(outdir / "series.csv");
  if (!series) throw SetupError("cannot open series.csv for writing");
  write_series_header(series);

  RunSetup setup = prepare_run(cfg);
  SimHooks hooks;
  hooks.on_record = [&](const EnergyRecord& r) {
    write_series_row(series, r);
    series.flush();  // keep the partial series on disk if the run dies
  };
  hooks.on_snapshot = [&](const State& s, long step) {
    char name[40];
    std::snprintf(name, sizeof(name), "snapshot_%08ld.txt", step);
    std::ofstream snap(outdir / name);
    write_snapshot(snap, s, setup.grid, cfg.physics, setup.profile.spec,
                   setup.dt);
  };

  const auto wall0 = std::chrono::steady_clock::now();
  RunResult result = simulate(cfg, &hooks, resume_from);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0)
          .count();

  const double t1 = cfg.window_t1 > 0 ? cfg.window_t1 : cfg.t_end;
  const AnalysisReport report =
      analyze_series(result.records, cfg.window_t0, t1);
  {
    std::ofstream rf(outdir / "analysis.json");
    write_analysis_report(rf, report);
  }
  {
    std::ofstream mf(outdir / "manifest.txt");
    mf << "config = " << config_path << "\n";
    mf << "dt = " << format_g17(result.dt) << "\n";
    mf << "n_steps = " << result.n_steps << "\n";
    mf << "records = " << result.records.size() << "\n";
    mf << "snapshots = " << result.snapshots.size() << "\n";
    mf << "wall_seconds = " << wall << "\n";
  }
  std::cout << "steps = " << result.n_steps << ", dt = " << result.dt << "\n";
  std::cout << "records = " << result.records.size() << ", snapshots = "
            << result.snapshots.size() << "\n";
  std::cout << "exponent = " << report.exponent
            << ", c16 = " << report.c16 << ", alpha = " << report.alpha
            << "\n";
  std::cout << "theta_bound_pass = " << (report.theta_bound_pass ? "true" : "false")
            << ", bernoulli_positive = "
            << (report.bernoulli_positive ? "true" : "false") << "\n";
  std::cout << "outputs in " << cfg.out_dir << "\n";
  return 0;
}

int cmd_mms(const std::string& config_path, const std::string& out_dir,
            int levels) {
  const RunConfig cfg = parse_config(config_path);
  Manufactured m;
  m.p = cfg.physics;
  m.c = cfg.constant_background ? cfg.background_value : 0.2;
  const ConvergenceStudy study = mms_convergence(m, levels);

  fs::create_directories(out_dir);
  std::ofstream out(fs::path(out_dir) / "convergence.csv");
  out << "level,dx,dt,err_rho,err_theta,order_rho,order_theta\n";
  out << "# spatial refinement\n";
  auto row = [&out](const ConvergenceRow& r) {
    out << r.level << ',' << format_g17(r.dx) << ',' << format_g17(r.dt) << ','
        << format_g17(r.err_rho) << ',' << format_g17(r.err_theta) << ','
        << format_g17(r.order_rho) << ',' << format_g17(r.order_theta) << "\n";
  };
  for (const auto& r : study.spatial) row(r);
  out << "# temporal refinement\n";
  for (const auto& r : study.temporal) row(r);

  const auto& sp = study.spatial.back();
  const auto& tp = study.temporal.back();
  std::cout << "spatial order: rho " << sp.order_rho << ", theta "
            << sp.order_theta << "\n";
  std::cout << "temporal order: rho " << tp.order_rho << ", theta "
            << tp.order_theta << "\n";
  std::cout << "report written to " << out_dir << "/convergence.csv\n";
  return 0;
}

int cmd_analyze(const std::string& config_path, const std::string& window,
                const std::string& out_override) {
  RunConfig cfg = parse_config(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  double t0 = cfg.window_t0;
  double t1 = cfg.window_t1 > 0 ? cfg.window_t1 : cfg.t_end;
  if (!window.empty()) {
    const auto colon = window.find(':');
    if (colon == std::string::npos)
      throw ParseError("--window must be T0:T1");
    try {
      t0 = std::stod(window.substr(0, colon));
      t1 = std::stod(window.substr(colon + 1));
    } catch (...) {
      throw ParseError("--window must be T0:T1 with numeric bounds");
    }
  }
  const auto series = read_series_csv(
      (fs::path(cfg.out_dir) / "series.csv").string());
  const AnalysisReport report = analyze_series(series, t0, t1);
  std::ofstream rf(fs::path(cfg.out_dir) / "analysis.json");
  write_analysis_report(rf, report);
  write_analysis_report(std::cout, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-D coupled thermoelastic phase-transition simulator"};
  app.require_subcommand(1);

  std::string config_path, resume_path, window;
  std::string wave_out = "profile.csv";
  std::string sim_out, mms_out = ".", analyze_out;
  int levels = 3;

  auto* validate = app.add_subcommand("validate-params",
                                      "check the coupling conditions");
  validate->add_option("--config", config_path, "config file")->required();

  auto* makewave = app.add_subcommand("make-wave",
                                      "construct the traveling-wave profile");
  makewave->add_option("--config", config_path, "config file")->required();
  makewave->add_option("--out", wave_out, "profile CSV path");

  auto* simulate_cmd = app.add_subcommand("simulate", "run the full pipeline");
  simulate_cmd->add_option("--config", config_path, "config file")->required();
  simulate_cmd->add_option("--out", sim_out, "output directory override");
  simulate_cmd->add_option("--resume", resume_path, "snapshot to resume from");

  auto* mms_cmd = app.add_subcommand("mms", "manufactured-solution convergence study");
  mms_cmd->add_option("--config", config_path, "config file")->required();
  mms_cmd->add_option("--out", mms_out, "output directory");
  mms_cmd->add_option("--levels", levels, "refinement levels (>= 2)");

  auto* analyze_cmd = app.add_subcommand("analyze",
                                         "re-run analysis on an existing series.csv");
  analyze_cmd->add_option("--config", config_path, "config file")->required();
  analyze_cmd->add_option("--window", window, "fit window T0:T1");
  analyze_cmd->add_option("--out", analyze_out, "output directory override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate_params(config_path);
    if (makewave->parsed()) return cmd_make_wave(config_path, wave_out);
    if (simulate_cmd->parsed())
      return cmd_simulate(config_path, sim_out, resume_path);
    if (mms_cmd->parsed()) {
      if (levels < 2) {
        std::cerr << "error: --levels must be >= 2\n";
        return 2;
      }
      return cmd_mms(config_path, mms_out, levels);
    }
    if (analyze_cmd->parsed())
      return cmd_analyze(config_path, window, analyze_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
