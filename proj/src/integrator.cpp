#include "thermowave/integrator.hpp"

#include <cmath>
#include <fstream>

#include "thermowave/errors.hpp"

namespace thermowave {

namespace {

Eigen::SparseMatrix<double> laplacian_matrix(const Grid& g) {
  const double c = 1.0 / (g.dx * g.dx);
  Eigen::SparseMatrix<double> D2(g.n, g.n);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(3 * g.n);
  for (int i = 0; i < g.n; ++i) {
    trip.emplace_back(i, i, -2.0 * c);
    if (i > 0) trip.emplace_back(i, i - 1, c);
    if (i + 1 < g.n) trip.emplace_back(i, i + 1, c);
  }
  D2.setFromTriplets(trip.begin(), trip.end());
  return D2;
}

Eigen::SparseMatrix<double> identity_matrix(int n) {
  Eigen::SparseMatrix<double> I(n, n);
  I.setIdentity();
  return I;
}

void check_finite(const Field& f, const char* what) {
  if (!all_finite(f))
    throw BlowUp(std::string("non-finite values in ") + what);
}

}  // namespace

Field mech_rhs(const State& s, const BackgroundFields& bg, const PhysParams& p,
               const Grid& grid) {
  const Field rx = spatial_derivative(s.rho, 1, grid);
  const Field bracket = rx - rx.cube() - 3.0 * bg.Uprime.square() * rx -
                        3.0 * bg.Uprime * rx.square() -
                        p.gamma * s.theta_pert;
  return spatial_derivative(bracket, 1, grid) +
         p.epsilon * spatial_derivative(s.rho_t, 2, grid) -
         p.delta * spatial_derivative(s.rho, 4, grid);
}

Field thermal_rhs(const State& s, const BackgroundFields& bg,
                  const PhysParams& p, const Grid& grid) {
  const Field rxt = spatial_derivative(s.rho_t, 1, grid);
  return p.kappa * spatial_derivative(s.theta_pert, 2, grid) +
         p.epsilon * rxt.square() - p.gamma * p.theta0 * rxt +
         2.0 * p.epsilon * bg.W * rxt + bg.S0;
}

double stable_dt(const Grid& grid, const PhysParams& p, double safety,
                 double M_U, double amp_margin, double nl_diffusivity) {
  (void)p;
  if (safety <= 0.0 || safety > 1.0)
    throw SetupError("stable_dt: safety must be in (0, 1]");
  const double c_max = std::sqrt(1.0 + 3.0 * M_U * M_U + amp_margin);
  double dt = grid.dx / c_max;
  if (nl_diffusivity > 0.0)
    dt = std::min(dt, grid.dx * grid.dx / nl_diffusivity);
  return safety * dt;
}

ImexStepper::ImexStepper(const Grid& grid, const PhysParams& p,
                         const WaveProfile& profile, double dt,
                         ExtraForcing forcing, double blowup_cap)
    : grid_(grid),
      p_(p),
      profile_(&profile),
      dt_(dt),
      forcing_(std::move(forcing)),
      blowup_cap_(blowup_cap) {
  D2_ = laplacian_matrix(grid_);
  D4_ = (D2_ * D2_).pruned();
  const auto I = identity_matrix(grid_.n);
  // Both the half-step predictor (implicit Euler over dt/2) and the
  // full-step trapezoidal corrector share the same matrix.
  Eigen::SparseMatrix<double> M =
      I - (0.5 * dt_ * p_.epsilon) * D2_ + (0.25 * dt_ * dt_ * p_.delta) * D4_;
  Eigen::SparseMatrix<double> T = I - (0.5 * dt_ * p_.kappa) * D2_;
  mech_solver_.compute(M);
  if (mech_solver_.info() != Eigen::Success)
    throw LinearSolveFailure("ImexStepper: mechanical operator factorization failed");
  thermal_solver_.compute(T);
  if (thermal_solver_.info() != Eigen::Success)
    throw LinearSolveFailure("ImexStepper: thermal operator factorization failed");
  if (profile_->is_constant)
    bg_static_ = sample_background(*profile_, grid_, 0.0);
}

Field ImexStepper::explicit_mech(const Field& rho, const Field& theta,
                                 const BackgroundFields& bg, double t) const {
  const Field rx = spatial_derivative(rho, 1, grid_);
  const Field bracket = rx - rx.cube() - 3.0 * bg.Uprime.square() * rx -
                        3.0 * bg.Uprime * rx.square() - p_.gamma * theta;
  Field out = spatial_derivative(bracket, 1, grid_);
  if (forcing_.mech) {
    for (int i = 0; i < grid_.n; ++i) out[i] += forcing_.mech(grid_.x(i), t);
  }
  return out;
}

Field ImexStepper::thermal_source(const Field& rho_t,
                                  const BackgroundFields& bg, double t) const {
  const Field rxt = spatial_derivative(rho_t, 1, grid_);
  Field out = p_.epsilon * rxt.square() - p_.gamma * p_.theta0 * rxt +
              2.0 * p_.epsilon * bg.W * rxt + bg.S0;
  if (forcing_.thermal) {
    for (int i = 0; i < grid_.n; ++i)
      out[i] += forcing_.thermal(grid_.x(i), t);
  }
  return out;
}

State ImexStepper::step(const State& s) const {
  const double t = s.t;
  const double tm = (s.step + 0.5) * dt_;
  BackgroundFields bg_moving_n, bg_moving_m;
  const BackgroundFields* bgp_n = &bg_static_;
  const BackgroundFields* bgp_m = &bg_static_;
  if (!profile_->is_constant) {
    bg_moving_n = sample_background(*profile_, grid_, t);
    bg_moving_m = sample_background(*profile_, grid_, tm);
    bgp_n = &bg_moving_n;
    bgp_m = &bg_moving_m;
  }
  const BackgroundFields& bg_n = *bgp_n;
  const BackgroundFields& bg_m = *bgp_m;

  const Eigen::VectorXd rho_n = s.rho.matrix();
  const Eigen::VectorXd q_n = s.rho_t.matrix();

  // Mechanical predictor: implicit Euler over dt/2.
  const Field N_n = explicit_mech(s.rho, s.theta_pert, bg_n, t);
  Eigen::VectorXd rhs =
      q_n + 0.5 * dt_ * (N_n.matrix() - p_.delta * (D4_ * rho_n));
  Eigen::VectorXd q_star = mech_solver_.solve(rhs);
  if (mech_solver_.info() != Eigen::Success)
    throw LinearSolveFailure("ImexStepper: mechanical predictor solve failed");
  const Field rho_star = s.rho + 0.5 * dt_ * q_star.array();

  // Thermal predictor: implicit Euler over dt/2 with the fresh rho_t.
  Eigen::VectorXd trhs =
      s.theta_pert.matrix() +
      0.5 * dt_ * thermal_source(q_star.array(), bg_m, tm).matrix();
  Eigen::VectorXd theta_star = thermal_solver_.solve(trhs);
  if (thermal_solver_.info() != Eigen::Success)
    throw LinearSolveFailure("ImexStepper: thermal predictor solve failed");

  // Mechanical corrector: trapezoidal in the stiff part, midpoint in the
  // explicit part.
  const Field N_mid = explicit_mech(rho_star, theta_star.array(), bg_m, tm);
  rhs = q_n + dt_ * N_mid.matrix() + 0.5 * dt_ * p_.epsilon * (D2_ * q_n) -
        dt_ * p_.delta * (D4_ * rho_n) -
        0.25 * dt_ * dt_ * p_.delta * (D4_ * q_n);
  Eigen::VectorXd q_next = mech_solver_.solve(rhs);
  if (mech_solver_.info() != Eigen::Success)
    throw LinearSolveFailure("ImexStepper: mechanical corrector solve failed");
  const Field rho_next = s.rho + 0.5 * dt_ * (q_n + q_next).array();

  // Thermal corrector: Crank-Nicolson with the time-averaged rho_t.
  const Field q_bar = 0.5 * (q_n + q_next).array();
  trhs = s.theta_pert.matrix() +
         0.5 * dt_ * p_.kappa * (D2_ * s.theta_pert.matrix()) +
         dt_ * thermal_source(q_bar, bg_m, tm).matrix();
  Eigen::VectorXd theta_next = thermal_solver_.solve(trhs);
  if (thermal_solver_.info() != Eigen::Success)
    throw LinearSolveFailure("ImexStepper: thermal corrector solve failed");

  State out;
  out.step = s.step + 1;
  out.t = out.step * dt_;
  out.rho = rho_next;
  out.rho_t = q_next.array();
  out.theta_pert = theta_next.array();

  check_finite(out.rho, "rho");
  check_finite(out.rho_t, "rho_t");
  check_finite(out.theta_pert, "theta_pert");
  const double biggest =
      std::max({out.rho.abs().maxCoeff(), out.rho_t.abs().maxCoeff(),
                out.theta_pert.abs().maxCoeff()});
  if (biggest > blowup_cap_)
    throw BlowUp("ImexStepper: field magnitude " + std::to_string(biggest) +
                 " exceeds the blow-up cap at t = " + std::to_string(out.t));
  return out;
}

namespace {

Field realize_shape(const ShapeSpec& shape, const Grid& grid) {
  Field f = Field::Zero(grid.n);
  switch (shape.kind) {
    case ShapeSpec::Kind::Zero:
      break;
    case ShapeSpec::Kind::Gaussian: {
      for (int i = 0; i < grid.n; ++i) {
        const double z = (grid.x(i) - shape.center) / shape.width;
        f[i] = shape.amplitude * std::exp(-0.5 * z * z);
      }
      break;
    }
    case ShapeSpec::Kind::File: {
      std::ifstream in(shape.path);
      if (!in)
        throw SetupError("initial data file '" + shape.path + "' not found");
      for (int i = 0; i < grid.n; ++i) {
        if (!(in >> f[i]))
          throw SetupError("initial data file '" + shape.path +
                           "' has fewer than n values");
      }
      break;
    }
  }
  return f;
}

}  // namespace

RunSetup prepare_run(const RunConfig& cfg) {
  RunSetup setup;
  setup.grid = Grid(cfg.grid_L, cfg.grid_n);

  const PhysParams& p = cfg.physics;
  // Coupling conditions of the validity flag (gamma = 0 is the decoupled
  // special case and is allowed).
  if (p.gamma * p.epsilon * p.epsilon > 4.0 ||
      p.gamma > 0.5 * p.kappa * p.epsilon || p.gamma > 1.0)
    throw SetupError("prepare_run: coupling conditions violated (see validate-params)");

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
  setup.profile = build_profile(spec, p, cfg.profile_tol, cfg.profile_L_w);

  // Background tails must be quiet at +-L for the whole run.
  for (double t : {0.0, cfg.t_end}) {
    const BackgroundFields bg = sample_background(setup.profile, setup.grid, t);
    const double edge = std::max(std::abs(bg.Usecond[0]),
                                 std::abs(bg.Usecond[setup.grid.n - 1]));
    if (edge > cfg.far_field_tol)
      throw SetupError(
          "prepare_run: background transition layer reaches the boundary "
          "(|U''(+-L)| = " + std::to_string(edge) + " at t = " +
          std::to_string(t) + "); enlarge grid.L");
  }

  setup.init.rho0 = realize_shape(cfg.rho0, setup.grid);
  setup.init.rho0_t = realize_shape(cfg.rho0_t, setup.grid);
  setup.init.phi = realize_shape(cfg.phi, setup.grid);
  if ((setup.init.phi <= -p.theta0).any())
    throw SetupError("prepare_run: initial phi violates phi > -theta0");
  for (const Field* f : {&setup.init.rho0, &setup.init.rho0_t, &setup.init.phi}) {
    const double edge = std::max(std::abs((*f)[0]), std::abs((*f)[setup.grid.n - 1]));
    if (edge > cfg.far_field_tol)
      throw SetupError("prepare_run: initial data does not decay at the boundary");
  }

  const double dt_target =
      stable_dt(setup.grid, p, cfg.safety, setup.profile.M_U, cfg.amp_margin,
                cfg.nl_diffusivity);
  if (cfg.t_end > 0.0) {
    setup.n_steps = static_cast<long>(std::ceil(cfg.t_end / dt_target - 1e-12));
    setup.dt = cfg.t_end / static_cast<double>(setup.n_steps);
  } else {
    setup.n_steps = 0;
    setup.dt = dt_target;
  }
  return setup;
}

RunResult simulate(const RunConfig& cfg, const SimHooks* hooks,
                   const State* resume_from, const ExtraForcing* forcing) {
  RunSetup setup = prepare_run(cfg);
  RunResult result;
  result.profile = setup.profile;
  result.dt = setup.dt;
  result.n_steps = setup.n_steps;

  State s;
  if (resume_from) {
    s = *resume_from;
    if (s.rho.size() != setup.grid.n)
      throw GridMismatch("simulate: resume state grid does not match config");
  } else {
    s.t = 0.0;
    s.step = 0;
    s.rho = setup.init.rho0;
    s.rho_t = setup.init.rho0_t;
    s.theta_pert = setup.init.phi;
  }

  ImexStepper stepper(setup.grid, cfg.physics, setup.profile, setup.dt,
                      forcing ? *forcing : ExtraForcing{}, cfg.blowup_cap);

  auto emit_record = [&](const State& st) {
    const BackgroundFields bg = sample_background(setup.profile, setup.grid, st.t);
    const VState vs = to_v(st, cfg.physics);
    EnergyRecord rec = compute_record(st, vs, bg, setup.profile.M_U,
                                      cfg.physics, setup.grid, setup.dt);
    if (rec.min_abs_temp <= 0.0)
      throw PositivityViolation(
          "simulate: absolute temperature reached " +
              std::to_string(rec.min_abs_temp) + " at t = " +
              std::to_string(st.t),
          st.t);
    result.records.push_back(rec);
    if (hooks && hooks->on_record) hooks->on_record(rec);
  };
  auto emit_snapshot = [&](const State& st) {
    result.snapshots.push_back(st);
    if (hooks && hooks->on_snapshot) hooks->on_snapshot(st, st.step);
  };

  const long n = setup.n_steps;
  if (s.step % cfg.record_every == 0 || s.step == n) emit_record(s);
  if (cfg.snapshot_every > 0 && s.step % cfg.snapshot_every == 0)
    emit_snapshot(s);

  while (s.step < n) {
    s = stepper.step(s);
    if (s.step % cfg.record_every == 0 || s.step == n) emit_record(s);
    if ((cfg.snapshot_every > 0 && s.step % cfg.snapshot_every == 0) ||
        s.step == n)
      emit_snapshot(s);
  }
  if (n == 0 && result.snapshots.empty()) emit_snapshot(s);
  return result;
}

}  // namespace thermowave
