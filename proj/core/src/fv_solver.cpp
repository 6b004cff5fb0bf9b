#include "sswme/fv_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sswme/hyperbolicity.hpp"

namespace sswme {

void SimConfig::validate() const {
  if (!(x_min < x_max)) throw std::invalid_argument("domain must have x_min < x_max");
  if (nx < 4) throw std::invalid_argument("at least 4 cells required");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must be in (0, 1]");
  if (t_end < 0.0) throw std::invalid_argument("t_end must be nonnegative");
  for (double t : output_times)
    if (t < 0.0 || t > t_end)
      throw std::invalid_argument("output times must lie in [0, t_end]");
}

double smooth_wave_height(double x) {
  return 1.0 + std::exp(3.0 * std::cos(M_PI * (x + 0.5)) - 4.0);
}

StateField initial_condition_smooth(const SimConfig& config, const Model& model) {
  config.validate();
  const int n = model.num_moments();
  const Eigen::VectorXd s = 0.25 * model.transform().linear_profile;

  StateField field;
  field.time = 0.0;
  field.cells.resize(config.nx);
  for (int i = 0; i < config.nx; ++i) {
    const double h = smooth_wave_height(config.cell_center(i));
    StateVec u(n + 2);
    u(0) = h;
    u(1) = h * 0.25;
    u.tail(n) = h * s;
    field.cells[i] = u;
  }
  return field;
}

StateField initial_condition_fast(const SimConfig& config, const Model& model) {
  config.validate();
  const int n = model.num_moments();
  const ProfileDecomposition dec =
      project_profile(steep_initial_profile(), model.basis());

  StateField field;
  field.time = 0.0;
  field.cells.resize(config.nx);
  for (int i = 0; i < config.nx; ++i) {
    const double h = smooth_wave_height(config.cell_center(i));
    StateVec u(n + 2);
    u(0) = h;
    u(1) = h * dec.u_m;
    for (int k = 0; k < n; ++k) u(2 + k) = h * dec.s[k];
    field.cells[i] = u;
  }
  return field;
}

namespace {

double cell_speed(const Model& model, const StateVec& u) {
  const SpeedSpectrum sp = spectrum(model.transport_matrix(u));
  double worst = 0.0;
  for (Eigen::Index k = 0; k < sp.eigenvalues.size(); ++k)
    worst = std::max(worst, std::abs(sp.eigenvalues(k).real()) +
                                std::abs(sp.eigenvalues(k).imag()));
  return worst;
}

[[noreturn]] void throw_instability(double time, int cell) {
  std::ostringstream msg;
  msg << "solution became non-finite at t = " << time << ", cell " << cell;
  throw std::runtime_error(msg.str());
}

}  // namespace

double max_speed(const Model& model, const StateField& field) {
  if (field.cells.empty()) throw std::invalid_argument("empty state field");
  double worst = 0.0;
  for (const StateVec& u : field.cells) worst = std::max(worst, cell_speed(model, u));
  return worst;
}

StateField step(const Model& model, const StateField& field, double dt, double dx) {
  const int nx = field.nx();
  const int n = model.num_moments();
  if (nx < 4) throw std::invalid_argument("at least 4 cells required");
  if (!(dt > 0.0) || !(dx > 0.0)) throw std::invalid_argument("dt and dx must be positive");
  if (model.params().bottom_slope)
    throw std::invalid_argument("the finite-volume scheme assumes a flat bottom");

  // Per-interface data; interface e sits between cells e and e+1 (periodic).
  std::vector<Eigen::VectorXd> diss(nx), central(nx);
  std::vector<double> speeds(nx);
  const bool reg = model.regularized();

  for (int e = 0; e < nx; ++e) {
    const StateVec& ul = field.cells[e];
    const StateVec& ur = field.cells[(e + 1) % nx];
    const double a = std::max(cell_speed(model, ul), cell_speed(model, ur));
    speeds[e] = a;
    const StateVec delta = ur - ul;
    diss[e] = 0.5 * a * delta;

    const StateVec mean = 0.5 * (ul + ur);
    if (reg) {
      // Quasilinear moment rows from the regularized matrix; rows 1-2 keep
      // the physical flux so mass and momentum stay conservative.
      central[e] = model.regularized_system_matrix(mean) * delta;
    } else {
      central[e] = model.nonconservative_matrix(mean) * delta;
    }
  }

  const double cfl_speed = *std::max_element(speeds.begin(), speeds.end());
  if (dt * cfl_speed > dx * (1.0 + 1e-12))
    throw std::runtime_error("CFL violation: dt exceeds dx / max_speed");

  std::vector<StateVec> fluxes(nx);
  for (int i = 0; i < nx; ++i) fluxes[i] = model.flux(field.cells[i]);

  StateField out;
  out.time = field.time + dt;
  out.cells.resize(nx);
  const double lam = dt / dx;

  for (int i = 0; i < nx; ++i) {
    const int im = (i + nx - 1) % nx;
    const int ip = (i + 1) % nx;
    StateVec u = field.cells[i];

    // Conservative rows: Rusanov fluxes, which telescope over the ring.
    StateVec cons = u - lam * (0.5 * (fluxes[ip] - fluxes[im]) - (diss[i] - diss[im]));
    u.head(2) = cons.head(2);

    if (reg) {
      u.tail(n) = field.cells[i].tail(n) -
                  lam * (0.5 * (central[i] + central[im]) - (diss[i] - diss[im])).tail(n);
    } else {
      u.tail(n) = cons.tail(n) + lam * 0.5 * (central[i] + central[im]).tail(n);
    }

    out.cells[i] = u;
  }

  // Friction: d(h v)/dt = -G(h) v is linear in v = (u_m, s), solved implicitly
  // per cell so the nu/h and nu/lambda terms impose no time-step limit.
  if (model.params().nu > 0.0) {
    for (int i = 0; i < nx; ++i) {
      StateVec& u = out.cells[i];
      const double h = u(0);
      if (!(h > 0.0)) throw_instability(out.time, i);
      const Eigen::MatrixXd g = model.friction_matrix(h);
      const Eigen::MatrixXd lhs =
          h * Eigen::MatrixXd::Identity(n + 1, n + 1) + dt * g;
      const Eigen::VectorXd hv = u.tail(n + 1);
      u.tail(n + 1) = h * lhs.partialPivLu().solve(hv);
    }
  }

  for (int i = 0; i < nx; ++i) {
    if (!out.cells[i].allFinite() || !(out.cells[i](0) > 0.0))
      throw_instability(out.time, i);
  }
  return out;
}

Trajectory simulate(const Model& model, const SimConfig& config, StateField ic,
                    const std::vector<double>* dt_schedule) {
  config.validate();
  if (ic.nx() != config.nx) throw std::invalid_argument("initial field size mismatch");

  std::vector<double> outs = config.output_times;
  if (outs.empty()) outs.push_back(config.t_end);
  std::sort(outs.begin(), outs.end());

  Trajectory traj;
  traj.snapshots.push_back(ic);

  StateField cur = std::move(ic);
  const double dx = config.dx();
  size_t sched_pos = 0;

  for (double t_out : outs) {
    while (cur.time < t_out - 1e-13) {
      double dt;
      if (dt_schedule) {
        if (sched_pos >= dt_schedule->size())
          throw std::runtime_error("dt schedule exhausted before reaching t_end");
        dt = (*dt_schedule)[sched_pos++];
      } else {
        dt = config.cfl * dx / max_speed(model, cur);
        dt = std::min(dt, t_out - cur.time);
      }
      cur = step(model, cur, dt, dx);
      traj.dt_history.push_back(dt);
    }
    cur.time = t_out;
    traj.snapshots.push_back(cur);
  }
  return traj;
}

double rel_l1_error(const std::vector<double>& v, const std::vector<double>& ref) {
  if (v.size() != ref.size()) throw std::invalid_argument("field size mismatch");
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    num += std::abs(v[i] - ref[i]);
    den += std::abs(ref[i]);
  }
  if (den == 0.0) throw std::invalid_argument("reference field is identically zero");
  return num / den;
}

MomentFields moments_of_state(const Model& model, const StateField& field) {
  MomentFields out;
  out.h.reserve(field.nx());
  out.u_m.reserve(field.nx());
  out.alpha1.reserve(field.nx());
  out.alpha2.reserve(field.nx());
  for (const StateVec& u : field.cells) {
    const Primitive p = model.primitive(u);
    out.h.push_back(p.h);
    out.u_m.push_back(p.u_m);
    out.alpha1.push_back(model.transform().alpha_row.dot(p.s));
    out.alpha2.push_back(model.transform().alpha2_row.dot(p.s));
  }
  return out;
}

}  // namespace sswme
