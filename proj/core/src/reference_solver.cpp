#include "sswme/reference_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sswme {

void ReferenceConfig::validate() const {
  if (!(x_min < x_max)) throw std::invalid_argument("domain must have x_min < x_max");
  if (nx < 4) throw std::invalid_argument("at least 4 cells required");
  if (nzeta < 3) throw std::invalid_argument("at least 3 depth levels required");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must be in (0, 1]");
  if (t_end < 0.0) throw std::invalid_argument("t_end must be nonnegative");
  for (double t : output_times)
    if (t < 0.0 || t > t_end)
      throw std::invalid_argument("output times must lie in [0, t_end]");
}

ReferenceField reference_initial_smooth(const ReferenceConfig& config) {
  config.validate();
  ReferenceField f;
  f.time = 0.0;
  f.h.resize(config.nx);
  f.u.resize(config.nx, config.nzeta);
  for (int i = 0; i < config.nx; ++i) {
    f.h[i] = smooth_wave_height(config.cell_center(i));
    for (int j = 0; j < config.nzeta; ++j)
      f.u(i, j) = 0.25 + 0.25 * (1.0 - 2.0 * config.zeta(j));
  }
  return f;
}

ReferenceField reference_initial_fast(const ReferenceConfig& config) {
  config.validate();
  const PiecewisePoly profile = steep_initial_profile();
  ReferenceField f;
  f.time = 0.0;
  f.h.resize(config.nx);
  f.u.resize(config.nx, config.nzeta);
  for (int j = 0; j < config.nzeta; ++j) {
    const double uj = profile.eval(config.zeta(j));
    for (int i = 0; i < config.nx; ++i) f.u(i, j) = uj;
  }
  for (int i = 0; i < config.nx; ++i)
    f.h[i] = smooth_wave_height(config.cell_center(i));
  return f;
}

namespace {

double trapezoid_average(const Eigen::MatrixXd& u, int i) {
  const int nz = static_cast<int>(u.cols());
  double acc = 0.5 * (u(i, 0) + u(i, nz - 1));
  for (int j = 1; j < nz - 1; ++j) acc += u(i, j);
  return acc / (nz - 1);
}

[[noreturn]] void throw_instability(double time, int cell) {
  std::ostringstream msg;
  msg << "reference solution became non-finite at t = " << time << ", cell " << cell;
  throw std::runtime_error(msg.str());
}

/// Thomas algorithm for a tridiagonal system; diagonals a (sub), b, c (super).
void solve_tridiagonal(std::vector<double>& a, std::vector<double>& b,
                       std::vector<double>& c, std::vector<double>& d) {
  const int n = static_cast<int>(b.size());
  for (int k = 1; k < n; ++k) {
    const double m = a[k] / b[k - 1];
    b[k] -= m * c[k - 1];
    d[k] -= m * d[k - 1];
  }
  d[n - 1] /= b[n - 1];
  for (int k = n - 2; k >= 0; --k) d[k] = (d[k] - c[k + 1] * d[k + 1]) / b[k];
}

}  // namespace

double depth_average(const ReferenceField& field, int i) {
  return trapezoid_average(field.u, i);
}

double reference_max_dt(const ReferenceField& field, const ReferenceConfig& config) {
  const int nx = field.nx();
  const int nz = field.nzeta();
  const double g = config.params.g;
  double amax = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double c = std::sqrt(g * field.h[i]);
    for (int j = 0; j < nz; ++j) amax = std::max(amax, std::abs(field.u(i, j)) + c);
  }
  double dt = config.dx() / amax;

  // Vertical transport speed: W = cumulative integral of the divergence
  // mismatch; bound it by its coarse estimate from central differences.
  const double dx = config.dx();
  for (int i = 0; i < nx; ++i) {
    const int im = (i + nx - 1) % nx;
    const int ip = (i + 1) % nx;
    double wmax = 0.0;
    for (int j = 0; j < nz; ++j) {
      const double dq =
          (field.h[ip] * field.u(ip, j) - field.h[im] * field.u(im, j)) / (2.0 * dx);
      wmax = std::max(wmax, std::abs(dq));
    }
    if (wmax > 0.0) dt = std::min(dt, config.dzeta() / (2.0 * wmax));
  }
  return dt;
}

ReferenceField reference_step(const ReferenceField& field,
                              const ReferenceConfig& config, double dt) {
  const int nx = field.nx();
  const int nz = field.nzeta();
  const double dx = config.dx();
  const double dz = config.dzeta();
  const double g = config.params.g;
  const double nu = config.params.nu;
  const double lambda = config.params.lambda;

  std::vector<double> um(nx);
  for (int i = 0; i < nx; ++i) um[i] = trapezoid_average(field.u, i);

  // Interface wave speeds: max over levels of |u| + sqrt(g h) on both sides.
  std::vector<double> a(nx);
  for (int e = 0; e < nx; ++e) {
    const int r = (e + 1) % nx;
    double al = std::sqrt(g * field.h[e]), ar = std::sqrt(g * field.h[r]);
    double sl = 0.0, sr = 0.0;
    for (int j = 0; j < nz; ++j) {
      sl = std::max(sl, std::abs(field.u(e, j)));
      sr = std::max(sr, std::abs(field.u(r, j)));
    }
    a[e] = std::max(sl + al, sr + ar);
  }

  ReferenceField out;
  out.time = field.time + dt;
  out.h.resize(nx);
  out.u.resize(nx, nz);

  // Mass: Rusanov on h with flux h u_m.
  std::vector<double> fh(nx);
  for (int e = 0; e < nx; ++e) {
    const int r = (e + 1) % nx;
    fh[e] = 0.5 * (field.h[e] * um[e] + field.h[r] * um[r]) -
            0.5 * a[e] * (field.h[r] - field.h[e]);
  }
  for (int i = 0; i < nx; ++i) {
    const int im = (i + nx - 1) % nx;
    out.h[i] = field.h[i] - dt / dx * (fh[i] - fh[im]);
    if (!(out.h[i] > 0.0) || !std::isfinite(out.h[i])) throw_instability(out.time, i);
  }

  // Momentum per level: Rusanov on q_j = h u_j with flux h u_j^2 + g h^2 / 2,
  // then the explicit vertical coupling.
  Eigen::MatrixXd q(nx, nz);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < nz; ++j) q(i, j) = field.h[i] * field.u(i, j);

  Eigen::MatrixXd qnew(nx, nz);
  std::vector<double> w(nz), gz(nz + 1);
  for (int i = 0; i < nx; ++i) {
    const int im = (i + nx - 1) % nx;
    const int ip = (i + 1) % nx;

    // W(zeta) = int_0^zeta (dbar - d(zeta')) dzeta' with d = dq/dx per level
    // and dbar its depth average; W vanishes at bottom and surface.
    double dbar = 0.0;
    std::vector<double> d(nz);
    for (int j = 0; j < nz; ++j)
      d[j] = (q(ip, j) - q(im, j)) / (2.0 * dx);
    for (int j = 0; j < nz; ++j)
      dbar += (j == 0 || j == nz - 1 ? 0.5 : 1.0) * d[j];
    dbar /= (nz - 1);
    w[0] = 0.0;
    for (int j = 1; j < nz; ++j)
      w[j] = w[j - 1] + 0.5 * dz * ((dbar - d[j - 1]) + (dbar - d[j]));

    // Upwind fluxes of u W across the interior level interfaces.
    gz[0] = gz[nz] = 0.0;
    for (int j = 1; j < nz; ++j) {
      const double wf = 0.5 * (w[j - 1] + w[j]);
      gz[j] = wf * (wf > 0.0 ? field.u(i, j - 1) : field.u(i, j));
    }

    for (int j = 0; j < nz; ++j) {
      const double fl = 0.5 * (q(im, j) * field.u(im, j) + q(i, j) * field.u(i, j) +
                               0.5 * g * (field.h[im] * field.h[im] +
                                          field.h[i] * field.h[i])) -
                        0.5 * a[im] * (q(i, j) - q(im, j));
      const double fr = 0.5 * (q(i, j) * field.u(i, j) + q(ip, j) * field.u(ip, j) +
                               0.5 * g * (field.h[i] * field.h[i] +
                                          field.h[ip] * field.h[ip])) -
                        0.5 * a[i] * (q(ip, j) - q(i, j));
      qnew(i, j) = q(i, j) - dt / dx * (fr - fl) - dt / dz * (gz[j + 1] - gz[j]);
    }
  }

  // Vertical viscosity, implicit per column: u - r L u = u*, r = dt nu / (h dz)^2,
  // with the slip-law ghost below the bottom and zero gradient above the surface.
  for (int i = 0; i < nx; ++i) {
    const double h = out.h[i];
    std::vector<double> rhs(nz);
    for (int j = 0; j < nz; ++j) rhs[j] = qnew(i, j) / h;

    if (nu > 0.0) {
      const double r = dt * nu / (h * h * dz * dz);
      std::vector<double> sub(nz, -r), diag(nz, 1.0 + 2.0 * r), sup(nz, -r);
      diag[0] = 1.0 + r + r * dz * h / lambda;  // u_{-1} = u_0 - dz (h/lambda) u_0
      diag[nz - 1] = 1.0 + r;                   // u_{nz} = u_{nz-1}
      solve_tridiagonal(sub, diag, sup, rhs);
    }
    for (int j = 0; j < nz; ++j) {
      if (!std::isfinite(rhs[j])) throw_instability(out.time, i);
      out.u(i, j) = rhs[j];
    }
  }
  return out;
}

ReferenceTrajectory simulate_reference(const ReferenceConfig& config,
                                       ReferenceField ic) {
  config.validate();
  if (ic.nx() != config.nx || ic.nzeta() != config.nzeta)
    throw std::invalid_argument("initial field size mismatch");

  std::vector<double> outs = config.output_times;
  if (outs.empty()) outs.push_back(config.t_end);
  std::sort(outs.begin(), outs.end());

  ReferenceTrajectory traj;
  traj.snapshots.push_back(ic);
  ReferenceField cur = std::move(ic);

  for (double t_out : outs) {
    while (cur.time < t_out - 1e-13) {
      double dt = config.cfl * reference_max_dt(cur, config);
      dt = std::min(dt, t_out - cur.time);
      cur = reference_step(cur, config, dt);
    }
    cur.time = t_out;
    traj.snapshots.push_back(cur);
  }
  return traj;
}

MomentFields moments_of_reference(const ReferenceField& field) {
  const int nx = field.nx();
  const int nz = field.nzeta();
  const double dz = 1.0 / (nz - 1);

  MomentFields out;
  out.h.resize(nx);
  out.u_m.resize(nx);
  out.alpha1.resize(nx);
  out.alpha2.resize(nx);
  for (int i = 0; i < nx; ++i) {
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (int j = 0; j < nz; ++j) {
      const double z = j * dz;
      const double wgt = (j == 0 || j == nz - 1) ? 0.5 * dz : dz;
      const double u = field.u(i, j);
      m0 += wgt * u;
      m1 += wgt * u * (1.0 - 2.0 * z);
      m2 += wgt * u * (6.0 * z * z - 6.0 * z + 1.0);
    }
    out.h[i] = field.h[i];
    out.u_m[i] = m0;
    out.alpha1[i] = 3.0 * m1;
    out.alpha2[i] = 5.0 * m2;
  }
  return out;
}

}  // namespace sswme
