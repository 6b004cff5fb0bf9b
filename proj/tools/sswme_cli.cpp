#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sswme/experiments.hpp"
#include "sswme/fv_solver.hpp"
#include "sswme/hyperbolicity.hpp"
#include "sswme/io.hpp"
#include "sswme/model.hpp"
#include "sswme/reference_solver.hpp"

namespace fs = std::filesystem;
using namespace sswme;

namespace {

std::string out_path(const std::string& dir, const std::string& file) {
  fs::create_directories(dir);
  return (fs::path(dir) / file).string();
}

std::string time_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", t);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

Eigen::VectorXd parse_vector(const std::string& s, int expect) {
  const auto parts = split(s, ',');
  if (static_cast<int>(parts.size()) != expect)
    throw std::invalid_argument("expected " + std::to_string(expect) +
                                " comma-separated values, got '" + s + "'");
  Eigen::VectorXd v(expect);
  for (int i = 0; i < expect; ++i) v(i) = std::stod(parts[i]);
  return v;
}

void manifest_add_params(RunManifest& m, const PhysicalParams& p) {
  m.set("g", p.g);
  m.set("nu", p.nu);
  m.set("lambda", p.lambda);
}

void manifest_add_sim(RunManifest& m, const SimConfig& c) {
  m.set("x_min", c.x_min);
  m.set("x_max", c.x_max);
  m.set("nx", c.nx);
  m.set("t_end", c.t_end);
  m.set("cfl", c.cfl);
}

int cmd_basis(const std::string& basis_id, const std::string& out, int samples) {
  const SplineBasis basis = named_basis(basis_id);
  write_basis_json(out_path(out, "basis.json"), basis);
  write_basis_samples_csv(out_path(out, "basis_samples.csv"), basis, samples);
  RunManifest m = make_manifest("basis");
  m.set("basis", basis_id);
  m.set("samples", samples);
  m.write(out_path(out, "manifest"));
  return 0;
}

int cmd_tensors(const std::string& basis_id, const std::string& out) {
  const SplineBasis basis = named_basis(basis_id);
  write_tensor_dump(out_path(out, "tensors.txt"), basis, compute_tensors(basis));
  RunManifest m = make_manifest("tensors");
  m.set("basis", basis_id);
  m.write(out_path(out, "manifest"));
  return 0;
}

int cmd_catalogue(const std::vector<std::string>& bases, const std::string& out) {
  std::ofstream f(out_path(out, "catalogue.txt"));
  if (!f) throw std::runtime_error("cannot open catalogue output");
  for (const std::string& id : bases) {
    const auto model = make_model(id, PhysicalParams{});
    const auto& t = model->tensors();
    const auto& bt = model->transform();
    f << "model SSWME-" << id << "\n  N " << model->num_moments() << "  degree "
      << model->basis().degree << "\n";
    f << "  M\n";
    for (int i = 0; i < t.n; ++i) {
      f << "   ";
      for (int j = 0; j < t.n; ++j) f << " " << to_string(t.gram_rat[i][j]);
      f << "\n";
    }
    f << "  V0  ";
    for (int i = 0; i < t.n; ++i) f << " " << to_string(t.bottom_rat[i]);
    f << "\n  C\n";
    for (int i = 0; i < t.n; ++i) {
      f << "   ";
      for (int j = 0; j < t.n; ++j) f << " " << to_string(t.dgram_rat[i][j]);
      f << "\n";
    }
    f << "  linear-profile weights ";
    for (int i = 0; i < t.n; ++i) f << " " << to_string(bt.linear_profile_rat[i]);
    f << "\n\n";
  }
  RunManifest m = make_manifest("catalogue");
  std::string joined;
  for (const auto& b : bases) joined += (joined.empty() ? "" : ",") + b;
  m.set("bases", joined);
  m.write(out_path(out, "manifest"));
  return 0;
}

int cmd_scan(const std::string& basis_id, bool regularized, double min1, double max1,
             double min2, double max2, int res1, int res2, const std::string& origin,
             const std::string& dir1, const std::string& dir2, const std::string& out) {
  const auto model = make_model(basis_id, PhysicalParams{}, regularized);
  std::optional<SliceDef> slice;
  if (!origin.empty() || !dir1.empty() || !dir2.empty()) {
    const int n = model->num_moments();
    SliceDef sd;
    sd.origin = origin.empty() ? Eigen::VectorXd::Zero(n).eval() : parse_vector(origin, n);
    if (dir1.empty() || dir2.empty())
      throw std::invalid_argument("slice requires both --dir1 and --dir2");
    sd.dir1 = parse_vector(dir1, n);
    sd.dir2 = parse_vector(dir2, n);
    slice = sd;
  }
  const HyperbolicityMap map =
      scan_region(*model, {min1, max1}, {min2, max2}, res1, res2, slice);
  write_scan_csv(out_path(out, "scan.csv"), map);

  RunManifest m = make_manifest("hyperbolicity-scan");
  m.set("basis", basis_id);
  m.set("regularized", regularized);
  m.set("range1", std::to_string(min1) + ".." + std::to_string(max1));
  m.set("range2", std::to_string(min2) + ".." + std::to_string(max2));
  m.set("resolution", std::to_string(res1) + "x" + std::to_string(res2));
  if (slice) {
    m.set("slice_origin", origin.empty() ? std::string("0") : origin);
    m.set("slice_dir1", dir1);
    m.set("slice_dir2", dir2);
  }
  m.write(out_path(out, "manifest"));
  return 0;
}

int cmd_simulate(const std::string& basis_id, bool regularized,
                 const std::string& experiment, int nx, double cfl, double t_end,
                 const std::string& outputs, const std::string& out) {
  Experiment exp = named_experiment(experiment);
  exp.sim.nx = nx;
  exp.sim.cfl = cfl;
  exp.sim.t_end = t_end;
  if (!outputs.empty())
    for (const auto& tok : split(outputs, ',')) exp.sim.output_times.push_back(std::stod(tok));

  const auto model = make_model(basis_id, exp.params, regularized);
  const Trajectory traj = simulate(*model, exp.sim, experiment_initial(exp, *model));
  for (const StateField& snap : traj.snapshots)
    write_field_csv(out_path(out, "fields_t" + time_tag(snap.time) + ".csv"), *model,
                    exp.sim, snap);

  RunManifest m = make_manifest("simulate");
  m.set("basis", basis_id);
  m.set("regularized", regularized);
  m.set("experiment", experiment);
  manifest_add_params(m, exp.params);
  manifest_add_sim(m, exp.sim);
  m.set("steps", static_cast<int>(traj.dt_history.size()));
  m.write(out_path(out, "manifest"));
  return 0;
}

int cmd_reference(const std::string& experiment, int nx, int nzeta, double t_end,
                  const std::string& out) {
  Experiment exp = named_experiment(experiment);
  exp.sim.nx = nx;
  exp.sim.t_end = t_end;
  ReferenceConfig cfg = experiment_reference_config(exp, nzeta);
  const ReferenceTrajectory traj =
      simulate_reference(cfg, experiment_reference_initial(exp, cfg));
  for (const ReferenceField& snap : traj.snapshots)
    write_reference_csv(out_path(out, "fields_t" + time_tag(snap.time) + ".csv"), cfg,
                        snap);

  RunManifest m = make_manifest("reference");
  m.set("experiment", experiment);
  manifest_add_params(m, cfg.params);
  m.set("nx", nx);
  m.set("nzeta", nzeta);
  m.set("t_end", t_end);
  m.set("cfl", cfg.cfl);
  m.write(out_path(out, "manifest"));
  return 0;
}

int cmd_errors(const std::string& experiment, const std::vector<std::string>& bases,
               bool regularized, int nzeta, const std::string& out) {
  const Experiment exp = named_experiment(experiment);
  const ReferenceConfig rcfg = experiment_reference_config(exp, nzeta);
  const ReferenceTrajectory rtraj =
      simulate_reference(rcfg, experiment_reference_initial(exp, rcfg));
  const MomentFields ref = moments_of_reference(rtraj.snapshots.back());

  std::ofstream f(out_path(out, "errors.csv"));
  if (!f) throw std::runtime_error("cannot open errors output");
  f << "basis,n,err_h,err_um,err_alpha1,err_alpha2\n";
  for (const std::string& id : bases) {
    const auto model = make_model(id, exp.params, regularized);
    const Trajectory traj = simulate(*model, exp.sim, experiment_initial(exp, *model));
    const MomentFields mom = moments_of_state(*model, traj.snapshots.back());
    f << id << "," << model->num_moments() << ","
      << format_double(rel_l1_error(mom.h, ref.h)) << ","
      << format_double(rel_l1_error(mom.u_m, ref.u_m)) << ","
      << format_double(rel_l1_error(mom.alpha1, ref.alpha1)) << ","
      << format_double(rel_l1_error(mom.alpha2, ref.alpha2)) << "\n";
  }

  RunManifest m = make_manifest("errors");
  std::string joined;
  for (const auto& b : bases) joined += (joined.empty() ? "" : ",") + b;
  m.set("bases", joined);
  m.set("experiment", experiment);
  m.set("regularized", regularized);
  m.set("nzeta", nzeta);
  manifest_add_params(m, exp.params);
  manifest_add_sim(m, exp.sim);
  m.write(out_path(out, "manifest"));
  return 0;
}

int cmd_profiles(const std::string& run_dir, const std::string& time,
                 const std::vector<double>& xs, const std::string& out) {
  const RunManifest run = RunManifest::read((fs::path(run_dir) / "manifest").string());
  const std::string* basis_id = run.find("basis");
  const std::string* xmin_s = run.find("x_min");
  const std::string* xmax_s = run.find("x_max");
  if (!basis_id || !xmin_s || !xmax_s)
    throw std::runtime_error("run manifest lacks basis/domain entries");
  const double x_min = std::stod(*xmin_s), x_max = std::stod(*xmax_s);
  const SplineBasis basis = named_basis(*basis_id);
  const int n = basis.size();

  const std::string fields = (fs::path(run_dir) / ("fields_t" + time + ".csv")).string();
  std::ifstream in(fields);
  if (!in) throw std::runtime_error("cannot open " + fields);
  std::string line;
  std::getline(in, line);  // header: x,h,u_m,alpha_1,alpha_2,s_1..s_N
  std::vector<double> cell_x;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    const auto toks = split(line, ',');
    if (static_cast<int>(toks.size()) != 5 + n)
      throw std::runtime_error("unexpected column count in " + fields);
    std::vector<double> row;
    for (const auto& t : toks) row.push_back(std::stod(t));
    cell_x.push_back(row[0]);
    rows.push_back(std::move(row));
  }

  std::vector<std::string> header = {"zeta"};
  std::vector<std::vector<double>> table(101, std::vector<double>());
  for (int k = 0; k <= 100; ++k) table[k].push_back(k / 100.0);
  for (double x : xs) {
    if (x < x_min || x > x_max)
      throw std::invalid_argument("requested x outside the domain");
    size_t best = 0;
    for (size_t i = 1; i < cell_x.size(); ++i)
      if (std::abs(cell_x[i] - x) < std::abs(cell_x[best] - x)) best = i;
    header.push_back("u_x" + time_tag(cell_x[best]));
    for (int k = 0; k <= 100; ++k) {
      const double z = k / 100.0;
      double u = rows[best][2];
      for (int i = 0; i < n; ++i)
        u += rows[best][5 + i] * basis.functions[i].eval(z);
      table[k].push_back(u);
    }
  }
  write_csv(out_path(out, "profiles.csv"), header, table);

  RunManifest m = make_manifest("profiles");
  m.set("run", run_dir);
  m.set("time", time);
  std::string joined;
  for (double x : xs) joined += (joined.empty() ? "" : ",") + format_double(x);
  m.set("x", joined);
  m.write(out_path(out, "manifest"));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spline shallow water moment models: bases, tensors, hyperbolicity, solvers"};
  app.require_subcommand(1);

  std::string basis_id = "L2", experiment = "smooth", out = "run";
  std::vector<std::string> bases;
  bool regularized = false;
  int nx = 200, nzeta = 60, samples = 201, res1 = 101, res2 = 101;
  double cfl = 0.5, t_end = 2.0;
  double min1 = -1.0, max1 = 1.0, min2 = -1.0, max2 = 1.0;
  std::string outputs, origin, dir1, dir2, run_dir, time = "2";
  std::vector<double> xs;

  auto* c_basis = app.add_subcommand("basis", "Export a constrained basis");
  c_basis->add_option("--basis", basis_id, "basis id (L1..L8, Q2..Q8, Legendre1..8)");
  c_basis->add_option("--samples", samples, "sample points for the plot table");
  c_basis->add_option("--out", out, "output directory");

  auto* c_tensors = app.add_subcommand("tensors", "Dump exact moment tensors");
  c_tensors->add_option("--basis", basis_id);
  c_tensors->add_option("--out", out);

  auto* c_cat = app.add_subcommand("catalogue", "Summarize a list of models");
  c_cat->add_option("--bases", bases, "basis ids")->delimiter(',');
  c_cat->add_option("--out", out);

  auto* c_scan = app.add_subcommand("hyperbolicity-scan", "Scan a coefficient plane");
  c_scan->add_option("--basis", basis_id);
  c_scan->add_flag("--regularized", regularized);
  c_scan->add_option("--min1", min1);
  c_scan->add_option("--max1", max1);
  c_scan->add_option("--min2", min2);
  c_scan->add_option("--max2", max2);
  c_scan->add_option("--res1", res1);
  c_scan->add_option("--res2", res2);
  c_scan->add_option("--origin", origin, "slice origin (comma-separated, N entries)");
  c_scan->add_option("--dir1", dir1, "first slice direction");
  c_scan->add_option("--dir2", dir2, "second slice direction");
  c_scan->add_option("--out", out);

  auto* c_sim = app.add_subcommand("simulate", "Run a moment-model simulation");
  c_sim->add_option("--basis", basis_id);
  c_sim->add_flag("--regularized", regularized);
  c_sim->add_option("--experiment", experiment, "smooth or fast");
  c_sim->add_option("--nx", nx);
  c_sim->add_option("--cfl", cfl);
  c_sim->add_option("--t-end", t_end);
  c_sim->add_option("--outputs", outputs, "extra output times, comma-separated");
  c_sim->add_option("--out", out);

  auto* c_ref = app.add_subcommand("reference", "Run the depth-resolved reference solver");
  c_ref->add_option("--experiment", experiment);
  c_ref->add_option("--nx", nx);
  c_ref->add_option("--nzeta", nzeta);
  c_ref->add_option("--t-end", t_end);
  c_ref->add_option("--out", out);

  auto* c_err = app.add_subcommand("errors", "Error table against the reference solver");
  c_err->add_option("--experiment", experiment);
  c_err->add_option("--bases", bases)->delimiter(',');
  c_err->add_flag("--regularized", regularized);
  c_err->add_option("--nzeta", nzeta);
  c_err->add_option("--out", out);

  auto* c_prof = app.add_subcommand("profiles", "Reconstruct velocity profiles from a run");
  c_prof->add_option("--run", run_dir, "directory of a stored simulate run")->required();
  c_prof->add_option("--time", time, "output time tag of the fields file");
  c_prof->add_option("-x", xs, "x positions")->required();
  c_prof->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_basis->parsed()) return cmd_basis(basis_id, out, samples);
    if (c_tensors->parsed()) return cmd_tensors(basis_id, out);
    if (c_cat->parsed()) return cmd_catalogue(bases, out);
    if (c_scan->parsed())
      return cmd_scan(basis_id, regularized, min1, max1, min2, max2, res1, res2,
                      origin, dir1, dir2, out);
    if (c_sim->parsed())
      return cmd_simulate(basis_id, regularized, experiment, nx, cfl, t_end, outputs, out);
    if (c_ref->parsed()) return cmd_reference(experiment, nx, nzeta, t_end, out);
    if (c_err->parsed()) return cmd_errors(experiment, bases, regularized, nzeta, out);
    if (c_prof->parsed()) return cmd_profiles(run_dir, time, xs, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
