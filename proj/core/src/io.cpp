#include "sswme/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sswme {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out = open_out(path);
  for (size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != header.size())
      throw std::invalid_argument("csv row width does not match header");
    for (size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_double(row[i]);
    out << "\n";
  }
}

void RunManifest::set(const std::string& key, const std::string& value) {
  for (auto& e : entries)
    if (e.first == key) {
      e.second = value;
      return;
    }
  entries.emplace_back(key, value);
}
void RunManifest::set(const std::string& key, double value) { set(key, format_double(value)); }
void RunManifest::set(const std::string& key, int value) { set(key, std::to_string(value)); }
void RunManifest::set(const std::string& key, bool value) {
  set(key, std::string(value ? "true" : "false"));
}

const std::string* RunManifest::find(const std::string& key) const {
  for (const auto& e : entries)
    if (e.first == key) return &e.second;
  return nullptr;
}

void RunManifest::write(const std::string& path) const {
  std::ofstream out = open_out(path);
  for (const auto& e : entries) out << e.first << " = " << e.second << "\n";
}

RunManifest RunManifest::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  RunManifest m;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos)
      throw std::runtime_error("malformed manifest line: " + line);
    m.entries.emplace_back(line.substr(0, eq), line.substr(eq + 3));
  }
  return m;
}

RunManifest make_manifest(const std::string& subcommand) {
  RunManifest m;
  m.set("tool", std::string(kToolVersion));
  m.set("subcommand", subcommand);
  m.set("determinism", std::string("seed-free; identical manifests reproduce outputs byte-identically"));
  return m;
}

void write_basis_json(const std::string& path, const SplineBasis& basis) {
  nlohmann::json j;
  j["kind"] = basis.kind;
  j["degree"] = basis.degree;
  j["size"] = basis.size();
  j["grid"] = nlohmann::json::array();
  for (int k = 0; k < basis.grid.num_nodes(); ++k)
    j["grid"].push_back(to_string(basis.grid.node(k)));

  j["functions"] = nlohmann::json::array();
  for (const PiecewisePoly& phi : basis.functions) {
    nlohmann::json f;
    f["breakpoints"] = nlohmann::json::array();
    for (int k = 0; k < phi.grid().num_nodes(); ++k)
      f["breakpoints"].push_back(to_string(phi.grid().node(k)));
    f["segments"] = nlohmann::json::array();
    for (const Poly& p : phi.segments()) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const Rational& c : p.coeffs()) coeffs.push_back(to_string(c));
      f["segments"].push_back(coeffs);
    }
    j["functions"].push_back(f);
  }
  open_out(path) << j.dump(2) << "\n";
}

void write_basis_samples_csv(const std::string& path, const SplineBasis& basis,
                             int samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 sample points");
  std::vector<std::string> header = {"zeta"};
  for (int i = 1; i <= basis.size(); ++i) header.push_back("phi_" + std::to_string(i));
  std::vector<std::vector<double>> rows;
  rows.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double z = static_cast<double>(k) / (samples - 1);
    std::vector<double> row = {z};
    for (const PiecewisePoly& phi : basis.functions) row.push_back(phi.eval(z));
    rows.push_back(std::move(row));
  }
  write_csv(path, header, rows);
}

void write_tensor_dump(const std::string& path, const SplineBasis& basis,
                       const MomentTensors& tensors) {
  std::ofstream out = open_out(path);
  const int n = tensors.n;
  out << "basis " << basis.kind << "\nn " << n << "\n";
  out << "M\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << to_string(tensors.gram_rat[i][j]);
    out << "\n";
  }
  out << "C\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << to_string(tensors.dgram_rat[i][j]);
    out << "\n";
  }
  out << "V0\n";
  for (int i = 0; i < n; ++i) out << (i ? " " : "") << to_string(tensors.bottom_rat[i]);
  out << "\n";
  out << "A\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k)
        out << (k ? " " : "") << to_string(tensors.triple_rat[i][j][k]);
      out << "\n";
    }
  out << "B\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k)
        out << (k ? " " : "") << to_string(tensors.advection_rat[i][j][k]);
      out << "\n";
    }
}

void write_field_csv(const std::string& path, const Model& model,
                     const SimConfig& config, const StateField& field) {
  const int n = model.num_moments();
  std::vector<std::string> header = {"x", "h", "u_m", "alpha_1", "alpha_2"};
  for (int i = 1; i <= n; ++i) header.push_back("s_" + std::to_string(i));

  const MomentFields mom = moments_of_state(model, field);
  std::vector<std::vector<double>> rows;
  rows.reserve(field.nx());
  for (int i = 0; i < field.nx(); ++i) {
    const Primitive p = model.primitive(field.cells[i]);
    std::vector<double> row = {config.cell_center(i), mom.h[i], mom.u_m[i],
                               mom.alpha1[i], mom.alpha2[i]};
    for (int k = 0; k < n; ++k) row.push_back(p.s(k));
    rows.push_back(std::move(row));
  }
  write_csv(path, header, rows);
}

void write_reference_csv(const std::string& path, const ReferenceConfig& config,
                         const ReferenceField& field) {
  std::vector<std::string> header = {"x", "h", "u_m", "alpha_1", "alpha_2"};
  for (int j = 0; j < field.nzeta(); ++j) header.push_back("u_" + std::to_string(j));

  const MomentFields mom = moments_of_reference(field);
  std::vector<std::vector<double>> rows;
  rows.reserve(field.nx());
  for (int i = 0; i < field.nx(); ++i) {
    std::vector<double> row = {config.cell_center(i), mom.h[i], mom.u_m[i],
                               mom.alpha1[i], mom.alpha2[i]};
    for (int j = 0; j < field.nzeta(); ++j) row.push_back(field.u(i, j));
    rows.push_back(std::move(row));
  }
  write_csv(path, header, rows);
}

void write_scan_csv(const std::string& path, const HyperbolicityMap& map) {
  std::vector<std::string> header = {"c1", "c2", "max_imag", "on_restriction_line"};
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<size_t>(map.n1) * map.n2);
  for (int j = 0; j < map.n2; ++j)
    for (int i = 0; i < map.n1; ++i)
      rows.push_back({map.coord1(i), map.coord2(j), map.cell(i, j),
                      static_cast<double>(map.on_restriction[static_cast<size_t>(j) * map.n1 + i])});
  write_csv(path, header, rows);
}

}  // namespace sswme
