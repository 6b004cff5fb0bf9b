#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sswme/fv_solver.hpp"
#include "sswme/hyperbolicity.hpp"
#include "sswme/model.hpp"
#include "sswme/reference_solver.hpp"

namespace sswme {

inline constexpr const char* kToolVersion = "sswme 0.1.0";

/// Shortest decimal representation that round-trips a double (17 significant
/// digits).
std::string format_double(double v);

/// One-line header CSV with 17-significant-digit columns.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// Ordered key = value record describing a run; identical manifests imply
/// byte-identical outputs (all algorithms are deterministic and seed-free).
struct RunManifest {
  std::vector<std::pair<std::string, std::string>> entries;

  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value);
  void set(const std::string& key, int value);
  void set(const std::string& key, bool value);
  const std::string* find(const std::string& key) const;

  void write(const std::string& path) const;
  static RunManifest read(const std::string& path);
};

/// Standard manifest skeleton for a subcommand run.
RunManifest make_manifest(const std::string& subcommand);

/// Grid, degree, and per-segment monomial coefficients as exact "p/q" strings,
/// as JSON.
void write_basis_json(const std::string& path, const SplineBasis& basis);

/// Sample table (zeta, phi_1(zeta), ..., phi_N(zeta)).
void write_basis_samples_csv(const std::string& path, const SplineBasis& basis,
                             int samples = 201);

/// Flat text dump of M, Minv, V0, C, A, B with exact rational entries.
void write_tensor_dump(const std::string& path, const SplineBasis& basis,
                       const MomentTensors& tensors);

/// Columns x, h, u_m, alpha_1, alpha_2, s_1 ... s_N.
void write_field_csv(const std::string& path, const Model& model,
                     const SimConfig& config, const StateField& field);

/// Columns x, h, u_m, alpha_1, alpha_2, u_0 ... u_{nzeta-1}.
void write_reference_csv(const std::string& path, const ReferenceConfig& config,
                         const ReferenceField& field);

/// Columns coordinates in the scanned plane, max|Im c|, on-restriction-line flag.
void write_scan_csv(const std::string& path, const HyperbolicityMap& map);

}  // namespace sswme
