#include "sswme/hyperbolicity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sswme {

namespace {

void sort_complex(std::vector<std::complex<double>>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

StateVec state_from_sbar(const Model& model, const Eigen::VectorXd& sbar) {
  if (sbar.size() != model.num_moments())
    throw std::invalid_argument("coefficient vector dimension mismatch");
  StateVec u(model.dim());
  u(0) = 1.0;
  u(1) = 0.0;
  u.tail(model.num_moments()) = sbar;
  return u;
}

}  // namespace

Eigen::VectorXcd SpeedSpectrum::shifted_speeds(double u_m, double g, double h) const {
  const double c0 = std::sqrt(g * h);
  Eigen::VectorXcd c(eigenvalues.size());
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    c(i) = (eigenvalues(i) - u_m) / c0;
  return c;
}

SpeedSpectrum spectrum(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  if (!a.allFinite()) throw std::invalid_argument("matrix has non-finite entries");

  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue iteration failed to converge");

  std::vector<std::complex<double>> vals(solver.eigenvalues().data(),
                                         solver.eigenvalues().data() + a.rows());
  sort_complex(vals);

  SpeedSpectrum sp;
  sp.eigenvalues = Eigen::Map<Eigen::VectorXcd>(vals.data(), a.rows());
  sp.max_imag = 0.0;
  for (const auto& v : vals) sp.max_imag = std::max(sp.max_imag, std::abs(v.imag()));
  return sp;
}

bool is_hyperbolic(const Model& model, const StateVec& u, double tol) {
  const Primitive p = model.primitive(u);
  if (tol <= 0.0) tol = 1e-9 * std::max(1.0, std::sqrt(model.params().g * p.h));
  return spectrum(model.transport_matrix(u)).max_imag <= tol;
}

double HyperbolicityMap::coord1(int i) const {
  if (n1 == 1) return range1.first;
  return range1.first + (range1.second - range1.first) * i / (n1 - 1.0);
}

double HyperbolicityMap::coord2(int j) const {
  if (n2 == 1) return range2.first;
  return range2.first + (range2.second - range2.first) * j / (n2 - 1.0);
}

HyperbolicityMap scan_region(const Model& model, std::pair<double, double> range1,
                             std::pair<double, double> range2, int n1, int n2,
                             const std::optional<SliceDef>& slice) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("scan resolution must be positive");
  if (range1.second < range1.first || range2.second < range2.first)
    throw std::invalid_argument("empty scan range");

  const int n = model.num_moments();
  HyperbolicityMap map;
  map.range1 = range1;
  map.range2 = range2;
  map.n1 = n1;
  map.n2 = n2;
  if (slice) {
    if (slice->origin.size() != n || slice->dir1.size() != n || slice->dir2.size() != n)
      throw std::invalid_argument("slice dimension mismatch");
    map.slice = *slice;
  } else {
    if (n != 2)
      throw std::invalid_argument("a slice definition is required unless N = 2");
    map.slice.origin = Eigen::VectorXd::Zero(2);
    map.slice.dir1 = Eigen::Vector2d(1.0, 0.0);
    map.slice.dir2 = Eigen::Vector2d(0.0, 1.0);
  }

  const Eigen::VectorXd& w = model.transform().linear_profile;
  const Eigen::VectorXd& arow = model.transform().alpha_row;
  const double h1 = (n1 > 1) ? (range1.second - range1.first) / (n1 - 1) : 0.0;
  const double h2 = (n2 > 1) ? (range2.second - range2.first) / (n2 - 1) : 0.0;
  const double line_tol =
      0.5 * std::max({h1 * map.slice.dir1.norm(), h2 * map.slice.dir2.norm(), 1e-12});

  map.max_imag.assign(static_cast<size_t>(n1) * n2, 0.0);
  map.on_restriction.assign(static_cast<size_t>(n1) * n2, 0);

#pragma omp parallel for collapse(2) schedule(dynamic)
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n1; ++i) {
      const Eigen::VectorXd sbar = map.slice.origin +
                                   map.coord1(i) * map.slice.dir1 +
                                   map.coord2(j) * map.slice.dir2;
      const StateVec u = state_from_sbar(model, sbar);
      const size_t idx = static_cast<size_t>(j) * n1 + i;
      map.max_imag[idx] = spectrum(model.transport_matrix(u)).max_imag;
      const double dist = (sbar - arow.dot(sbar) * w).norm();
      map.on_restriction[idx] = dist <= line_tol ? 1 : 0;
    }
  }
  return map;
}

double restriction_line_max_imag(const Model& model, double alpha_min,
                                 double alpha_max, int samples) {
  if (samples < 1) throw std::invalid_argument("sample count must be positive");
  const Eigen::VectorXd& w = model.transform().linear_profile;
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double a = (samples == 1)
                         ? alpha_min
                         : alpha_min + (alpha_max - alpha_min) * k / (samples - 1.0);
    const StateVec u = state_from_sbar(model, a * w);
    worst = std::max(worst, spectrum(model.transport_matrix(u)).max_imag);
  }
  return worst;
}

std::vector<double> char_poly(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  const int n = static_cast<int>(a.rows());
  std::vector<double> coeffs(n + 1, 0.0);
  coeffs[n] = 1.0;
  // Faddeev-LeVerrier: M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  double c = 1.0;
  for (int k = 1; k <= n; ++k) {
    m = a * (m + c * Eigen::MatrixXd::Identity(n, n));
    c = -m.trace() / k;
    coeffs[n - k] = c;
  }
  return coeffs;
}

std::vector<double> shifted_char_poly(const Model& model, const Eigen::VectorXd& sbar) {
  if (model.params().g != 1.0)
    throw std::invalid_argument("shifted characteristic polynomial assumes g = 1");
  return char_poly(model.transport_matrix(state_from_sbar(model, sbar)));
}

std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs) {
  std::vector<double> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() < 2) throw std::invalid_argument("polynomial must have degree >= 1");
  const int n = static_cast<int>(c.size()) - 1;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];

  const SpeedSpectrum sp = spectrum(companion);
  std::vector<std::complex<double>> roots(sp.eigenvalues.data(),
                                          sp.eigenvalues.data() + n);
  return roots;
}

}  // namespace sswme
