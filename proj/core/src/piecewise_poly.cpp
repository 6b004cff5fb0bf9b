#include "sswme/piecewise_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sswme {

PiecewisePoly::PiecewisePoly(Grid grid, std::vector<Poly> segments)
    : grid_(std::move(grid)), segments_(std::move(segments)) {
  if (static_cast<int>(segments_.size()) != grid_.num_segments())
    throw std::invalid_argument("segment count does not match grid");
}

PiecewisePoly PiecewisePoly::from_poly(Grid grid, const Poly& p) {
  std::vector<Poly> segs(grid.num_segments(), p);
  return PiecewisePoly(std::move(grid), std::move(segs));
}

int PiecewisePoly::degree() const {
  int d = 0;
  for (const auto& s : segments_) d = std::max(d, s.degree());
  return d;
}

Rational PiecewisePoly::integral() const {
  Rational acc(0);
  for (int j = 0; j < grid_.num_segments(); ++j)
    acc += segments_[j].integrate(grid_.node(j), grid_.node(j + 1));
  return acc;
}

Rational PiecewisePoly::antiderivative(const Rational& x) const {
  const int jx = grid_.segment_of(x);
  Rational acc(0);
  for (int j = 0; j < jx; ++j)
    acc += segments_[j].integrate(grid_.node(j), grid_.node(j + 1));
  acc += segments_[jx].integrate(grid_.node(jx), x);
  return acc;
}

double PiecewisePoly::antiderivative(double x) const {
  // Exact up to the final conversion; x is representable as a rational.
  return to_double(antiderivative(Rational(x)));
}

PiecewisePoly PiecewisePoly::derivative() const {
  std::vector<Poly> segs;
  segs.reserve(segments_.size());
  for (const auto& s : segments_) segs.push_back(s.derivative());
  return PiecewisePoly(grid_, std::move(segs));
}

PiecewisePoly PiecewisePoly::antiderivative_fn() const {
  std::vector<Poly> segs;
  segs.reserve(segments_.size());
  Rational carry(0);
  for (int j = 0; j < grid_.num_segments(); ++j) {
    Poly F = segments_[j].antiderivative();
    segs.push_back(F + Poly::constant(carry - F.eval(grid_.node(j))));
    carry += segments_[j].integrate(grid_.node(j), grid_.node(j + 1));
  }
  return PiecewisePoly(grid_, std::move(segs));
}

namespace {
Grid merge_grids(const Grid& a, const Grid& b) {
  std::vector<Rational> nodes = a.nodes();
  nodes.insert(nodes.end(), b.nodes().begin(), b.nodes().end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return Grid(std::move(nodes));
}
}  // namespace

PiecewisePoly PiecewisePoly::refined_to(const Grid& other) const {
  const Grid merged = merge_grids(grid_, other);
  std::vector<Poly> segs(merged.num_segments());
  for (int j = 0; j < merged.num_segments(); ++j)
    segs[j] = segments_[grid_.segment_of(merged.node(j))];
  return PiecewisePoly(merged, std::move(segs));
}

Rational PiecewisePoly::inner(const PiecewisePoly& o) const {
  return ((*this) * o).integral();
}

PiecewisePoly PiecewisePoly::operator+(const PiecewisePoly& o) const {
  PiecewisePoly a = refined_to(o.grid());
  PiecewisePoly b = o.refined_to(grid_);
  std::vector<Poly> segs(a.segments_.size());
  for (size_t j = 0; j < segs.size(); ++j) segs[j] = a.segments_[j] + b.segments_[j];
  return PiecewisePoly(a.grid_, std::move(segs));
}

PiecewisePoly PiecewisePoly::operator-(const PiecewisePoly& o) const {
  return *this + o * Rational(-1);
}

PiecewisePoly PiecewisePoly::operator*(const PiecewisePoly& o) const {
  PiecewisePoly a = refined_to(o.grid());
  PiecewisePoly b = o.refined_to(grid_);
  std::vector<Poly> segs(a.segments_.size());
  for (size_t j = 0; j < segs.size(); ++j) segs[j] = a.segments_[j] * b.segments_[j];
  return PiecewisePoly(a.grid_, std::move(segs));
}

PiecewisePoly PiecewisePoly::operator*(const Rational& s) const {
  std::vector<Poly> segs;
  segs.reserve(segments_.size());
  for (const auto& p : segments_) segs.push_back(p * s);
  return PiecewisePoly(grid_, std::move(segs));
}

bool PiecewisePoly::is_continuous(int k) const {
  for (int j = 1; j < grid_.num_segments(); ++j) {
    Poly left = segments_[j - 1];
    Poly right = segments_[j];
    for (int d = 0; d < k; ++d) {
      if (left.eval(grid_.node(j)) != right.eval(grid_.node(j))) return false;
      left = left.derivative();
      right = right.derivative();
    }
  }
  return true;
}

}  // namespace sswme
