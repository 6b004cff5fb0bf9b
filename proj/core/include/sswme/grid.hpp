#pragma once

#include <stdexcept>
#include <vector>

#include "sswme/rational.hpp"

namespace sswme {

/// Breakpoint grid on [0,1]: zeta_0 = 0 < zeta_1 < ... < zeta_{M-1} = 1.
class Grid {
 public:
  explicit Grid(std::vector<Rational> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) throw std::invalid_argument("grid needs at least 2 nodes");
    if (nodes_.front() != 0 || nodes_.back() != 1)
      throw std::invalid_argument("grid must start at 0 and end at 1");
    for (size_t i = 1; i < nodes_.size(); ++i)
      if (nodes_[i] <= nodes_[i - 1])
        throw std::invalid_argument("grid nodes must be strictly increasing");
  }

  /// Equidistant grid with M nodes, zeta_j = j/(M-1).
  static Grid uniform(int m) {
    if (m < 2) throw std::invalid_argument("uniform grid needs M >= 2");
    std::vector<Rational> n(m);
    for (int j = 0; j < m; ++j) n[j] = Rational(j, m - 1);
    return Grid(std::move(n));
  }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_segments() const { return num_nodes() - 1; }
  const std::vector<Rational>& nodes() const { return nodes_; }
  const Rational& node(int j) const { return nodes_.at(j); }

  bool operator==(const Grid& o) const { return nodes_ == o.nodes_; }

  /// Index of the segment [zeta_j, zeta_{j+1}) containing x; the last segment
  /// includes zeta = 1.
  int segment_of(const Rational& x) const {
    if (x < 0 || x > 1) throw std::domain_error("zeta outside [0,1]");
    for (int j = num_segments() - 1; j > 0; --j)
      if (x >= nodes_[j]) return j;
    return 0;
  }
  int segment_of(double x) const {
    if (x < 0.0 || x > 1.0) throw std::domain_error("zeta outside [0,1]");
    for (int j = num_segments() - 1; j > 0; --j)
      if (x >= to_double(nodes_[j])) return j;
    return 0;
  }

 private:
  std::vector<Rational> nodes_;
};

}  // namespace sswme
