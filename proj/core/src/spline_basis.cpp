#include "sswme/spline_basis.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "sswme/quadrature.hpp"
#include "sswme/rational_linalg.hpp"

namespace sswme {

std::vector<PiecewisePoly> build_bspline_basis(const Grid& grid, int degree) {
  if (degree < 1) throw std::invalid_argument("B-spline degree must be >= 1");
  const int m = grid.num_nodes();
  const int k = degree;

  // Knot vector: grid nodes extended by K nodes on each side, continuing the
  // first/last spacing. On an equidistant grid these are cardinal B-splines.
  std::vector<Rational> knots;
  const Rational dl = grid.node(1) - grid.node(0);
  const Rational dr = grid.node(m - 1) - grid.node(m - 2);
  for (int i = k; i >= 1; --i) knots.push_back(-Rational(i) * dl);
  for (const auto& z : grid.nodes()) knots.push_back(z);
  for (int i = 1; i <= k; ++i) knots.push_back(Rational(1) + Rational(i) * dr);
  const int nseg = static_cast<int>(knots.size()) - 1;

  // Cox-de Boor on the extended segments, with exact polynomial pieces.
  using Segs = std::vector<Poly>;
  std::vector<Segs> b(nseg, Segs(nseg));
  for (int i = 0; i < nseg; ++i) b[i][i] = Poly::constant(Rational(1));

  for (int d = 1; d <= k; ++d) {
    std::vector<Segs> next(nseg - d, Segs(nseg));
    for (int i = 0; i + d < nseg; ++i) {
      for (int j = 0; j < nseg; ++j) {
        Poly acc;
        const Rational den1 = knots[i + d] - knots[i];
        if (den1 != 0 && !b[i][j].is_zero())
          acc += b[i][j] * Poly::linear(-knots[i] / den1, Rational(1) / den1);
        const Rational den2 = knots[i + d + 1] - knots[i + 1];
        if (den2 != 0 && !b[i + 1][j].is_zero())
          acc += b[i + 1][j] * Poly::linear(knots[i + d + 1] / den2, -Rational(1) / den2);
        next[i][j] = acc;
      }
    }
    b = std::move(next);
  }

  // Restrict to the segments inside [0,1]: extended segment k+j is grid segment j.
  std::vector<PiecewisePoly> out;
  out.reserve(b.size());
  for (const auto& spline : b) {
    std::vector<Poly> segs(grid.num_segments());
    for (int j = 0; j < grid.num_segments(); ++j) segs[j] = spline[k + j];
    out.emplace_back(grid, std::move(segs));
  }
  return out;
}

SplineBasis build_constrained_basis(const Grid& grid, int degree) {
  const auto bsplines = build_bspline_basis(grid, degree);
  const int n = static_cast<int>(bsplines.size()) - 1;  // M+K-2
  if (n < 1) throw std::invalid_argument("constrained basis would be empty");

  std::vector<PiecewisePoly> phis;
  phis.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Rational wi = bsplines[i].integral();
    const Rational wnext = bsplines[i + 1].integral();
    if (wi == 0 || wnext == 0)
      throw std::runtime_error("B-spline with zero mass on [0,1]");
    const Rational mu = -wi / wnext;
    phis.push_back((bsplines[i] + bsplines[i + 1] * mu) * (Rational(1) / wi));
  }
  return SplineBasis{grid, degree, std::move(phis), "custom"};
}

SplineBasis legendre_basis(int n) {
  if (n < 1) throw std::invalid_argument("Legendre basis needs N >= 1");
  Grid grid = Grid::uniform(2);
  std::vector<PiecewisePoly> phis;
  phis.reserve(n);
  for (int i = 1; i <= n; ++i)
    phis.push_back(PiecewisePoly::from_poly(grid, shifted_legendre(i)));
  return SplineBasis{grid, n, std::move(phis), "Legendre" + std::to_string(n)};
}

namespace {

Grid parse_grid_spec(const std::string& s) {
  std::vector<Rational> nodes;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    nodes.push_back(parse_rational(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return Grid(std::move(nodes));
}

}  // namespace

SplineBasis named_basis(const std::string& id) {
  auto fail = [&] { throw std::invalid_argument("unknown basis id: '" + id + "'"); };
  if (id.rfind("Legendre", 0) == 0) {
    const int n = std::atoi(id.c_str() + 8);
    if (n < 1 || n > 8) fail();
    return legendre_basis(n);
  }
  if (id.rfind("custom:", 0) == 0) {
    // custom:<degree>:<node,node,...>
    const size_t second = id.find(':', 7);
    if (second == std::string::npos) fail();
    const int degree = std::atoi(id.substr(7, second - 7).c_str());
    SplineBasis b = build_constrained_basis(parse_grid_spec(id.substr(second + 1)), degree);
    b.kind = id;
    return b;
  }
  if (id.size() >= 2 && (id[0] == 'L' || id[0] == 'Q') &&
      std::isdigit(static_cast<unsigned char>(id[1]))) {
    const int n = std::atoi(id.c_str() + 1);
    if (id[0] == 'L' && n >= 1 && n <= 8) {
      SplineBasis b = build_constrained_basis(Grid::uniform(n + 1), 1);
      b.kind = id;
      return b;
    }
    if (id[0] == 'Q' && n >= 2 && n <= 8) {
      SplineBasis b = build_constrained_basis(Grid::uniform(n), 2);
      b.kind = id;
      return b;
    }
  }
  fail();
  return legendre_basis(1);  // unreachable
}

ProfileDecomposition project_profile(const PiecewisePoly& u, const SplineBasis& basis) {
  const int n = basis.size();
  const Rational mean = u.integral();
  const PiecewisePoly dev = u - PiecewisePoly::constant(mean);

  RationalMatrix gram(n, RationalVector(n));
  RationalVector rhs(n);
  for (int i = 0; i < n; ++i) {
    rhs[i] = dev.inner(basis.functions[i]);
    for (int j = 0; j <= i; ++j)
      gram[i][j] = gram[j][i] = basis.functions[i].inner(basis.functions[j]);
  }
  RationalVector s;
  try {
    s = solve_rational(gram, rhs);
  } catch (const std::runtime_error&) {
    throw std::runtime_error("singular Gram matrix in profile projection");
  }
  Rational res2 = dev.inner(dev);
  for (int i = 0; i < n; ++i) res2 -= s[i] * rhs[i];
  if (res2 < 0) res2 = 0;  // exact arithmetic; guards the sqrt below only

  ProfileDecomposition out;
  out.u_m = to_double(mean);
  out.s.resize(n);
  for (int i = 0; i < n; ++i) out.s[i] = to_double(s[i]);
  out.residual_l2 = std::sqrt(to_double(res2));
  return out;
}

ProfileDecomposition project_profile(const std::function<double(double)>& u,
                                     const SplineBasis& basis, int points_per_segment) {
  const int n = basis.size();
  auto integrate = [&](const std::function<double(double)>& f) {
    double acc = 0.0;
    for (int j = 0; j < basis.grid.num_segments(); ++j)
      acc += gauss_legendre_integrate(f, to_double(basis.grid.node(j)),
                                      to_double(basis.grid.node(j + 1)), points_per_segment);
    return acc;
  };

  ProfileDecomposition out;
  out.u_m = integrate(u);

  Eigen::MatrixXd gram(n, n);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    const auto& phi = basis.functions[i];
    rhs(i) = integrate([&](double z) { return (u(z) - out.u_m) * phi.eval(z); });
    for (int j = 0; j <= i; ++j)
      gram(i, j) = gram(j, i) = to_double(phi.inner(basis.functions[j]));
  }
  Eigen::VectorXd s = gram.ldlt().solve(rhs);
  out.s.assign(s.data(), s.data() + n);

  const double res2 = integrate([&](double z) {
    double rec = out.u_m;
    for (int i = 0; i < n; ++i) rec += out.s[i] * basis.functions[i].eval(z);
    const double d = u(z) - rec;
    return d * d;
  });
  out.residual_l2 = std::sqrt(std::max(0.0, res2));
  return out;
}

PiecewisePoly steep_initial_profile() {
  // The piecewise-quadratic fluctuation integrates exactly to zero; the mean
  // flow 1/2 is added to the constant terms.
  const Rational f(15, 322048);
  const Rational mean(1, 2);
  Grid grid({Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)});
  std::vector<Poly> segs = {
      Poly({mean - f * 5215, f * 34314, -f * 50298}),
      Poly({mean + f * 164, f * 2040, -f * 1887}),
      Poly({mean + f * 1700, -f * 2568, f * 1569}),
  };
  return PiecewisePoly(std::move(grid), std::move(segs));
}

}  // namespace sswme
