#include "sswme/moment_tensors.hpp"

#include <stdexcept>

#include "sswme/quadrature.hpp"

namespace sswme {

MomentTensors compute_tensors(const SplineBasis& basis) {
  const int n = basis.size();
  const auto& phi = basis.functions;

  MomentTensors t;
  t.n = n;
  t.gram_rat.assign(n, RationalVector(n));
  t.dgram_rat.assign(n, RationalVector(n));
  t.bottom_rat.assign(n, Rational(0));
  t.triple_rat.assign(n, RationalMatrix(n, RationalVector(n)));
  t.advection_rat.assign(n, RationalMatrix(n, RationalVector(n)));

  std::vector<PiecewisePoly> dphi, iphi;
  dphi.reserve(n);
  iphi.reserve(n);
  for (int i = 0; i < n; ++i) {
    dphi.push_back(phi[i].derivative());
    iphi.push_back(phi[i].antiderivative_fn());
    t.bottom_rat[i] = phi[i].eval(Rational(0));
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      t.gram_rat[i][j] = t.gram_rat[j][i] = phi[i].inner(phi[j]);
      t.dgram_rat[i][j] = t.dgram_rat[j][i] = dphi[i].inner(dphi[j]);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const PiecewisePoly pij = phi[i] * phi[j];
      const PiecewisePoly dij = dphi[i] * iphi[j];
      for (int k = 0; k < n; ++k) {
        t.triple_rat[i][j][k] = pij.inner(phi[k]);
        t.advection_rat[i][j][k] = dij.inner(phi[k]);
      }
    }
  }

  t.M.resize(n, n);
  t.C.resize(n, n);
  t.V0.resize(n);
  for (int i = 0; i < n; ++i) {
    t.V0(i) = to_double(t.bottom_rat[i]);
    for (int j = 0; j < n; ++j) {
      t.M(i, j) = to_double(t.gram_rat[i][j]);
      t.C(i, j) = to_double(t.dgram_rat[i][j]);
    }
  }

  // Exact mass inverse, so golden rational coefficients survive into doubles.
  RationalMatrix minv_rat;
  try {
    minv_rat = invert_rational(t.gram_rat);
  } catch (const std::runtime_error&) {
    throw std::runtime_error("singular Gram matrix: basis functions are linearly dependent");
  }
  t.Minv.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.Minv(i, j) = to_double(minv_rat[i][j]);

  auto contract = [&](const std::vector<RationalMatrix>& src) {
    std::vector<Eigen::MatrixXd> out(n, Eigen::MatrixXd(n, n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Rational acc(0);
          for (int l = 0; l < n; ++l) acc += minv_rat[i][l] * src[l][j][k];
          out[i](j, k) = to_double(acc);
        }
    return out;
  };
  t.A.assign(n, Eigen::MatrixXd(n, n));
  t.B.assign(n, Eigen::MatrixXd(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        t.A[i](j, k) = to_double(t.triple_rat[i][j][k]);
        t.B[i](j, k) = to_double(t.advection_rat[i][j][k]);
      }
  t.Ahat = contract(t.triple_rat);
  t.Bhat = contract(t.advection_rat);

  t.V0hat.resize(n);
  t.Chat.resize(n, n);
  for (int i = 0; i < n; ++i) {
    Rational acc(0);
    for (int l = 0; l < n; ++l) acc += minv_rat[i][l] * t.bottom_rat[l];
    t.V0hat(i) = to_double(acc);
    for (int j = 0; j < n; ++j) {
      Rational cc(0);
      for (int l = 0; l < n; ++l) cc += minv_rat[i][l] * t.dgram_rat[l][j];
      t.Chat(i, j) = to_double(cc);
    }
  }
  return t;
}

QuadratureTensors compute_tensors_quadrature(const SplineBasis& basis, int order) {
  const int n = basis.size();
  const auto& phi = basis.functions;
  const Grid& grid = basis.grid;

  auto integrate = [&](const std::function<double(double)>& f) {
    double acc = 0.0;
    for (int j = 0; j < grid.num_segments(); ++j)
      acc += gauss_legendre_integrate(f, to_double(grid.node(j)),
                                      to_double(grid.node(j + 1)), order);
    return acc;
  };

  QuadratureTensors q;
  q.M.resize(n, n);
  q.C.resize(n, n);
  q.V0.resize(n);
  q.A.assign(n, Eigen::MatrixXd(n, n));
  q.B.assign(n, Eigen::MatrixXd(n, n));
  for (int i = 0; i < n; ++i) {
    q.V0(i) = phi[i].eval(0.0);
    for (int j = 0; j < n; ++j) {
      q.M(i, j) = integrate([&](double z) { return phi[i].eval(z) * phi[j].eval(z); });
      q.C(i, j) = integrate(
          [&](double z) { return phi[i].eval_derivative(z) * phi[j].eval_derivative(z); });
      for (int k = 0; k < n; ++k) {
        q.A[i](j, k) = integrate(
            [&](double z) { return phi[i].eval(z) * phi[j].eval(z) * phi[k].eval(z); });
        q.B[i](j, k) = integrate([&](double z) {
          return phi[i].eval_derivative(z) * phi[j].antiderivative(z) * phi[k].eval(z);
        });
      }
    }
  }
  return q;
}

RationalMatrix legendre_crossgram(const SplineBasis& basis, int degree_n) {
  if (degree_n < 0) throw std::invalid_argument("negative Legendre degree");
  RationalMatrix out(degree_n, RationalVector(basis.size()));
  for (int i = 1; i <= degree_n; ++i) {
    const PiecewisePoly leg = PiecewisePoly::from_poly(basis.grid, shifted_legendre(i));
    for (int j = 0; j < basis.size(); ++j) out[i - 1][j] = leg.inner(basis.functions[j]);
  }
  return out;
}

BasisTransform basis_transform(const SplineBasis& basis) {
  const int n = basis.size();
  BasisTransform bt;

  const RationalMatrix cross = legendre_crossgram(basis, std::max(n, 2));
  RationalMatrix gram(n, RationalVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = basis.functions[i].inner(basis.functions[j]);

  bt.alpha_row.resize(n);
  bt.alpha2_row.resize(n);
  for (int j = 0; j < n; ++j) {
    bt.alpha_row(j) = to_double(Rational(3) * cross[0][j]);
    bt.alpha2_row(j) = to_double(Rational(5) * cross[1][j]);
  }

  RationalVector rhs(n);
  for (int j = 0; j < n; ++j) rhs[j] = cross[0][j];
  RationalVector w;
  try {
    w = solve_rational(gram, rhs);
  } catch (const std::runtime_error&) {
    throw std::runtime_error("singular Gram matrix in basis transform");
  }
  bt.linear_profile_rat = w;
  bt.linear_profile.resize(n);
  for (int j = 0; j < n; ++j) bt.linear_profile(j) = to_double(w[j]);

  bt.valid_square = (basis.degree == n && basis.grid.num_nodes() == 2);
  if (bt.valid_square) {
    const RationalMatrix gram_inv = invert_rational(gram);
    bt.T_rat.assign(n, RationalVector(n, Rational(0)));
    bt.T.resize(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational acc(0);
        for (int l = 0; l < n; ++l) acc += cross[i][l] * gram_inv[l][j];
        bt.T_rat[i][j] = acc;
        bt.T(i, j) = to_double(acc);
      }
    const RationalMatrix tinv = invert_rational(bt.T_rat);
    bt.Tinv.resize(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) bt.Tinv(i, j) = to_double(tinv[i][j]);
  }
  return bt;
}

}  // namespace sswme
