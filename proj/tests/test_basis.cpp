#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "golden_bases.hpp"
#include "sswme/spline_basis.hpp"

using namespace sswme;

namespace {

// Exact equality of two piecewise polynomials via the L2 norm of the gap.
bool same_function(const PiecewisePoly& a, const PiecewisePoly& b) {
  const PiecewisePoly d = a - b;
  return d.inner(d) == 0;
}

}  // namespace

TEST_CASE("linear one-spline basis matches its closed form") {
  const SplineBasis b = named_basis("L1");
  REQUIRE(b.size() == 1);
  CHECK(b.degree == 1);
  CHECK(same_function(b.functions[0], golden::l1_phi1()));
}

TEST_CASE("two-linear-spline basis matches its closed form") {
  const SplineBasis b = named_basis("L2");
  const auto g = golden::l2();
  REQUIRE(b.size() == 2);
  CHECK(same_function(b.functions[0], g[0]));
  CHECK(same_function(b.functions[1], g[1]));
}

TEST_CASE("three-linear-spline basis matches its closed form and breakpoints") {
  const SplineBasis b = named_basis("L3");
  const auto g = golden::l3();
  REQUIRE(b.size() == 3);
  CHECK(b.grid == Grid::uniform(4));
  for (int i = 0; i < 3; ++i) CHECK(same_function(b.functions[i], g[i]));
}

TEST_CASE("two-quadratic-spline basis matches its closed form") {
  const SplineBasis b = named_basis("Q2");
  const auto g = golden::q2();
  REQUIRE(b.size() == 2);
  CHECK(b.degree == 2);
  CHECK(same_function(b.functions[0], g[0]));
  CHECK(same_function(b.functions[1], g[1]));
}

TEST_CASE("three-quadratic-spline basis matches its closed form and breakpoints") {
  const SplineBasis b = named_basis("Q3");
  const auto g = golden::q3();
  REQUIRE(b.size() == 3);
  CHECK(b.grid == Grid::uniform(3));
  for (int i = 0; i < 3; ++i) CHECK(same_function(b.functions[i], g[i]));
}

TEST_CASE("scaled Legendre functions") {
  const SplineBasis b = named_basis("Legendre2");
  REQUIRE(b.size() == 2);
  CHECK(same_function(b.functions[0], golden::leg1()));
  CHECK(same_function(b.functions[1], golden::leg2()));
  CHECK(shifted_legendre(2).integrate(0, 1) == 0);
  CHECK(shifted_legendre(3).eval(Rational(0)) == 1);
}

TEST_CASE("golden formulas agree pointwise with the constructed bases") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  const struct {
    const char* id;
    std::vector<PiecewisePoly> ref;
  } cases[] = {{"L1", {golden::l1_phi1()}},
               {"L2", golden::l2()},
               {"L3", golden::l3()},
               {"Q2", golden::q2()},
               {"Q3", golden::q3()}};
  for (const auto& c : cases) {
    const SplineBasis b = named_basis(c.id);
    for (int k = 0; k < 20; ++k) {
      const double z = dist(rng);
      for (int i = 0; i < b.size(); ++i)
        CHECK(std::abs(b.functions[i].eval(z) - c.ref[i].eval(z)) <= 1e-12);
    }
  }
}

TEST_CASE("every basis function has exactly zero mean") {
  for (const std::string prefix : {"L", "Q", "Legendre"}) {
    const int lo = prefix == "Q" ? 2 : 1;
    for (int n = lo; n <= 8; ++n) {
      const SplineBasis b = named_basis(prefix + std::to_string(n));
      for (const PiecewisePoly& phi : b.functions) CHECK(phi.integral() == 0);
    }
  }
  // Cubic splines are not in the named catalogue but follow the same rule.
  for (int m = 2; m <= 7; ++m) {
    const SplineBasis b = build_constrained_basis(Grid::uniform(m), 3);
    CHECK(b.size() == m + 1);
    for (const PiecewisePoly& phi : b.functions) CHECK(phi.integral() == 0);
  }
}

TEST_CASE("constrained splines keep the smoothness of their degree") {
  for (int degree = 1; degree <= 3; ++degree) {
    const SplineBasis b = build_constrained_basis(Grid::uniform(5), degree);
    for (const PiecewisePoly& phi : b.functions) CHECK(phi.is_continuous(degree));
  }
}

TEST_CASE("raw B-splines form a nonnegative partition of unity") {
  for (int degree = 1; degree <= 3; ++degree) {
    const auto splines = build_bspline_basis(Grid::uniform(4), degree);
    CHECK(static_cast<int>(splines.size()) == 3 + degree);
    PiecewisePoly sum = PiecewisePoly::constant(Rational(0));
    for (const auto& s : splines) {
      sum = sum + s;
      for (int k = 0; k <= 100; ++k) CHECK(s.eval(k / 100.0) >= -1e-15);
    }
    CHECK(same_function(sum, PiecewisePoly::constant(Rational(1))));
  }
}

TEST_CASE("smaller spline bases are contained in larger ones") {
  const PiecewisePoly l1 = golden::l1_phi1();
  const auto l2 = golden::l2();
  const auto l3 = golden::l3();
  const auto q2 = golden::q2();
  const auto q3 = golden::q3();

  CHECK(same_function((l2[0] + l2[1]) * Rational(1, 2), l1));
  CHECK(same_function(l3[0] * Rational(1, 3) + l3[1] * Rational(5, 9) +
                          l3[2] * Rational(1, 3),
                      l1));
  CHECK(same_function((q2[0] + q2[1]) * Rational(2, 3), l1));
  CHECK(same_function(q3[0] * Rational(1, 4) + q3[1] * Rational(2, 3) +
                          q3[2] * Rational(1, 4),
                      l1));
  CHECK(same_function(q3[0] * Rational(1, 8) + q3[1] * Rational(1, 3) +
                          q3[2] * Rational(1, 8),
                      golden::leg1()));
  CHECK(same_function(q3[0] * Rational(11, 32) + q3[1] * Rational(1, 2) +
                          q3[2] * Rational(1, 32),
                      q2[0]));
  CHECK(same_function(q3[0] * Rational(1, 32) + q3[1] * Rational(1, 2) +
                          q3[2] * Rational(11, 32),
                      q2[1]));
}

TEST_CASE("unknown basis names are rejected") {
  CHECK_THROWS_AS(named_basis("Z3"), std::invalid_argument);
  CHECK_THROWS_AS(named_basis("L0"), std::invalid_argument);
  CHECK_THROWS_AS(named_basis("Q1"), std::invalid_argument);
  CHECK_THROWS_AS(named_basis(""), std::invalid_argument);
}

TEST_CASE("profile projection recovers members of the span exactly") {
  const SplineBasis b = named_basis("L2");
  const auto g = golden::l2();
  const PiecewisePoly u =
      PiecewisePoly::constant(Rational(3, 10)) + g[0] * Rational(7, 10) -
      g[1] * Rational(2, 5);
  const ProfileDecomposition dec = project_profile(u, b);
  CHECK(dec.u_m == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(dec.s[0] == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(dec.s[1] == doctest::Approx(-0.4).epsilon(1e-14));
  CHECK(dec.residual_l2 <= 1e-14);
}

TEST_CASE("quadrature projection agrees with the exact projection") {
  const SplineBasis b = named_basis("Q3");
  // Smooth integrand: Gauss panels on the basis grid converge fast.
  const PiecewisePoly smooth =
      PiecewisePoly(golden::grid2(), {Poly({Rational(1, 5), Rational(-3, 7),
                                            Rational(2, 9), Rational(1, 4)})});
  const ProfileDecomposition exact = project_profile(smooth, b);
  const ProfileDecomposition approx =
      project_profile([&](double z) { return smooth.eval(z); }, b);
  CHECK(std::abs(exact.u_m - approx.u_m) <= 1e-12);
  for (int i = 0; i < b.size(); ++i)
    CHECK(std::abs(exact.s[i] - approx.s[i]) <= 1e-12);
  CHECK(std::abs(exact.residual_l2 - approx.residual_l2) <= 1e-10);

  // A kinked profile is still approximated, just at quadrature accuracy,
  // because its breakpoints fall inside the Gauss panels.
  const PiecewisePoly steep = steep_initial_profile();
  const ProfileDecomposition se = project_profile(steep, b);
  const ProfileDecomposition sa =
      project_profile([&](double z) { return steep.eval(z); }, b);
  CHECK(std::abs(se.u_m - sa.u_m) <= 1e-4);
  for (int i = 0; i < b.size(); ++i) CHECK(std::abs(se.s[i] - sa.s[i]) <= 1e-4);
}

TEST_CASE("steep initial profile: mean one half, continuous, in the Q4 span") {
  const PiecewisePoly prof = steep_initial_profile();
  CHECK(prof.integral() == Rational(1, 2));
  CHECK(prof.is_continuous(1));

  const ProfileDecomposition q4 = project_profile(prof, named_basis("Q4"));
  CHECK(std::abs(q4.u_m - 0.5) <= 1e-12);
  CHECK(q4.residual_l2 <= 1e-10);

  // A global cubic polynomial cannot follow the kinks.
  const ProfileDecomposition leg3 = project_profile(prof, named_basis("Legendre3"));
  CHECK(leg3.residual_l2 > 1e-3);
}
