#include <doctest.h>

#include <stdexcept>

#include "multgen/catalog.hpp"
#include "multgen/chevalley.hpp"
#include "multgen/liealgebra.hpp"
#include "test_util.hpp"

using namespace multgen;
using namespace multgen::testutil;

TEST_SUITE("chevalley") {

TEST_CASE("minimal polynomial") {
  CHECK(minimal_polynomial(QMatrix::identity(2)) == QPoly({Rat(-1), Rat(1)}));
  CHECK(minimal_polynomial(QMatrix::unit(2, 0, 1)) == QPoly({Rat(0), Rat(0), Rat(1)}));
  CHECK(minimal_polynomial(QMatrix::diagonal(vec({1, 2}))) ==
        QPoly({Rat(2), Rat(-3), Rat(1)}));  // (t-1)(t-2)
  CHECK(minimal_polynomial(QMatrix::zero(3, 3)) == QPoly({Rat(0), Rat(1)}));
}

TEST_CASE("semisimplicity and nilpotency tests") {
  CHECK(is_semisimple_matrix(QMatrix::diagonal(vec({1, -1}))));
  CHECK_FALSE(is_semisimple_matrix(QMatrix::unit(2, 0, 1)));
  CHECK(is_nilpotent_matrix(QMatrix::unit(2, 0, 1)));
  CHECK_FALSE(is_nilpotent_matrix(QMatrix::identity(2)));
  // Rotation generator: squarefree t^2 + 1, no rational eigenvalues.
  CHECK(is_semisimple_matrix(mat({{0, -1}, {1, 0}})));
  CHECK_FALSE(is_nilpotent_matrix(mat({{0, -1}, {1, 0}})));
}

TEST_CASE("jordan decomposition examples") {
  const QMatrix nil = mat({{0, 1, 2}, {0, 0, 3}, {0, 0, 0}});
  const JordanPair jp1 = jordan_chevalley(nil);
  CHECK(jp1.s.is_zero());
  CHECK(jp1.n == nil);

  const QMatrix unip = mat({{1, 1}, {0, 1}});
  const JordanPair jp2 = jordan_chevalley(unip);
  CHECK(jp2.s == QMatrix::identity(2));
  CHECK(jp2.n == QMatrix::unit(2, 0, 1));

  const QMatrix distinct = mat({{1, 1}, {0, 0}});
  const JordanPair jp3 = jordan_chevalley(distinct);
  CHECK(jp3.s == distinct);  // eigenvalues 1, 0 distinct: already semisimple
  CHECK(jp3.n.is_zero());
}

TEST_CASE("jordan parts commute with the commutant of x") {
  Prng rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(4));
    QMatrix x = random_strict_upper(rng, n);
    for (int i = 0; i < n; ++i) x.at(i, i) = Rat(rng.range(-2, 2));
    const JordanPair jp = jordan_chevalley(x);
    CHECK(jp.s + jp.n == x);
    CHECK(jp.s * jp.n == jp.n * jp.s);
    CHECK(is_semisimple_matrix(jp.s));
    CHECK(is_nilpotent_matrix(jp.n));
    // Anything commuting with x from its power algebra commutes with both parts.
    QPoly p({random_rat(rng), random_rat(rng), random_rat(rng)});
    const QMatrix c = p.eval(x);
    CHECK(c * jp.s == jp.s * c);
    CHECK(c * jp.n == jp.n * c);
  }
}

TEST_CASE("jordan parts stay inside an algebraic Lie algebra") {
  const LieAlgebra g = builtin("paper-ex").g;
  Prng rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    Vec coords(g.dim());
    for (auto& c : coords) c = Rat(rng.range(-2, 2));
    const JordanPair jp = jordan_chevalley(g.matrix_of(coords));
    CHECK(g.coords_of_matrix(jp.s).has_value());
    CHECK(g.coords_of_matrix(jp.n).has_value());
  }
}

TEST_CASE("exponential of nilpotent matrices") {
  CHECK(exp_nilpotent(QMatrix::zero(3, 3)) == QMatrix::identity(3));
  const QMatrix e12 = QMatrix::unit(2, 0, 1);
  CHECK(exp_nilpotent(e12) == QMatrix::identity(2) + e12);
  // One-parameter property.
  const Rat a(3, 2), b(-5, 7);
  CHECK(exp_nilpotent(e12 * a) * exp_nilpotent(e12 * b) == exp_nilpotent(e12 * (a + b)));
  CHECK_THROWS_AS(exp_nilpotent(QMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("logarithm of unipotent matrices") {
  CHECK(log_unipotent(QMatrix::identity(3)).is_zero());
  const QMatrix e12 = QMatrix::unit(2, 0, 1);
  CHECK(log_unipotent(QMatrix::identity(2) + e12) == e12);
  CHECK_THROWS_AS(log_unipotent(QMatrix::diagonal(vec({2, 1}))), std::invalid_argument);
}

TEST_CASE("exp and log invert each other up to size 6") {
  Prng rng(43);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 12; ++trial) {
      const QMatrix v = random_strict_upper(rng, n);
      const QMatrix u = exp_nilpotent(v);
      CHECK(is_nilpotent_matrix(u - QMatrix::identity(n)));
      CHECK(log_unipotent(u) == v);
      CHECK(exp_nilpotent(log_unipotent(u)) == u);
    }
}

TEST_CASE("one-parameter curves") {
  const QMatrix e12 = QMatrix::unit(4, 0, 1);
  const OneParamCurve c = OneParamCurve::unipotent(e12);
  CHECK(c.eval(Rat(2)) * c.eval(Rat(5)) == c.eval(Rat(7)));
  CHECK(c.eval(Rat(0)) == QMatrix::identity(4));

  // Weight action t c(a) t^{-1} = c(chi(t) a) in the paper example:
  // conjugating exp(a E12) by diag(1, t, 1, 1) rescales a by t^{-1}.
  const OneParamCurve t = OneParamCurve::torus({0, 1, 0, 0});
  const QMatrix lhs = t.eval(Rat(2)) * c.eval(Rat(1)) * t.eval(Rat(1, 2));
  CHECK(lhs == c.eval(Rat(1, 2)));
  CHECK_THROWS_AS(t.eval(Rat(0)), std::domain_error);
  CHECK_THROWS_AS(OneParamCurve::unipotent(QMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("polynomial helpers") {
  const QPoly p({Rat(-2), Rat(0), Rat(1)});  // t^2 - 2
  CHECK(squarefree_part(p * p) == p);
  CHECK(poly_gcd(p, p.derivative()).degree() == 0);
  const auto roots = rational_roots(QPoly::from_roots({Rat(1), Rat(1), Rat(-3, 2)}));
  REQUIRE(roots.roots.size() == 2);
  CHECK(roots.roots[0].first == Rat(-3, 2));
  CHECK(roots.roots[0].second == 1);
  CHECK(roots.roots[1].first == Rat(1));
  CHECK(roots.roots[1].second == 2);
  CHECK(roots.remaining_degree == 0);
  const auto irr = rational_roots(p);
  CHECK(irr.roots.empty());
  CHECK(irr.remaining_degree == 2);
}

}  // TEST_SUITE
