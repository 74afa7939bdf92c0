#include <doctest.h>

#include "multgen/catalog.hpp"
#include "multgen/chevalley.hpp"
#include "multgen/errors.hpp"
#include "multgen/multgen.hpp"
#include "multgen/structure.hpp"
#include "test_util.hpp"

using namespace multgen;
using namespace multgen::testutil;

namespace {

Subspace coord_span(const LieAlgebra& g, const std::vector<int>& idx) {
  std::vector<Vec> vs;
  for (int i : idx) vs.push_back(unit(g.dim(), i));
  return Subspace::span(g.dim(), vs);
}

// Torus generator with irrational eigenvalues (minimal polynomial t^2 - 2)
// acting on a two-dimensional column module: an algebraic tangent algebra
// whose torus is not split over Q.
LieAlgebra nonsplit_torus_algebra() {
  QMatrix t(3, 3);
  t.at(0, 1) = Rat(2);
  t.at(1, 0) = Rat(1);
  return LieAlgebra(3, {t, QMatrix::unit(3, 0, 2), QMatrix::unit(3, 1, 2)});
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("solvable radical") {
  CHECK(solvable_radical(builtin("sl2").g).is_zero());
  const LieAlgebra paper = builtin("paper-ex").g;
  CHECK(solvable_radical(paper) == paper.full_space());
  const LieAlgebra par = builtin("parabolic-sl3-21").g;
  const Subspace rad = solvable_radical(par);
  CHECK(rad.dim() == 3);
  CHECK(rad == coord_span(par, {3, 4, 5}));  // z and the two nilpotent directions
}

TEST_CASE("nilpotent radical") {
  const LieAlgebra borel = builtin("sl2-borel").g;  // basis (h, e)
  CHECK(nilpotent_radical(borel, solvable_radical(borel)) == coord_span(borel, {1}));

  const LieAlgebra paper = builtin("paper-ex").g;
  const Subspace nil = nilpotent_radical(paper, solvable_radical(paper));
  CHECK(nil.dim() == 5);
  CHECK(nil == coord_span(paper, {1, 2, 3, 4, 5}));

  const LieAlgebra gm3 = builtin("gm3").g;
  CHECK(nilpotent_radical(gm3, solvable_radical(gm3)).is_zero());
}

TEST_CASE("levi subalgebra") {
  const LieAlgebra sl2 = builtin("sl2").g;
  CHECK(levi_subalgebra(sl2, solvable_radical(sl2)) == sl2.full_space());

  const LieAlgebra paper = builtin("paper-ex").g;
  CHECK(levi_subalgebra(paper, solvable_radical(paper)).is_zero());

  const LieAlgebra par = builtin("parabolic-sl3-21").g;
  const Subspace levi = levi_subalgebra(par, solvable_radical(par));
  CHECK(levi.dim() == 3);
  CHECK(levi == coord_span(par, {0, 1, 2}));  // the upper sl2 block, no correction needed
  CHECK(is_subalgebra(par, levi));
  CHECK(rref(killing_form_of(par, levi)).rank == 3);
}

TEST_CASE("toral complement") {
  const LieAlgebra paper = builtin("paper-ex").g;
  const Subspace rad = solvable_radical(paper);
  const Subspace nil = nilpotent_radical(paper, rad);
  const Subspace levi = levi_subalgebra(paper, rad);
  CHECK(toral_complement(paper, rad, nil, levi) == coord_span(paper, {0}));  // span{E22}

  const LieAlgebra ga3 = builtin("ga3").g;
  CHECK(toral_complement(ga3, solvable_radical(ga3), nilpotent_radical(ga3, solvable_radical(ga3)),
                         Subspace::zero(3))
            .is_zero());

  const LieAlgebra borel = builtin("sl2-borel").g;
  const Subspace brad = solvable_radical(borel);
  CHECK(toral_complement(borel, brad, nilpotent_radical(borel, brad), Subspace::zero(2)) ==
        coord_span(borel, {0}));  // semisimple part of the lift h
}

TEST_CASE("levi extraction corrects a skewed complement") {
  // sl2 acting on its standard module, but with the sl2 directions smeared
  // into the module: the naive complement of the radical is not closed and
  // the correction system has to move it back.
  SemidirectSpec spec;
  spec.has_sl2 = true;
  spec.modules = {{2, {}}};
  const LieAlgebra clean = semidirect_algebra(spec);  // basis (e, h, f, v1, v2)
  std::vector<QMatrix> skewed = clean.basis();
  skewed[0] += clean.basis_matrix(3);  // e + v1
  skewed[1] += clean.basis_matrix(4);  // h + v2
  const LieAlgebra g(clean.ambient_size(), skewed);

  const Subspace rad = solvable_radical(g);
  CHECK(rad.dim() == 2);
  const Subspace levi = levi_subalgebra(g, rad);
  CHECK(levi.dim() == 3);
  CHECK(is_subalgebra(g, levi));
  CHECK(subspace_sum(levi, rad) == g.full_space());
  CHECK(rref(killing_form_of(g, levi)).rank == 3);
  // The skewed directions themselves do not close, so a correction happened.
  CHECK_FALSE(is_subalgebra(g, coord_span(g, {0, 1, 2})));
  CHECK(levi != coord_span(g, {0, 1, 2}));
  const StructureReport rep = decompose(g);
  CHECK(rep.verified.all());
}

TEST_CASE("levi correction reaches the second derived-series stage") {
  // sl2 on a standard module with its Heisenberg extension: the radical has
  // derived length two. Smearing e with the central corner direction leaves
  // the stage-zero defect invisible modulo [rad, rad]; only the second stage
  // can remove it.
  SemidirectSpec spec;
  spec.has_sl2 = true;
  spec.modules = {{2, {}}};
  spec.heisenberg_module = 0;
  const LieAlgebra clean = semidirect_algebra(spec);  // (e, h, f, v1, v2, u1, u2, c)
  const Subspace rad0 = solvable_radical(clean);
  REQUIRE(derived_series(clean, rad0).size() == 3);  // rad, corner, 0

  std::vector<QMatrix> skewed = clean.basis();
  skewed[0] += clean.basis_matrix(7);  // e + corner
  const LieAlgebra g(clean.ambient_size(), skewed);
  const Subspace rad = solvable_radical(g);
  CHECK(rad.dim() == 5);
  const Subspace levi = levi_subalgebra(g, rad);
  CHECK(levi.dim() == 3);
  CHECK(is_subalgebra(g, levi));
  CHECK(subspace_sum(levi, rad) == g.full_space());
  CHECK(levi != coord_span(g, {0, 1, 2}));
  CHECK(decompose(g).verified.all());
}

TEST_CASE("toral lift requiring a genuine Jordan split") {
  // Abelian algebra spanned by t + u and u, with t = diag(1,1,0) and
  // u = E12 commuting: the only available lift of rad/nil is t + u, whose
  // semisimple part t is recovered through the Jordan decomposition.
  QMatrix t(3, 3);
  t.at(0, 0) = Rat(1);
  t.at(1, 1) = Rat(1);
  const QMatrix u = QMatrix::unit(3, 0, 1);
  const LieAlgebra g(3, {t + u, u});
  const StructureReport r = decompose(g);
  CHECK(r.nil == coord_span(g, {1}));
  CHECK(r.torus == Subspace::span(2, {vec({1, -1})}));  // t = (t + u) - u
  CHECK(r.verified.all());
}

TEST_CASE("decompose dims on anchors") {
  auto dims = [](const StructureReport& r) {
    return std::vector<int>{r.rad.dim(), r.nil.dim(), r.levi.dim(), r.torus.dim(),
                            r.reductive.dim()};
  };
  CHECK(dims(decompose(builtin("paper-ex").g)) == std::vector<int>{6, 5, 0, 1, 1});
  CHECK(dims(decompose(builtin("sl2").g)) == std::vector<int>{0, 0, 3, 0, 3});
  CHECK(dims(decompose(builtin("heisenberg-torus(1,0)").g)) == std::vector<int>{4, 3, 0, 1, 1});
  CHECK(dims(decompose(builtin("parabolic-sp4").g)) == std::vector<int>{4, 3, 3, 1, 4});
}

TEST_CASE("decompose is deterministic") {
  const LieAlgebra g = builtin("parabolic-sl4-22").g;
  const StructureReport a = decompose(g);
  const StructureReport b = decompose(g);
  CHECK(a.rad == b.rad);
  CHECK(a.nil == b.nil);
  CHECK(a.levi == b.levi);
  CHECK(a.torus == b.torus);
  CHECK(a.reductive == b.reductive);
}

TEST_CASE("structure invariants hold across the catalog") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const LieAlgebra g = builtin(name).g;
    const StructureReport r = decompose(g);
    CHECK(r.verified.all());
    CHECK(r.rad.contains(r.nil));
    CHECK(subspace_sum(r.reductive, r.nil) == g.full_space());
    CHECK(r.reductive.dim() + r.nil.dim() == g.dim());
    CHECK(subspace_sum(r.torus, r.nil) == r.rad);
    for (int i = 0; i < r.nil.dim(); ++i)
      CHECK(is_nilpotent_matrix(g.matrix_of(r.nil.basis_vector(i))));
    for (int i = 0; i < r.torus.dim(); ++i)
      CHECK(is_semisimple_matrix(g.matrix_of(r.torus.basis_vector(i))));
  }
}

TEST_CASE("declared decompositions are verified, not trusted") {
  const LieAlgebra paper = builtin("paper-ex").g;
  // Correct declaration passes and agrees with the computed pipeline.
  const StructureReport ok = verify_declared(
      paper, coord_span(paper, {1, 2, 3, 4, 5}), Subspace::zero(6), coord_span(paper, {0}));
  CHECK(ok.verified.all());
  CHECK(ok.rad == decompose(paper).rad);

  // Declaring too small a nil radical breaks the direct-sum checks.
  CHECK_THROWS_AS(verify_declared(paper, coord_span(paper, {1, 2, 3}), Subspace::zero(6),
                                  coord_span(paper, {0})),
                  InputNotAlgebraic);
  // Declaring a non-semisimple "torus" is caught as well.
  CHECK_THROWS_AS(verify_declared(paper, coord_span(paper, {2, 3, 4, 5}), Subspace::zero(6),
                                  coord_span(paper, {0, 1})),
                  InputNotAlgebraic);
}

TEST_CASE("non-algebraic input is rejected") {
  // span{I + E12} is the tangent line of no algebraic group: its generator is
  // neither semisimple nor nilpotent and its Jordan parts escape the span.
  const QMatrix x = mat({{1, 1}, {0, 1}});
  const LieAlgebra g(2, {x});
  CHECK_THROWS_AS(decompose(g), InputNotAlgebraic);
}

TEST_CASE("weight decomposition of the paper example") {
  const LieAlgebra g = builtin("paper-ex").g;
  const StructureReport r = decompose(g);
  const auto spaces = weight_decomposition(g, r, r.torus.basis_vectors());
  REQUIRE(spaces.size() == 3);
  // Eigenvalues of ad(E22) on nil: -1 on E12, 0 on {E13, E14, E34}, +1 on E24.
  CHECK(spaces[0].weight == std::vector<Rat>{Rat(-1)});
  CHECK(spaces[0].space == coord_span(g, {1}));
  CHECK(spaces[1].weight == std::vector<Rat>{Rat(0)});
  CHECK(spaces[1].space == coord_span(g, {2, 3, 5}));
  CHECK(spaces[2].weight == std::vector<Rat>{Rat(1)});
  CHECK(spaces[2].space == coord_span(g, {4}));
}

TEST_CASE("weight decomposition of the borel") {
  const LieAlgebra g = builtin("sl2-borel").g;
  const StructureReport r = decompose(g);
  const auto spaces = weight_decomposition(g, r, r.torus.basis_vectors());
  REQUIRE(spaces.size() == 1);
  CHECK(spaces[0].weight == std::vector<Rat>{Rat(2)});  // [h, e] = 2e
  CHECK(spaces[0].space == r.nil);
}

TEST_CASE("weight decomposition of heisenberg-torus(1,0)") {
  // t = diag(1,0,0) acts on (x, y, z) = (E12, E23, E13) with weights (1, 0, 1).
  const LieAlgebra g = builtin("heisenberg-torus(1,0)").g;
  const StructureReport r = decompose(g);
  const auto spaces = weight_decomposition(g, r, r.torus.basis_vectors());
  REQUIRE(spaces.size() == 2);
  CHECK(spaces[0].weight == std::vector<Rat>{Rat(0)});
  CHECK(spaces[0].space == coord_span(g, {2}));
  CHECK(spaces[1].weight == std::vector<Rat>{Rat(1)});
  CHECK(spaces[1].space == coord_span(g, {1, 3}));
  // The nonzero-weight space is exactly the nontrivial isotypic part here.
  CHECK(spaces[1].space == nontrivial_isotypic(g, r));
}

TEST_CASE("weight decomposition with a trivial action") {
  const LieAlgebra g = builtin("ga2").g;
  const StructureReport r = decompose(g);
  const auto spaces = weight_decomposition(g, r, {});
  REQUIRE(spaces.size() == 1);
  CHECK(spaces[0].weight.empty());
  CHECK(spaces[0].space == r.nil);
}

TEST_CASE("non-split torus: pipeline works, weights are unavailable") {
  const LieAlgebra g = nonsplit_torus_algebra();
  const StructureReport r = decompose(g);
  CHECK(r.torus.dim() == 1);
  CHECK(r.nil.dim() == 2);
  CHECK_THROWS_AS(weight_decomposition(g, r, r.torus.basis_vectors()), NotSplit);
}

}  // TEST_SUITE
