#pragma once

#include <array>

#include "multgen/liealgebra.hpp"
#include "multgen/structure.hpp"

namespace multgen {

// Lie-level description of the subgroup generated by all semisimple elements,
// cross-checked against the minimal-ideal oracle.
struct MultGenReport {
  Subspace n1;           // span [reductive, nil]: sum of nontrivial isotypic components
  Subspace s;            // subalgebra of nil generated by n1
  Subspace m;            // Lie(G^mult) = reductive + s
  Subspace oracle;       // ideal_closure(reductive); must equal m
  Subspace g_add;        // Lie(G^add) = levi + nil
  Subspace center_of_m;  // { x in m : [m, x] = 0 }
  bool is_mult_generated = false;
  bool is_add_generated = false;
  int char_rank = 0;  // dim g - dim g_add
  std::array<bool, 5> prop_conditions{};
};

// n1 = [reductive, nil]; verified against the fixed-point complement:
// nil = n1 (+) { v in nil : [reductive, v] = 0 }.
Subspace nontrivial_isotypic(const LieAlgebra& g, const StructureReport& report);

// Smallest bracket-closed subspace containing seed (seed must lie in nil).
Subspace bracket_closure(const LieAlgebra& g, const Subspace& seed);

// Full multiplicative-generation computation. Throws TheoremViolation if the
// computed m disagrees with the oracle or the five conditions diverge.
MultGenReport mult_subalgebra(const LieAlgebra& g, const StructureReport& report);

// The five equivalent conditions, evaluated independently at the Lie level:
//  [0],[1]  m = g (multiplicatively generated / generated by semisimple elements)
//  [2]      no nontrivial homomorphism to the additive group: nil inside [g,g]
//  [3]      no proper ideal containing reductive: ideal_closure(reductive) = g
//  [4]      [g,g] = levi + nil
std::array<bool, 5> proposition_conditions(const LieAlgebra& g, const StructureReport& report,
                                           const MultGenReport& mreport);

// Quotient g/ideal is a nilpotent Lie algebra.
bool quotient_is_nilpotent(const LieAlgebra& g, const Subspace& ideal);

// Regular-subgroup check: f reductive, g_sub a bracket-closed subspace of f
// containing the declared maximal toral subalgebra; runs the full pipeline on
// the subalgebra and returns its is_mult_generated.
bool corollary_check(const LieAlgebra& f, const Subspace& g_sub, const Subspace& declared_torus,
                     int rank_of_f);

}  // namespace multgen
