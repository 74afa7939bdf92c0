#pragma once

#include <vector>

#include "multgen/liealgebra.hpp"
#include "multgen/subspace.hpp"

namespace multgen {

struct VerificationFlags {
  bool radical_ideal = false;
  bool radical_solvable = false;
  bool nil_ideal = false;
  bool nil_associative_nilpotent = false;
  bool levi_complements_radical = false;
  bool levi_closed = false;
  bool levi_semisimple = false;
  bool torus_abelian = false;
  bool torus_semisimple = false;
  bool torus_centralizes_levi = false;
  bool sums_direct = false;

  bool all() const {
    return radical_ideal && radical_solvable && nil_ideal && nil_associative_nilpotent &&
           levi_complements_radical && levi_closed && levi_semisimple && torus_abelian &&
           torus_semisimple && torus_centralizes_levi && sums_direct;
  }
};

// Lie-level counterparts of G = G^red x| R_u(G), R(G) = Z x| R_u(G): all
// subspaces in coordinates of g.
struct StructureReport {
  Subspace rad;        // Lie(R(G))
  Subspace nil;        // Lie(R_u(G)), the nilpotent ideal
  Subspace levi;       // Lie(G^ss)
  Subspace torus;      // Lie(Z), commuting semisimple part
  Subspace reductive;  // levi + torus = Lie(G^red)
  VerificationFlags verified;
};

// rad = { x : kappa(x, [g,g]) = 0 }, verified solvable ideal.
Subspace solvable_radical(const LieAlgebra& g);

// Trace-form candidate rad cap { x : trace(x y) = 0 for all y in g },
// then verified: ideal, associative closure vanishes.
Subspace nilpotent_radical(const LieAlgebra& g, const Subspace& rad);

// Semisimple complement of rad, built from a vector-space complement
// corrected stage by stage through the derived series of rad.
Subspace levi_subalgebra(const LieAlgebra& g, const Subspace& rad);

// Commuting semisimple complement of nil inside rad, built incrementally
// from Jordan semisimple parts of lifts of rad/nil.
Subspace toral_complement(const LieAlgebra& g, const Subspace& rad, const Subspace& nil,
                          const Subspace& levi);

StructureReport decompose(const LieAlgebra& g);

// Verification-only pipeline for inputs that declare (nil, levi, torus).
StructureReport verify_declared(const LieAlgebra& g, const Subspace& nil, const Subspace& levi,
                                const Subspace& torus);

struct WeightSpace {
  std::vector<Rat> weight;  // ad-eigenvalue per element of the acting toral basis
  Subspace space;           // in coordinates of g, contained in nil
};

// Joint eigenspace decomposition of nil under ad of the given toral basis.
// Throws NotSplit when an ad-eigenvalue is irrational.
std::vector<WeightSpace> weight_decomposition(const LieAlgebra& g, const StructureReport& report,
                                              const std::vector<Vec>& toral_basis);

}  // namespace multgen
