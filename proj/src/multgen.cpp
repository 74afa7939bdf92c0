#include "multgen/multgen.hpp"

#include <stdexcept>

#include "multgen/chevalley.hpp"
#include "multgen/errors.hpp"

namespace multgen {

Subspace nontrivial_isotypic(const LieAlgebra& g, const StructureReport& report) {
  const Subspace n1 = product_space(g, report.reductive, report.nil);
  // Complete reducibility witness: nil = n1 (+) fixed vectors.
  const Subspace fixed =
      subspace_intersect(report.nil, joint_centralizer(g, report.reductive.basis_vectors()));
  if (!(subspace_sum(n1, fixed) == report.nil) ||
      !subspace_intersect(n1, fixed).is_zero())
    throw InputNotAlgebraic("isotypic-splitting",
                            "nil does not split as [reductive, nil] plus fixed vectors");
  return n1;
}

Subspace bracket_closure(const LieAlgebra& g, const Subspace& seed) {
  Subspace s = seed;
  for (int step = 0; step <= g.dim(); ++step) {
    Subspace next = subspace_sum(s, product_space(g, s, s));
    if (next == s) return s;
    s = next;
  }
  return s;
}

bool quotient_is_nilpotent(const LieAlgebra& g, const Subspace& ideal) {
  // Lower central series of g/ideal, lifted: c_0 = g, c_{k+1} = ideal + [g, c_k].
  Subspace c = g.full_space();
  for (int step = 0; step <= g.dim(); ++step) {
    Subspace next = subspace_sum(ideal, product_space(g, g.full_space(), c));
    if (next == c) break;
    c = next;
  }
  return c == ideal;
}

MultGenReport mult_subalgebra(const LieAlgebra& g, const StructureReport& report) {
  MultGenReport out{Subspace::zero(g.dim()), Subspace::zero(g.dim()), Subspace::zero(g.dim()),
                    Subspace::zero(g.dim()), Subspace::zero(g.dim()), Subspace::zero(g.dim()),
                    false, false, 0, {}};
  out.n1 = nontrivial_isotypic(g, report);
  out.s = bracket_closure(g, out.n1);
  if (!report.nil.contains(out.s))
    throw TheoremViolation("bracket closure of [reductive, nil] escaped the nil radical");
  out.m = subspace_sum(report.reductive, out.s);
  if (out.m.dim() != report.reductive.dim() + out.s.dim())
    throw TheoremViolation("reductive and s do not sum directly");
  if (!is_ideal(g, out.m))
    throw TheoremViolation("reductive + s is not an ideal of g");

  // The central assertion: the constructed subalgebra equals the minimal
  // ideal containing the reductive part.
  out.oracle = ideal_closure(g, report.reductive);
  if (!(out.m == out.oracle))
    throw TheoremViolation("reductive + s differs from the minimal ideal containing reductive");

  out.g_add = subspace_sum(report.levi, report.nil);
  if (out.g_add.dim() != report.levi.dim() + report.nil.dim())
    throw TheoremViolation("levi and nil do not sum directly");
  out.char_rank = g.dim() - out.g_add.dim();
  out.is_mult_generated = out.m.dim() == g.dim();
  out.is_add_generated = out.g_add.dim() == g.dim();

  out.center_of_m = subspace_intersect(out.m, joint_centralizer(g, out.m.basis_vectors()));

  out.prop_conditions = proposition_conditions(g, report, out);
  return out;
}

std::array<bool, 5> proposition_conditions(const LieAlgebra& g, const StructureReport& report,
                                           const MultGenReport& mreport) {
  const Subspace derived = product_space(g, g.full_space(), g.full_space());
  std::array<bool, 5> cond{};
  cond[0] = mreport.m.dim() == g.dim();
  cond[1] = cond[0];
  cond[2] = derived.contains(report.nil);
  cond[3] = mreport.oracle.dim() == g.dim();
  cond[4] = derived == subspace_sum(report.levi, report.nil);
  for (int i = 1; i < 5; ++i)
    if (cond[i] != cond[0])
      throw TheoremViolation("equivalent conditions disagree: condition " + std::to_string(i + 1) +
                             " differs from condition 1");
  return cond;
}

bool corollary_check(const LieAlgebra& f, const Subspace& g_sub, const Subspace& declared_torus,
                     int rank_of_f) {
  {
    const StructureReport frep = decompose(f);
    if (!frep.nil.is_zero())
      throw std::invalid_argument("corollary_check: ambient algebra is not reductive");
  }
  if (!is_subalgebra(f, g_sub))
    throw std::invalid_argument("corollary_check: subspace is not closed under brackets");
  if (!g_sub.contains(declared_torus))
    throw std::invalid_argument("corollary_check: declared torus is not inside the subalgebra");
  if (!product_space(f, declared_torus, declared_torus).is_zero())
    throw std::invalid_argument("corollary_check: declared torus is not abelian");
  for (int i = 0; i < declared_torus.dim(); ++i)
    if (!is_semisimple_matrix(f.matrix_of(declared_torus.basis_vector(i))))
      throw std::invalid_argument("corollary_check: declared torus contains a non-semisimple element");
  if (declared_torus.dim() != rank_of_f)
    throw std::invalid_argument("corollary_check: declared torus is not maximal (rank mismatch)");

  std::vector<QMatrix> sub_basis;
  sub_basis.reserve(g_sub.dim());
  for (int i = 0; i < g_sub.dim(); ++i) sub_basis.push_back(f.matrix_of(g_sub.basis_vector(i)));
  const LieAlgebra h(f.ambient_size(), std::move(sub_basis));
  const StructureReport hrep = decompose(h);
  return mult_subalgebra(h, hrep).is_mult_generated;
}

}  // namespace multgen
