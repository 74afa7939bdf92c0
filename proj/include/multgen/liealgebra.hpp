#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "multgen/qmatrix.hpp"
#include "multgen/subspace.hpp"

namespace multgen {

// Commutator xy - yx.
QMatrix bracket(const QMatrix& x, const QMatrix& y);

// Matrix Lie algebra over Q: an ambient size n, a linearly independent list
// of n x n basis matrices verified closed under the commutator, and the
// structure constants of that basis. After construction all bracket work is
// done in coordinates.
class LieAlgebra {
public:
  LieAlgebra(int ambient_size, std::vector<QMatrix> basis);

  int ambient_size() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  const std::vector<QMatrix>& basis() const { return basis_; }
  const QMatrix& basis_matrix(int i) const { return basis_[i]; }

  // Sparse column of structure constants: [x_i, x_j] = sum c^k_ij x_k.
  const std::vector<std::pair<int, Rat>>& bracket_of_basis(int i, int j) const { return sc_[i][j]; }
  Rat structure_constant(int i, int j, int k) const;

  // [u, v] for coordinate vectors over the basis.
  Vec coord_bracket(const Vec& u, const Vec& v) const;

  QMatrix matrix_of(const Vec& coords) const;
  // Coordinates of an ambient matrix over the basis; nullopt if outside the span.
  std::optional<Vec> coords_of_matrix(const QMatrix& m) const;

  // ad(x) as a dim x dim matrix acting on coordinates: v -> [x, v].
  QMatrix ad_matrix(const Vec& x) const;

  Subspace full_space() const { return Subspace::full(dim()); }

private:
  void compute_structure_constants();
  void verify_jacobi() const;

  int n_;
  std::vector<QMatrix> basis_;
  // Flattened-basis solver: rref_ = transform_ * flats_, used to express
  // ambient matrices over the original basis.
  QMatrix flats_;
  QMatrix flats_rref_;
  QMatrix flats_transform_;
  std::vector<int> flats_pivots_;
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> sc_;
};

// Span of all [a_i, b_j] over basis pairs, in coordinates of g.
Subspace product_space(const LieAlgebra& g, const Subspace& a, const Subspace& b);

// a, [a,a], [[a,a],[a,a]], ... until stabilization; last term is 0 iff solvable.
std::vector<Subspace> derived_series(const LieAlgebra& g, const Subspace& a);
std::vector<Subspace> derived_series(const LieAlgebra& g);

// a, [a,a], [a,[a,a]], ... ; last term is 0 iff nilpotent.
std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subspace& a);
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

// kappa(x_i, x_j) = trace(ad x_i . ad x_j).
QMatrix killing_form(const LieAlgebra& g);

// Killing form of the subalgebra spanned by a, computed from a's own
// adjoint action on itself. Throws std::invalid_argument if a is not closed.
QMatrix killing_form_of(const LieAlgebra& g, const Subspace& a);

// t(x_i, x_j) = trace(x_i x_j) in the ambient representation.
QMatrix trace_form(const LieAlgebra& g);

bool is_ideal(const LieAlgebra& g, const Subspace& a);
bool is_subalgebra(const LieAlgebra& g, const Subspace& a);

// { x in g : [x, v] = 0 for every generator v }.
Subspace joint_centralizer(const LieAlgebra& g, const std::vector<Vec>& generators);

// Minimal ideal of g containing seed: iterate m + [g, m] to stabilization.
Subspace ideal_closure(const LieAlgebra& g, const Subspace& seed);

}  // namespace multgen
