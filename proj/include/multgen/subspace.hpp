#pragma once

#include <optional>
#include <vector>

#include "multgen/qmatrix.hpp"

namespace multgen {

// Linear subspace of Q^n, stored as its unique reduced row-echelon basis.
// Equality of subspaces is therefore structural equality.
class Subspace {
public:
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);
  static Subspace span(int ambient_dim, const std::vector<Vec>& vectors);
  static Subspace row_space(const QMatrix& m);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  const QMatrix& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.row(i); }
  std::vector<Vec> basis_vectors() const;

  // Residual of v after eliminating against the basis; zero iff v is in the span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coefficients of v over the echelon basis, or nullopt if v is outside.
  std::optional<Vec> coords_of(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  Subspace(int ambient, QMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  int ambient_;
  QMatrix basis_;  // dim x ambient, RREF, no zero rows
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Null space of m as a subspace of Q^cols.
Subspace kernel(const QMatrix& m);

// Vectors of `outer` extending a basis of `inner` to one of `outer`,
// taken greedily from outer's echelon basis (deterministic).
std::vector<Vec> complement_in(const Subspace& outer, const Subspace& inner);

std::ostream& operator<<(std::ostream& os, const Subspace& s);

}  // namespace multgen
