#include "multgen/subspace.hpp"

#include <ostream>
#include <stdexcept>

namespace multgen {

namespace {

QMatrix echelon_basis(const QMatrix& stacked) {
  auto r = rref(stacked);
  QMatrix basis(r.rank, stacked.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < stacked.cols(); ++j) basis.at(i, j) = r.mat.at(i, j);
  return basis;
}

void check_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace operation: ambient dimension mismatch");
}

}  // namespace

Subspace Subspace::zero(int ambient_dim) { return Subspace(ambient_dim, QMatrix(0, ambient_dim)); }

Subspace Subspace::full(int ambient_dim) { return Subspace(ambient_dim, QMatrix::identity(ambient_dim)); }

Subspace Subspace::span(int ambient_dim, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw std::invalid_argument("span: vector length does not match ambient dimension");
  return Subspace(ambient_dim, echelon_basis(QMatrix::from_rows(vectors, ambient_dim)));
}

Subspace Subspace::row_space(const QMatrix& m) { return Subspace(m.cols(), echelon_basis(m)); }

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (int i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vec Subspace::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("reduce: vector length does not match ambient dimension");
  // Echelon rows have 1 in their pivot column and 0 in every other pivot
  // column, so a single pass eliminates completely.
  for (int i = 0; i < dim(); ++i) {
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) {
        p = j;
        break;
      }
    if (p < 0) continue;
    const Rat c = v[p];
    if (c.is_zero()) continue;
    for (int j = p; j < ambient_; ++j) v[j] -= c * basis_.at(i, j);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_ambient(*this, other);
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("coords_of: vector length does not match ambient dimension");
  Vec coords(dim(), Rat(0));
  Vec rest = v;
  for (int i = 0; i < dim(); ++i) {
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) {
        p = j;
        break;
      }
    if (p < 0) continue;
    const Rat c = rest[p];
    coords[i] = c;
    if (c.is_zero()) continue;
    for (int j = p; j < ambient_; ++j) rest[j] -= c * basis_.at(i, j);
  }
  if (!vec_is_zero(rest)) return std::nullopt;
  return coords;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  QMatrix stacked(a.dim() + b.dim(), a.ambient_dim());
  for (int i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis_vector(i));
  for (int i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis_vector(i));
  return Subspace::row_space(stacked);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  const int n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  // (alpha, beta) with A^T alpha + B^T beta = 0 gives A^T alpha in both spans.
  QMatrix sys(n, a.dim() + b.dim());
  for (int j = 0; j < a.dim(); ++j)
    for (int i = 0; i < n; ++i) sys.at(i, j) = a.basis().at(j, i);
  for (int j = 0; j < b.dim(); ++j)
    for (int i = 0; i < n; ++i) sys.at(i, a.dim() + j) = b.basis().at(j, i);
  Subspace null = kernel(sys);
  std::vector<Vec> gens;
  gens.reserve(null.dim());
  for (int k = 0; k < null.dim(); ++k) {
    const Vec ab = null.basis_vector(k);
    Vec w(n, Rat(0));
    for (int j = 0; j < a.dim(); ++j) vec_axpy(w, ab[j], a.basis_vector(j));
    gens.push_back(std::move(w));
  }
  return Subspace::span(n, gens);
}

Subspace kernel(const QMatrix& m) {
  const auto r = rref(m);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, Rat(0));
    v[f] = Rat(1);
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.mat.at(i, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

std::vector<Vec> complement_in(const Subspace& outer, const Subspace& inner) {
  check_ambient(outer, inner);
  if (!outer.contains(inner))
    throw std::invalid_argument("complement_in: inner subspace not contained in outer");
  std::vector<Vec> out;
  Subspace cur = inner;
  for (int i = 0; i < outer.dim(); ++i) {
    Vec v = outer.basis_vector(i);
    if (cur.contains(v)) continue;
    out.push_back(v);
    cur = subspace_sum(cur, Subspace::span(outer.ambient_dim(), {v}));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  os << "subspace dim " << s.dim() << " of Q^" << s.ambient_dim();
  if (s.dim() > 0) os << "\n" << s.basis().str();
  return os;
}

}  // namespace multgen
