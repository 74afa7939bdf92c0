#include "multgen/liealgebra.hpp"

#include <stdexcept>

#include "multgen/errors.hpp"

namespace multgen {

QMatrix bracket(const QMatrix& x, const QMatrix& y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
    throw std::invalid_argument("bracket: matrices must be square of equal size");
  return x * y - y * x;
}

LieAlgebra::LieAlgebra(int ambient_size, std::vector<QMatrix> basis)
    : n_(ambient_size), basis_(std::move(basis)) {
  if (n_ <= 0) throw std::invalid_argument("LieAlgebra: ambient size must be positive");
  for (const auto& m : basis_)
    if (m.rows() != n_ || m.cols() != n_)
      throw std::invalid_argument("LieAlgebra: basis matrix size does not match ambient size");

  const int d = dim();
  flats_ = QMatrix(d, n_ * n_);
  for (int i = 0; i < d; ++i) flats_.set_row(i, basis_[i].flatten());
  auto rt = rref_with_transform(flats_);
  if (rt.rank != d)
    throw InputNotAlgebraic("basis-independence", "basis matrices are linearly dependent");
  flats_rref_ = std::move(rt.mat);
  flats_transform_ = std::move(rt.transform);
  flats_pivots_ = std::move(rt.pivots);

  compute_structure_constants();
  verify_jacobi();
}

std::optional<Vec> LieAlgebra::coords_of_matrix(const QMatrix& m) const {
  if (m.rows() != n_ || m.cols() != n_)
    throw std::invalid_argument("coords_of_matrix: size mismatch");
  const Vec flat = m.flatten();
  const int d = dim();
  // Coefficients over the echelon rows are read off at the pivots, then
  // mapped back through the recorded row operations.
  Vec ech_coeff(d, Rat(0));
  Vec rest = flat;
  for (int i = 0; i < d; ++i) {
    const int p = flats_pivots_[i];
    const Rat c = rest[p];
    ech_coeff[i] = c;
    if (c.is_zero()) continue;
    for (int j = p; j < n_ * n_; ++j) rest[j] -= c * flats_rref_.at(i, j);
  }
  if (!vec_is_zero(rest)) return std::nullopt;
  Vec coords(d, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (ech_coeff[i].is_zero()) continue;
    for (int k = 0; k < d; ++k) coords[k] += ech_coeff[i] * flats_transform_.at(i, k);
  }
  return coords;
}

void LieAlgebra::compute_structure_constants() {
  const int d = dim();
  sc_.assign(d, std::vector<std::vector<std::pair<int, Rat>>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const QMatrix br = bracket(basis_[i], basis_[j]);
      auto coords = coords_of_matrix(br);
      if (!coords)
        throw InputNotAlgebraic("bracket-closure",
                                "bracket of basis elements " + std::to_string(i) + " and " +
                                    std::to_string(j) + " falls outside the span");
      for (int k = 0; k < d; ++k) {
        if ((*coords)[k].is_zero()) continue;
        sc_[i][j].push_back({k, (*coords)[k]});
        sc_[j][i].push_back({k, -(*coords)[k]});
      }
    }
}

Rat LieAlgebra::structure_constant(int i, int j, int k) const {
  for (const auto& [idx, c] : sc_[i][j])
    if (idx == k) return c;
  return Rat(0);
}

Vec LieAlgebra::coord_bracket(const Vec& u, const Vec& v) const {
  const int d = dim();
  if (static_cast<int>(u.size()) != d || static_cast<int>(v.size()) != d)
    throw std::invalid_argument("coord_bracket: coordinate length mismatch");
  Vec out(d, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (v[j].is_zero()) continue;
      const Rat f = u[i] * v[j];
      for (const auto& [k, c] : sc_[i][j]) out[k] += f * c;
    }
  }
  return out;
}

QMatrix LieAlgebra::matrix_of(const Vec& coords) const {
  if (static_cast<int>(coords.size()) != dim())
    throw std::invalid_argument("matrix_of: coordinate length mismatch");
  QMatrix m(n_, n_);
  for (int i = 0; i < dim(); ++i) {
    if (coords[i].is_zero()) continue;
    m += basis_[i] * coords[i];
  }
  return m;
}

QMatrix LieAlgebra::ad_matrix(const Vec& x) const {
  const int d = dim();
  QMatrix ad(d, d);
  for (int j = 0; j < d; ++j) {
    Vec ej(d, Rat(0));
    ej[j] = Rat(1);
    const Vec col = coord_bracket(x, ej);
    for (int k = 0; k < d; ++k) ad.at(k, j) = col[k];
  }
  return ad;
}

void LieAlgebra::verify_jacobi() const {
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        Vec ei(d, Rat(0)), ej(d, Rat(0)), ek(d, Rat(0));
        ei[i] = ej[j] = ek[k] = Rat(1);
        Vec sum = coord_bracket(ei, coord_bracket(ej, ek));
        vec_axpy(sum, Rat(1), coord_bracket(ej, coord_bracket(ek, ei)));
        vec_axpy(sum, Rat(1), coord_bracket(ek, coord_bracket(ei, ej)));
        if (!vec_is_zero(sum))
          throw InputNotAlgebraic("jacobi-identity",
                                  "structure constants violate the Jacobi identity on triple (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");
      }
}

namespace {

void check_in(const LieAlgebra& g, const Subspace& a, const char* who) {
  if (a.ambient_dim() != g.dim())
    throw std::invalid_argument(std::string(who) + ": subspace is not in coordinates of g");
}

}  // namespace

Subspace product_space(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  check_in(g, a, "product_space");
  check_in(g, b, "product_space");
  std::vector<Vec> gens;
  gens.reserve(static_cast<std::size_t>(a.dim()) * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      gens.push_back(g.coord_bracket(a.basis_vector(i), b.basis_vector(j)));
  return Subspace::span(g.dim(), gens);
}

std::vector<Subspace> derived_series(const LieAlgebra& g, const Subspace& a) {
  check_in(g, a, "derived_series");
  std::vector<Subspace> out{a};
  for (int step = 0; step <= g.dim(); ++step) {
    Subspace next = product_space(g, out.back(), out.back());
    if (next == out.back()) break;
    out.push_back(next);
    if (next.is_zero()) break;
  }
  return out;
}

std::vector<Subspace> derived_series(const LieAlgebra& g) { return derived_series(g, g.full_space()); }

std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subspace& a) {
  check_in(g, a, "lower_central_series");
  std::vector<Subspace> out{a};
  for (int step = 0; step <= g.dim(); ++step) {
    Subspace next = product_space(g, a, out.back());
    if (next == out.back()) break;
    out.push_back(next);
    if (next.is_zero()) break;
  }
  return out;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  return lower_central_series(g, g.full_space());
}

QMatrix killing_form(const LieAlgebra& g) {
  const int d = g.dim();
  std::vector<QMatrix> ads;
  ads.reserve(d);
  for (int i = 0; i < d; ++i) {
    Vec ei(d, Rat(0));
    ei[i] = Rat(1);
    ads.push_back(g.ad_matrix(ei));
  }
  QMatrix k(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat tr;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          const Rat& x = ads[i].at(r, c);
          if (!x.is_zero()) tr += x * ads[j].at(c, r);
        }
      k.at(i, j) = tr;
      k.at(j, i) = tr;
    }
  return k;
}

QMatrix killing_form_of(const LieAlgebra& g, const Subspace& a) {
  check_in(g, a, "killing_form_of");
  if (!is_subalgebra(g, a)) throw std::invalid_argument("killing_form_of: subspace is not a subalgebra");
  const int d = a.dim();
  // ad of a on itself, in coordinates of a's echelon basis.
  std::vector<QMatrix> ads(d, QMatrix(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Vec br = g.coord_bracket(a.basis_vector(i), a.basis_vector(j));
      auto c = a.coords_of(br);
      if (!c) throw std::invalid_argument("killing_form_of: bracket escaped the subalgebra");
      for (int k = 0; k < d; ++k) ads[i].at(k, j) = (*c)[k];
    }
  QMatrix k(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat tr;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          const Rat& x = ads[i].at(r, c);
          if (!x.is_zero()) tr += x * ads[j].at(c, r);
        }
      k.at(i, j) = tr;
      k.at(j, i) = tr;
    }
  return k;
}

QMatrix trace_form(const LieAlgebra& g) {
  const int d = g.dim();
  QMatrix t(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const Rat tr = (g.basis_matrix(i) * g.basis_matrix(j)).trace();
      t.at(i, j) = tr;
      t.at(j, i) = tr;
    }
  return t;
}

bool is_ideal(const LieAlgebra& g, const Subspace& a) {
  return a.contains(product_space(g, g.full_space(), a));
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& a) {
  return a.contains(product_space(g, a, a));
}

Subspace joint_centralizer(const LieAlgebra& g, const std::vector<Vec>& generators) {
  const int d = g.dim();
  if (generators.empty()) return Subspace::full(d);
  QMatrix stacked(static_cast<int>(generators.size()) * d, d);
  int row = 0;
  for (const auto& v : generators) {
    const QMatrix ad = g.ad_matrix(v);
    for (int r = 0; r < d; ++r, ++row)
      for (int c = 0; c < d; ++c) stacked.at(row, c) = ad.at(r, c);
  }
  return kernel(stacked);
}

Subspace ideal_closure(const LieAlgebra& g, const Subspace& seed) {
  check_in(g, seed, "ideal_closure");
  Subspace m = seed;
  for (int step = 0; step <= g.dim(); ++step) {
    Subspace next = subspace_sum(m, product_space(g, g.full_space(), m));
    if (next == m) return m;
    m = next;
  }
  return m;
}

}  // namespace multgen
