#pragma once

#include <string>
#include <vector>

#include "multgen/catalog.hpp"
#include "multgen/qmatrix.hpp"
#include "multgen/rat.hpp"
#include "multgen/subspace.hpp"

namespace multgen::testutil {

inline QMatrix mat(const std::vector<std::vector<long>>& rows) {
  QMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = Rat(rows[i][j]);
  return m;
}

inline QMatrix matq(const std::vector<std::vector<std::string>>& rows) {
  QMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = Rat::parse(rows[i][j]);
  return m;
}

inline Vec vec(const std::vector<long>& entries) {
  Vec v;
  v.reserve(entries.size());
  for (long e : entries) v.push_back(Rat(e));
  return v;
}

inline Vec unit(int n, int i) {
  Vec v(static_cast<std::size_t>(n), Rat(0));
  v[static_cast<std::size_t>(i)] = Rat(1);
  return v;
}

inline Rat random_rat(Prng& rng) {
  return Rat(rng.range(-9, 9), rng.range(1, 9));
}

inline QMatrix random_matrix(Prng& rng, int rows, int cols) {
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_rat(rng);
  return m;
}

inline QMatrix random_strict_upper(Prng& rng, int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.at(i, j) = Rat(rng.range(-3, 3), rng.range(1, 3));
  return m;
}

inline Subspace random_subspace(Prng& rng, int ambient, int gens) {
  std::vector<Vec> vs;
  for (int i = 0; i < gens; ++i) {
    Vec v(static_cast<std::size_t>(ambient));
    for (auto& x : v) x = Rat(rng.range(-4, 4));
    vs.push_back(std::move(v));
  }
  return Subspace::span(ambient, vs);
}

}  // namespace multgen::testutil
