#include "multgen/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace multgen {

namespace {

using MatList = std::vector<QMatrix>;

QMatrix eij(int n, int i, int j) { return QMatrix::unit(n, i, j); }

MatList sl_basis(int n) {
  MatList out;
  for (int i = 0; i + 1 < n; ++i) {
    QMatrix h(n, n);
    h.at(i, i) = Rat(1);
    h.at(i + 1, i + 1) = Rat(-1);
    out.push_back(h);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back(eij(n, i, j));
  return out;
}

MatList parabolic_sl_basis(int n, const std::vector<int>& blocks) {
  MatList out;
  std::vector<int> start{0};
  for (int b : blocks) start.push_back(start.back() + b);
  // sl part of each diagonal block
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const int s = start[bi], len = blocks[bi];
    for (int i = 0; i + 1 < len; ++i) {
      QMatrix h(n, n);
      h.at(s + i, s + i) = Rat(1);
      h.at(s + i + 1, s + i + 1) = Rat(-1);
      out.push_back(h);
    }
    for (int i = 0; i < len; ++i)
      for (int j = 0; j < len; ++j)
        if (i != j) out.push_back(eij(n, s + i, s + j));
  }
  // traceless block scalars spanning the center of the Levi part
  for (std::size_t bi = 0; bi + 1 < blocks.size(); ++bi) {
    QMatrix z(n, n);
    for (int i = 0; i < blocks[bi]; ++i) z.at(start[bi] + i, start[bi] + i) = Rat(blocks[bi + 1]);
    for (int i = 0; i < blocks[bi + 1]; ++i)
      z.at(start[bi + 1] + i, start[bi + 1] + i) = Rat(-blocks[bi]);
    out.push_back(z);
  }
  // off-block upper entries
  for (std::size_t bi = 0; bi < blocks.size(); ++bi)
    for (std::size_t bj = bi + 1; bj < blocks.size(); ++bj)
      for (int i = 0; i < blocks[bi]; ++i)
        for (int j = 0; j < blocks[bj]; ++j) out.push_back(eij(n, start[bi] + i, start[bj] + j));
  return out;
}

// sp4 with the form [[0, I], [-I, 0]]: X = [[A, B], [C, -A^T]], B, C symmetric.
QMatrix sp4_embed_a(const QMatrix& a) {
  QMatrix m(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m.at(i, j) = a.at(i, j);
      m.at(2 + i, 2 + j) = -a.at(j, i);
    }
  return m;
}

QMatrix sp4_embed_b(const QMatrix& b) {
  QMatrix m(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(i, 2 + j) = b.at(i, j);
  return m;
}

QMatrix sp4_embed_c(const QMatrix& c) {
  QMatrix m(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(2 + i, j) = c.at(i, j);
  return m;
}

MatList sp4_sym_block() {
  QMatrix s12(2, 2);
  s12.at(0, 1) = Rat(1);
  s12.at(1, 0) = Rat(1);
  return {eij(2, 0, 0), eij(2, 1, 1), s12};
}

// Order: sl2 of the A block (h, e, f), then the central z = identity A,
// then the three symmetric B generators; the full sp4 appends the C block.
MatList siegel_parabolic_basis() {
  MatList out;
  QMatrix h(2, 2);
  h.at(0, 0) = Rat(1);
  h.at(1, 1) = Rat(-1);
  out.push_back(sp4_embed_a(h));
  out.push_back(sp4_embed_a(eij(2, 0, 1)));
  out.push_back(sp4_embed_a(eij(2, 1, 0)));
  out.push_back(sp4_embed_a(QMatrix::identity(2)));
  for (const auto& b : sp4_sym_block()) out.push_back(sp4_embed_b(b));
  return out;
}

MatList sp4_basis() {
  MatList out = siegel_parabolic_basis();
  for (const auto& c : sp4_sym_block()) out.push_back(sp4_embed_c(c));
  return out;
}

MatList gm_basis(int n) {
  MatList out;
  for (int i = 0; i < n; ++i) out.push_back(eij(n, i, i));
  return out;
}

MatList ga_basis(int n) {
  MatList out;
  for (int j = 1; j <= n; ++j) out.push_back(eij(n + 1, 0, j));
  return out;
}

MatList heisenberg_torus_basis(long w1, long w2) {
  QMatrix t(3, 3);
  t.at(0, 0) = Rat(w1);
  t.at(2, 2) = Rat(w2);
  return {t, eij(3, 0, 1), eij(3, 1, 2), eij(3, 0, 2)};
}

MatList upper_triangular_basis(int n) {
  MatList out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.push_back(eij(n, i, j));
  return out;
}

ExpectedOutcome expect(int dim_g, int rad, int nil, int levi, int torus, int red, int n1, int s,
                       int m, bool is_mult, bool is_add, int char_rank) {
  ExpectedOutcome e;
  e.dim_g = dim_g;
  e.dim_rad = rad;
  e.dim_nil = nil;
  e.dim_levi = levi;
  e.dim_torus = torus;
  e.dim_reductive = red;
  e.dim_n1 = n1;
  e.dim_s = s;
  e.dim_m = m;
  e.is_mult = is_mult;
  e.is_add = is_add;
  e.char_rank = char_rank;
  return e;
}

bool parse_int_suffix(const std::string& s, const std::string& prefix, int& out) {
  if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) return false;
  std::string rest = s.substr(prefix.size());
  bool paren = false;
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
    paren = true;
  }
  (void)paren;
  if (rest.empty()) return false;
  for (char c : rest)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  out = std::stoi(rest);
  return true;
}

bool parse_heisenberg(const std::string& s, long& w1, long& w2) {
  const std::string prefix = "heisenberg-torus(";
  if (s.compare(0, prefix.size(), prefix) != 0 || s.back() != ')') return false;
  const std::string inner = s.substr(prefix.size(), s.size() - prefix.size() - 1);
  const auto comma = inner.find(',');
  if (comma == std::string::npos) return false;
  try {
    std::size_t used = 0;
    w1 = std::stol(inner.substr(0, comma), &used);
    if (used != comma) return false;
    const std::string right = inner.substr(comma + 1);
    w2 = std::stol(right, &used);
    if (used != right.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

CatalogEntry builtin(const std::string& name) {
  if (name == "paper-ex") {
    // Solvable subalgebra of gl4 spanned by E22, E12, E13, E14, E24, E34
    // (one-based indices): tangent algebra of the group of matrices
    // [[1,a,d,b],[0,t,0,c],[0,0,1,e],[0,0,0,1]].
    MatList basis{eij(4, 1, 1), eij(4, 0, 1), eij(4, 0, 2),
                  eij(4, 0, 3), eij(4, 1, 3), eij(4, 2, 3)};
    auto e = expect(6, 6, 5, 0, 1, 1, 2, 3, 4, false, false, 1);
    e.dim_center_of_m = 1;
    return CatalogEntry{name, LieAlgebra(4, std::move(basis)), e};
  }
  if (name == "sl2-borel") {
    QMatrix h(2, 2);
    h.at(0, 0) = Rat(1);
    h.at(1, 1) = Rat(-1);
    MatList basis{h, eij(2, 0, 1)};
    return CatalogEntry{name, LieAlgebra(2, std::move(basis)),
                        expect(2, 2, 1, 0, 1, 1, 1, 1, 2, true, false, 1)};
  }
  if (name == "parabolic-sp4") {
    return CatalogEntry{name, LieAlgebra(4, siegel_parabolic_basis()),
                        expect(7, 4, 3, 3, 1, 4, 3, 3, 7, true, false, 1)};
  }
  if (name == "sp4") {
    return CatalogEntry{name, LieAlgebra(4, sp4_basis()),
                        expect(10, 0, 0, 10, 0, 10, 0, 0, 10, true, true, 0)};
  }
  {
    int n = 0;
    if (parse_int_suffix(name, "sl", n)) {
      if (n < 2 || n > 5) throw std::invalid_argument("sl(n): n must be between 2 and 5");
      const int d = n * n - 1;
      return CatalogEntry{name, LieAlgebra(n, sl_basis(n)),
                          expect(d, 0, 0, d, 0, d, 0, 0, d, true, true, 0)};
    }
    if (parse_int_suffix(name, "gm", n)) {
      if (n < 1 || n > 8) throw std::invalid_argument("gm(n): n must be between 1 and 8");
      return CatalogEntry{name, LieAlgebra(n, gm_basis(n)),
                          expect(n, n, 0, 0, n, n, 0, 0, n, true, false, n)};
    }
    if (parse_int_suffix(name, "ga", n)) {
      if (n < 1 || n > 8) throw std::invalid_argument("ga(n): n must be between 1 and 8");
      return CatalogEntry{name, LieAlgebra(n + 1, ga_basis(n)),
                          expect(n, n, n, 0, 0, 0, 0, 0, 0, false, true, 0)};
    }
    if (parse_int_suffix(name, "upper-triangular", n) || parse_int_suffix(name, "ut", n)) {
      if (n < 2 || n > 5) throw std::invalid_argument("upper-triangular(n): n must be between 2 and 5");
      const int d = n * (n + 1) / 2;
      const int strict = n * (n - 1) / 2;
      return CatalogEntry{"upper-triangular(" + std::to_string(n) + ")",
                          LieAlgebra(n, upper_triangular_basis(n)),
                          expect(d, d, strict, 0, n, n, strict, strict, d, true, false, n)};
    }
  }
  if (name.rfind("parabolic-sl", 0) == 0) {
    // parabolic-sl<N>-<blocks>, e.g. parabolic-sl3-21 for blocks (2, 1).
    const std::string rest = name.substr(std::string("parabolic-sl").size());
    const auto dash = rest.find('-');
    if (dash != std::string::npos) {
      const std::string nstr = rest.substr(0, dash), bstr = rest.substr(dash + 1);
      bool digits = !nstr.empty() && !bstr.empty();
      for (char c : nstr + bstr)
        if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
      if (digits) {
        const int n = std::stoi(nstr);
        std::vector<int> blocks;
        int sum = 0;
        for (char c : bstr) {
          blocks.push_back(c - '0');
          sum += c - '0';
        }
        if (n < 2 || n > 5 || sum != n || blocks.size() < 2)
          throw std::invalid_argument("parabolic-sl: blocks must be a composition of n into >= 2 parts");
        int levi = 0;
        for (int b : blocks) levi += b * b - 1;
        int nil = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i)
          for (std::size_t j = i + 1; j < blocks.size(); ++j) nil += blocks[i] * blocks[j];
        const int z = static_cast<int>(blocks.size()) - 1;
        const int d = levi + z + nil;
        return CatalogEntry{name, LieAlgebra(n, parabolic_sl_basis(n, blocks)),
                            expect(d, z + nil, nil, levi, z, levi + z, nil, nil, d, true, false, z)};
      }
    }
  }
  {
    long w1 = 0, w2 = 0;
    if (parse_heisenberg(name, w1, w2)) {
      if (w1 == 0 && w2 == 0)
        throw std::invalid_argument("heisenberg-torus: weights (0,0) degenerate the torus direction");
      std::optional<ExpectedOutcome> e;
      if (w1 == 1 && w2 == 0) e = expect(4, 4, 3, 0, 1, 1, 2, 2, 3, false, false, 1);
      // All three weights (1, 1, 2) are nonzero, so n1 is already all of nil.
      if (w1 == 1 && w2 == -1) e = expect(4, 4, 3, 0, 1, 1, 3, 3, 4, true, false, 1);
      return CatalogEntry{name, LieAlgebra(3, heisenberg_torus_basis(w1, w2)), e};
    }
  }
  throw std::invalid_argument("unknown builtin name: '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"paper-ex",
          "sl2",
          "sl3",
          "sl4",
          "sl2-borel",
          "parabolic-sl3-21",
          "parabolic-sl4-22",
          "parabolic-sp4",
          "sp4",
          "gm1",
          "gm2",
          "gm3",
          "ga1",
          "ga2",
          "ga3",
          "heisenberg-torus(1,0)",
          "heisenberg-torus(1,-1)",
          "upper-triangular(2)",
          "upper-triangular(3)",
          "upper-triangular(4)"};
}

namespace {

Subspace coords_span(const LieAlgebra& f, const MatList& mats) {
  std::vector<Vec> vs;
  for (const auto& m : mats) {
    auto c = f.coords_of_matrix(m);
    if (!c) throw std::logic_error("catalog: matrix outside the ambient algebra");
    vs.push_back(*c);
  }
  return Subspace::span(f.dim(), vs);
}

}  // namespace

RegularCase regular_case(const std::string& name) {
  if (name == "borel-sl2") {
    LieAlgebra f(2, sl_basis(2));
    QMatrix h(2, 2);
    h.at(0, 0) = Rat(1);
    h.at(1, 1) = Rat(-1);
    Subspace sub = coords_span(f, {h, eij(2, 0, 1)});
    Subspace torus = coords_span(f, {h});
    return RegularCase{name, std::move(f), std::move(sub), std::move(torus), 1};
  }
  if (name == "parabolic-sl3-21" || name == "parabolic-sl4-22") {
    const int n = name == "parabolic-sl3-21" ? 3 : 4;
    const std::vector<int> blocks = n == 3 ? std::vector<int>{2, 1} : std::vector<int>{2, 2};
    LieAlgebra f(n, sl_basis(n));
    Subspace sub = coords_span(f, parabolic_sl_basis(n, blocks));
    MatList cartan;
    for (int i = 0; i + 1 < n; ++i) {
      QMatrix h(n, n);
      h.at(i, i) = Rat(1);
      h.at(i + 1, i + 1) = Rat(-1);
      cartan.push_back(h);
    }
    Subspace torus = coords_span(f, cartan);
    return RegularCase{name, std::move(f), std::move(sub), std::move(torus), n - 1};
  }
  if (name == "parabolic-sp4") {
    LieAlgebra f(4, sp4_basis());
    Subspace sub = coords_span(f, siegel_parabolic_basis());
    Subspace torus = coords_span(f, {sp4_embed_a(eij(2, 0, 0)), sp4_embed_a(eij(2, 1, 1))});
    return RegularCase{name, std::move(f), std::move(sub), std::move(torus), 2};
  }
  throw std::invalid_argument("unknown regular case: '" + name + "'");
}

std::vector<std::string> regular_case_names() {
  return {"borel-sl2", "parabolic-sl3-21", "parabolic-sl4-22", "parabolic-sp4"};
}

std::uint64_t Prng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Irreducible sl2 representation of the given dimension: e, h, f blocks.
void sl2_irrep(int m, QMatrix& e, QMatrix& h, QMatrix& f) {
  e = QMatrix(m, m);
  h = QMatrix(m, m);
  f = QMatrix(m, m);
  for (int j = 0; j < m; ++j) h.at(j, j) = Rat(m - 1 - 2 * j);
  for (int j = 1; j < m; ++j) e.at(j - 1, j) = Rat(static_cast<long>(j) * (m - j));
  for (int j = 0; j + 1 < m; ++j) f.at(j + 1, j) = Rat(1);
}

}  // namespace

int SemidirectSpec::algebra_dim() const {
  int d = (has_sl2 ? 3 : 0) + torus_count;
  for (const auto& m : modules) d += m.dim;
  if (heisenberg_module >= 0) d += modules[heisenberg_module].dim + 1;
  return d;
}

LieAlgebra semidirect_algebra(const SemidirectSpec& spec) {
  if (spec.torus_count < 0 || spec.torus_count > 2)
    throw std::invalid_argument("semidirect_algebra: torus_count must be 0..2");
  if (static_cast<int>(spec.torus_first.size()) != spec.torus_count ||
      static_cast<int>(spec.torus_last.size()) != spec.torus_count)
    throw std::invalid_argument("semidirect_algebra: torus diagonal entries mismatch torus_count");
  for (const auto& m : spec.modules) {
    if (m.dim < 1 || (!spec.has_sl2 && m.dim != 1))
      throw std::invalid_argument("semidirect_algebra: module dimension invalid");
    if (static_cast<int>(m.weights.size()) != spec.torus_count)
      throw std::invalid_argument("semidirect_algebra: module weight count mismatch");
  }
  if (spec.heisenberg_module >= static_cast<int>(spec.modules.size()))
    throw std::invalid_argument("semidirect_algebra: heisenberg module index out of range");
  if (spec.algebra_dim() == 0)
    throw std::invalid_argument("semidirect_algebra: empty specification");

  int dcols = 0;
  for (const auto& m : spec.modules) dcols += m.dim;
  const int n = dcols + 2;  // row coordinate 0, module columns, last coordinate
  std::vector<int> offset;
  {
    int off = 1;
    for (const auto& m : spec.modules) {
      offset.push_back(off);
      off += m.dim;
    }
  }

  MatList basis;
  if (spec.has_sl2) {
    QMatrix e(n, n), h(n, n), f(n, n);
    for (std::size_t mi = 0; mi < spec.modules.size(); ++mi) {
      QMatrix eb, hb, fb;
      sl2_irrep(spec.modules[mi].dim, eb, hb, fb);
      for (int r = 0; r < spec.modules[mi].dim; ++r)
        for (int c = 0; c < spec.modules[mi].dim; ++c) {
          e.at(offset[mi] + r, offset[mi] + c) += eb.at(r, c);
          h.at(offset[mi] + r, offset[mi] + c) += hb.at(r, c);
          f.at(offset[mi] + r, offset[mi] + c) += fb.at(r, c);
        }
    }
    basis.push_back(e);
    basis.push_back(h);
    basis.push_back(f);
  }
  for (int ti = 0; ti < spec.torus_count; ++ti) {
    QMatrix t(n, n);
    t.at(0, 0) = Rat(spec.torus_first[ti]);
    t.at(n - 1, n - 1) = Rat(spec.torus_last[ti]);
    for (std::size_t mi = 0; mi < spec.modules.size(); ++mi)
      for (int r = 0; r < spec.modules[mi].dim; ++r)
        t.at(offset[mi] + r, offset[mi] + r) = Rat(spec.modules[mi].weights[ti]);
    basis.push_back(t);
  }
  for (std::size_t mi = 0; mi < spec.modules.size(); ++mi)
    for (int r = 0; r < spec.modules[mi].dim; ++r) basis.push_back(eij(n, offset[mi] + r, n - 1));
  if (spec.heisenberg_module >= 0) {
    for (int r = 0; r < spec.modules[spec.heisenberg_module].dim; ++r)
      basis.push_back(eij(n, 0, offset[spec.heisenberg_module] + r));
    basis.push_back(eij(n, 0, n - 1));
  }
  return LieAlgebra(n, std::move(basis));
}

LieAlgebra random_algebraic(std::uint64_t seed, const RandomParams& params) {
  if (params.max_dim < 5) throw std::invalid_argument("random_algebraic: max_dim must be at least 5");
  Prng rng(seed);
  SemidirectSpec spec;

  const int kind = static_cast<int>(rng.below(4));  // 0 none, 1 torus, 2 sl2, 3 sl2+torus
  spec.has_sl2 = kind >= 2;
  spec.torus_count = kind == 1 ? 1 + static_cast<int>(rng.below(2)) : (kind == 3 ? 1 : 0);
  int budget = params.max_dim - (spec.has_sl2 ? 3 : 0) - spec.torus_count;
  if (spec.has_sl2 && budget < 2) {
    // Not enough room for a faithful sl2 module; fall back to a torus.
    spec.has_sl2 = false;
    spec.torus_count = std::max(spec.torus_count, 1);
    budget = params.max_dim - spec.torus_count;
  }
  for (int ti = 0; ti < spec.torus_count; ++ti) {
    // Reserved unit entries keep the torus generators independent of the
    // other basis elements and of each other.
    spec.torus_first.push_back(ti == 0 ? 1 : 0);
    spec.torus_last.push_back(ti == 1 ? 1 : (spec.torus_count == 1 ? rng.range(-1, 1) : 0));
  }

  auto draw_weights = [&]() {
    std::vector<long> w(spec.torus_count);
    for (auto& x : w) x = rng.range(-2, 2);
    return w;
  };
  if (spec.has_sl2 && budget >= 2) {
    spec.modules.push_back({2, draw_weights()});  // guarantees a faithful sl2 action
    budget -= 2;
  }
  while (budget > 0 && rng.below(4) != 0) {
    const int md = spec.has_sl2
                       ? static_cast<int>(1 + rng.below(static_cast<std::uint64_t>(std::min(3, budget))))
                       : 1;
    spec.modules.push_back({md, draw_weights()});
    budget -= md;
  }
  if (!spec.modules.empty() && rng.below(2) == 0) {
    const int cand = static_cast<int>(rng.below(spec.modules.size()));
    if (spec.modules[cand].dim + 1 <= budget) {
      spec.heisenberg_module = cand;
      budget -= spec.modules[cand].dim + 1;
    }
  }
  if (spec.algebra_dim() == 0) spec.modules.push_back({1, {}});

  return semidirect_algebra(spec);
}

}  // namespace multgen
