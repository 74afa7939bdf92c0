#include "multgen/structure.hpp"

#include <stdexcept>
#include <string>

#include "multgen/chevalley.hpp"
#include "multgen/errors.hpp"

namespace multgen {

namespace {

bool direct_sum_equals(const Subspace& a, const Subspace& b, const Subspace& whole) {
  return a.dim() + b.dim() == whole.dim() && subspace_sum(a, b) == whole;
}

}  // namespace

Subspace solvable_radical(const LieAlgebra& g) {
  const int d = g.dim();
  const Subspace derived = product_space(g, g.full_space(), g.full_space());
  Subspace rad = Subspace::full(d);
  if (!derived.is_zero()) {
    // rad = kernel of x -> (kappa(x, d_j))_j over the derived subalgebra.
    const QMatrix kf = killing_form(g);
    QMatrix sys(derived.dim(), d);
    for (int j = 0; j < derived.dim(); ++j) {
      const Vec dj = derived.basis_vector(j);
      for (int c = 0; c < d; ++c) {
        Rat s;
        for (int k = 0; k < d; ++k)
          if (!dj[k].is_zero()) s += dj[k] * kf.at(k, c);
        sys.at(j, c) = s;
      }
    }
    rad = kernel(sys);
  }
  if (!is_ideal(g, rad))
    throw InputNotAlgebraic("radical-ideal", "Killing-perp of the derived subalgebra is not an ideal");
  if (!derived_series(g, rad).back().is_zero())
    throw InputNotAlgebraic("radical-solvable", "Killing-perp radical candidate is not solvable");
  return rad;
}

Subspace nilpotent_radical(const LieAlgebra& g, const Subspace& rad) {
  const int d = g.dim();
  const QMatrix tf = trace_form(g);
  Subspace candidate = subspace_intersect(rad, kernel(tf));
  if (!is_ideal(g, candidate))
    throw InputNotAlgebraic("nilradical-ideal", "trace-form candidate is not an ideal");
  // Associative closure: spans of products of length k must vanish for some
  // k <= ambient size; that makes every element nilpotent.
  {
    const int nn = g.ambient_size() * g.ambient_size();
    std::vector<QMatrix> gens;
    for (int i = 0; i < candidate.dim(); ++i) gens.push_back(g.matrix_of(candidate.basis_vector(i)));
    std::vector<Vec> flats;
    for (const auto& m : gens) flats.push_back(m.flatten());
    Subspace words = Subspace::span(nn, flats);
    bool vanished = words.is_zero();
    for (int len = 2; len <= g.ambient_size() && !vanished; ++len) {
      std::vector<Vec> next;
      for (int i = 0; i < words.dim(); ++i) {
        QMatrix w(g.ambient_size(), g.ambient_size());
        {
          const Vec f = words.basis_vector(i);
          for (int r = 0; r < g.ambient_size(); ++r)
            for (int c = 0; c < g.ambient_size(); ++c)
              w.at(r, c) = f[r * g.ambient_size() + c];
        }
        for (const auto& b : gens) next.push_back((w * b).flatten());
      }
      words = Subspace::span(nn, next);
      vanished = words.is_zero();
    }
    if (!vanished)
      throw InputNotAlgebraic("nilradical-nilpotent",
                              "associative closure of the candidate does not vanish");
  }
  (void)d;
  return candidate;
}

Subspace levi_subalgebra(const LieAlgebra& g, const Subspace& rad) {
  const int d = g.dim();
  if (rad.dim() == d) return Subspace::zero(d);

  // Section basis of g/rad; its classes stay fixed, only rad-components move.
  std::vector<Vec> section = complement_in(g.full_space(), rad);
  const int m = static_cast<int>(section.size());

  // Quotient structure constants from the initial section.
  std::vector<Vec> adapted = section;
  for (int i = 0; i < rad.dim(); ++i) adapted.push_back(rad.basis_vector(i));
  const QMatrix adapted_cols = QMatrix::from_rows(adapted, d).transpose();
  std::vector<std::vector<Vec>> qc(m, std::vector<Vec>(m));  // qc[i][j]: quotient coords in R^m
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto y = solve_linear(adapted_cols, g.coord_bracket(section[i], section[j]));
      if (!y) throw std::logic_error("levi_subalgebra: adapted basis failed to span");
      qc[i][j] = Vec(y->begin(), y->begin() + m);
    }

  const std::vector<Subspace> stages = derived_series(g, rad);
  for (std::size_t t = 0; t < stages.size(); ++t) {
    const Subspace& rt = stages[t];
    if (rt.is_zero()) break;
    const Subspace next = (t + 1 < stages.size()) ? stages[t + 1] : Subspace::zero(d);
    const int q = rt.dim();

    // Quotient projection rt -> rt/next via an adapted basis of rt.
    std::vector<Vec> comp = complement_in(rt, next);
    const int qdim = static_cast<int>(comp.size());
    std::vector<Vec> rt_adapted;
    for (int i = 0; i < next.dim(); ++i) rt_adapted.push_back(next.basis_vector(i));
    for (const auto& v : comp) rt_adapted.push_back(v);
    const QMatrix rt_cols = QMatrix::from_rows(rt_adapted, d).transpose();
    auto project = [&](const Vec& v) -> Vec {
      auto y = solve_linear(rt_cols, v);
      if (!y) throw InputNotAlgebraic("levi-defect", "structure defect escaped the radical stage");
      return Vec(y->begin() + next.dim(), y->begin() + next.dim() + qdim);
    };

    // Unknowns: corrections a_i in rt, coordinates over rt's basis.
    // Equations, one block per pair i < j:
    //   project(defect_ij + [a_i, x_j] + [x_i, a_j] - sum_k qc^k_ij a_k) = 0.
    const int unknowns = m * q;
    const int pairs = m * (m - 1) / 2;
    QMatrix sys(pairs * qdim, unknowns);
    Vec rhs(static_cast<std::size_t>(pairs) * qdim, Rat(0));
    int block = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j, ++block) {
        Vec defect = g.coord_bracket(section[i], section[j]);
        for (int k = 0; k < m; ++k) vec_axpy(defect, -qc[i][j][k], section[k]);
        const Vec dproj = project(defect);
        for (int r = 0; r < qdim; ++r) rhs[static_cast<std::size_t>(block) * qdim + r] = -dproj[r];
        for (int u = 0; u < m; ++u)
          for (int p = 0; p < q; ++p) {
            Vec contrib(d, Rat(0));
            if (u == i) vec_axpy(contrib, Rat(1), g.coord_bracket(rt.basis_vector(p), section[j]));
            if (u == j) vec_axpy(contrib, Rat(1), g.coord_bracket(section[i], rt.basis_vector(p)));
            if (!qc[i][j][u].is_zero()) vec_axpy(contrib, -qc[i][j][u], rt.basis_vector(p));
            if (vec_is_zero(contrib)) continue;
            const Vec cproj = project(contrib);
            for (int r = 0; r < qdim; ++r)
              sys.at(block * qdim + r, u * q + p) = cproj[r];
          }
      }
    auto sol = solve_linear(sys, rhs);
    if (!sol)
      throw InputNotAlgebraic("levi-correction", "linear system for the Levi section is inconsistent");
    for (int i = 0; i < m; ++i)
      for (int p = 0; p < q; ++p) vec_axpy(section[i], (*sol)[i * q + p], rt.basis_vector(p));
  }

  // The corrected section must now close exactly.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vec defect = g.coord_bracket(section[i], section[j]);
      for (int k = 0; k < m; ++k) vec_axpy(defect, -qc[i][j][k], section[k]);
      if (!vec_is_zero(defect))
        throw InputNotAlgebraic("levi-closure", "corrected section does not close under brackets");
    }
  return Subspace::span(d, section);
}

Subspace toral_complement(const LieAlgebra& g, const Subspace& rad, const Subspace& nil,
                          const Subspace& levi) {
  const int d = g.dim();
  const int target = rad.dim() - nil.dim();
  std::vector<Vec> chosen;
  Subspace zspan = Subspace::zero(d);
  std::vector<Vec> centralizer_gens = levi.basis_vectors();
  while (static_cast<int>(chosen.size()) < target) {
    const Subspace c = subspace_intersect(rad, joint_centralizer(g, centralizer_gens));
    Subspace filled = subspace_sum(zspan, nil);
    Vec pick;
    bool found = false;
    for (int i = 0; i < c.dim(); ++i) {
      if (!filled.contains(c.basis_vector(i))) {
        pick = c.basis_vector(i);
        found = true;
        break;
      }
    }
    if (!found)
      throw InputNotAlgebraic("toral-dimension",
                              "no further semisimple direction found; torus dimension shortfall");
    const JordanPair jp = jordan_chevalley(g.matrix_of(pick));
    auto s_coords = g.coords_of_matrix(jp.s);
    if (!s_coords)
      throw InputNotAlgebraic("toral-jordan",
                              "Jordan semisimple part of a radical element falls outside g");
    if (!rad.contains(*s_coords))
      throw InputNotAlgebraic("toral-jordan", "Jordan semisimple part escaped the radical");
    if (filled.contains(*s_coords))
      throw InputNotAlgebraic("toral-jordan", "Jordan semisimple part added no new toral direction");
    chosen.push_back(*s_coords);
    centralizer_gens.push_back(*s_coords);
    zspan = subspace_sum(zspan, Subspace::span(d, {*s_coords}));
  }
  return zspan;
}

namespace {

StructureReport assemble_and_verify(const LieAlgebra& g, Subspace rad, Subspace nil, Subspace levi,
                                    Subspace torus) {
  const int d = g.dim();
  StructureReport rep{std::move(rad), std::move(nil), std::move(levi), std::move(torus),
                      Subspace::zero(d), VerificationFlags{}};
  rep.reductive = subspace_sum(rep.levi, rep.torus);
  auto& f = rep.verified;

  f.radical_ideal = is_ideal(g, rep.rad);
  f.radical_solvable = derived_series(g, rep.rad).back().is_zero();
  f.nil_ideal = is_ideal(g, rep.nil);
  // Every nil basis element nilpotent as an ambient matrix (the associative
  // closure check in nilpotent_radical is stronger; this re-check also covers
  // declared inputs).
  f.nil_associative_nilpotent = true;
  for (int i = 0; i < rep.nil.dim() && f.nil_associative_nilpotent; ++i)
    f.nil_associative_nilpotent = is_nilpotent_matrix(g.matrix_of(rep.nil.basis_vector(i)));

  f.levi_closed = is_subalgebra(g, rep.levi);
  f.levi_complements_radical = direct_sum_equals(rep.levi, rep.rad, g.full_space());
  if (rep.levi.is_zero()) {
    f.levi_semisimple = true;
  } else if (f.levi_closed) {
    // Nondegenerate own Killing form, and [l, l] = l.
    f.levi_semisimple = rref(killing_form_of(g, rep.levi)).rank == rep.levi.dim() &&
                        product_space(g, rep.levi, rep.levi) == rep.levi;
  }

  f.torus_abelian = product_space(g, rep.torus, rep.torus).is_zero();
  f.torus_semisimple = true;
  for (int i = 0; i < rep.torus.dim() && f.torus_semisimple; ++i)
    f.torus_semisimple = is_semisimple_matrix(g.matrix_of(rep.torus.basis_vector(i)));
  f.torus_centralizes_levi = product_space(g, rep.torus, rep.levi).is_zero();

  f.sums_direct = direct_sum_equals(rep.torus, rep.nil, rep.rad) &&
                  direct_sum_equals(rep.levi, rep.torus, rep.reductive) &&
                  direct_sum_equals(rep.reductive, rep.nil, g.full_space()) &&
                  rep.rad.contains(rep.nil);

  if (!f.all()) {
    std::string failed;
    auto name = [&](bool ok, const char* n) {
      if (!ok) failed += failed.empty() ? n : std::string(", ") + n;
    };
    name(f.radical_ideal, "radical-ideal");
    name(f.radical_solvable, "radical-solvable");
    name(f.nil_ideal, "nil-ideal");
    name(f.nil_associative_nilpotent, "nil-nilpotent");
    name(f.levi_complements_radical, "levi-complement");
    name(f.levi_closed, "levi-closed");
    name(f.levi_semisimple, "levi-semisimple");
    name(f.torus_abelian, "torus-abelian");
    name(f.torus_semisimple, "torus-semisimple");
    name(f.torus_centralizes_levi, "torus-centralizes-levi");
    name(f.sums_direct, "direct-sums");
    throw InputNotAlgebraic("structure-verification", failed);
  }
  return rep;
}

}  // namespace

StructureReport decompose(const LieAlgebra& g) {
  Subspace rad = solvable_radical(g);
  Subspace nil = nilpotent_radical(g, rad);
  Subspace levi = levi_subalgebra(g, rad);
  Subspace torus = toral_complement(g, rad, nil, levi);
  if (rad.dim() != torus.dim() + nil.dim())
    throw InputNotAlgebraic("toral-dimension", "radical does not split as torus + nil radical");
  return assemble_and_verify(g, std::move(rad), std::move(nil), std::move(levi), std::move(torus));
}

StructureReport verify_declared(const LieAlgebra& g, const Subspace& nil, const Subspace& levi,
                                const Subspace& torus) {
  Subspace rad = subspace_sum(torus, nil);
  return assemble_and_verify(g, std::move(rad), nil, levi, torus);
}

std::vector<WeightSpace> weight_decomposition(const LieAlgebra& g, const StructureReport& report,
                                              const std::vector<Vec>& toral_basis) {
  const Subspace& nil = report.nil;
  // Work in nil coordinates; map back at the end. Each piece carries the
  // echelon basis of a joint eigenspace found so far.
  struct Piece {
    std::vector<Rat> weight;
    Subspace space;  // in nil coordinates
  };
  std::vector<Piece> pieces{{std::vector<Rat>{}, Subspace::full(nil.dim())}};
  for (const auto& t : toral_basis) {
    // ad(t) restricted to nil, in nil coordinates.
    QMatrix a(nil.dim(), nil.dim());
    for (int j = 0; j < nil.dim(); ++j) {
      const Vec img = g.coord_bracket(t, nil.basis_vector(j));
      auto c = nil.coords_of(img);
      if (!c) throw InputNotAlgebraic("weight-action", "toral action does not preserve nil");
      for (int k = 0; k < nil.dim(); ++k) a.at(k, j) = (*c)[k];
    }
    std::vector<Piece> refined;
    for (const auto& piece : pieces) {
      const int pd = piece.space.dim();
      if (pd == 0) continue;
      // Restriction of a to the piece, in the piece's echelon coordinates.
      QMatrix b(pd, pd);
      for (int j = 0; j < pd; ++j) {
        auto c = piece.space.coords_of(a.apply(piece.space.basis_vector(j)));
        if (!c) throw NotSplit("weight decomposition: action does not preserve a joint eigenspace");
        for (int k = 0; k < pd; ++k) b.at(k, j) = (*c)[k];
      }
      QPoly mp = minimal_polynomial(b);
      RationalRoots rr;
      try {
        rr = rational_roots(mp);
      } catch (const std::overflow_error& e) {
        throw NotSplit(e.what());
      }
      if (rr.remaining_degree > 0)
        throw NotSplit("weight decomposition: toral element has irrational ad-eigenvalues");
      for (const auto& [lambda, mult] : rr.roots) {
        if (mult != 1)
          throw NotSplit("weight decomposition: ad of a toral element is not semisimple");
        QMatrix shifted = b;
        for (int i = 0; i < pd; ++i) shifted.at(i, i) -= lambda;
        const Subspace eig = kernel(shifted);
        if (eig.is_zero()) continue;
        std::vector<Vec> in_nil;
        for (int i = 0; i < eig.dim(); ++i) {
          Vec v(nil.dim(), Rat(0));
          const Vec pc = eig.basis_vector(i);
          for (int k = 0; k < pd; ++k) vec_axpy(v, pc[k], piece.space.basis_vector(k));
          in_nil.push_back(std::move(v));
        }
        Piece sub{piece.weight, Subspace::span(nil.dim(), in_nil)};
        sub.weight.push_back(lambda);
        refined.push_back(std::move(sub));
      }
    }
    pieces = std::move(refined);
  }
  std::vector<WeightSpace> out;
  int total = 0;
  for (const auto& piece : pieces) {
    std::vector<Vec> in_g;
    for (int i = 0; i < piece.space.dim(); ++i) {
      Vec w(g.dim(), Rat(0));
      const Vec v = piece.space.basis_vector(i);
      for (int k = 0; k < nil.dim(); ++k) vec_axpy(w, v[k], nil.basis_vector(k));
      in_g.push_back(std::move(w));
    }
    WeightSpace ws{piece.weight, Subspace::span(g.dim(), in_g)};
    total += ws.space.dim();
    out.push_back(std::move(ws));
  }
  if (total != nil.dim())
    throw NotSplit("weight decomposition: joint eigenspaces do not fill nil");
  return out;
}

}  // namespace multgen
