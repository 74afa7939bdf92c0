#pragma once

#include <vector>

#include "multgen/poly.hpp"
#include "multgen/qmatrix.hpp"

namespace multgen {

// x = s + n with s semisimple, n nilpotent, sn = ns, both polynomials in x.
struct JordanPair {
  QMatrix s;
  QMatrix n;
};

// Monic least-degree annihilating polynomial.
QPoly minimal_polynomial(const QMatrix& x);

// Semisimple over the algebraic closure iff the minimal polynomial is
// squarefree; decided rationally, no eigenvalues needed.
bool is_semisimple_matrix(const QMatrix& x);
bool is_nilpotent_matrix(const QMatrix& x);

// Newton lifting against the squarefree part of the annihilating polynomial,
// followed by a full verification pass.
JordanPair jordan_chevalley(const QMatrix& x);

// Truncated exponential sum_{k < size} v^k / k!; exact since v is nilpotent.
// Throws std::invalid_argument if v is not nilpotent.
QMatrix exp_nilpotent(const QMatrix& v);

// Inverse of exp_nilpotent: sum_{1 <= k < size} (-1)^{k+1} (u - I)^k / k.
QMatrix log_unipotent(const QMatrix& u);

// One-parameter subgroup evaluated at exact rational parameters. Either a
// unipotent curve a -> exp(a v) for nilpotent v, or a diagonal torus curve
// t -> diag(t^{w_i}) for integer weights w and t != 0.
class OneParamCurve {
public:
  static OneParamCurve unipotent(const QMatrix& direction);
  static OneParamCurve torus(const std::vector<long>& weights);

  bool is_unipotent() const { return kind_ == Kind::Unipotent; }
  const QMatrix& direction() const { return direction_; }

  QMatrix eval(const Rat& param) const;

private:
  enum class Kind { Unipotent, Torus };
  Kind kind_ = Kind::Unipotent;
  QMatrix direction_;          // nilpotent direction (unipotent case)
  std::vector<long> weights_;  // torus case
};

}  // namespace multgen
