#include "multgen/chevalley.hpp"

#include <cmath>
#include <stdexcept>

#include "multgen/subspace.hpp"

namespace multgen {

namespace {

bool power_nilpotent(const QMatrix& v) {
  if (!v.is_square()) throw std::invalid_argument("nilpotency test: matrix not square");
  QMatrix p = v;
  for (int k = 1; k <= v.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * v;
  }
  return p.is_zero();
}

}  // namespace

QPoly minimal_polynomial(const QMatrix& x) {
  if (!x.is_square()) throw std::invalid_argument("minimal_polynomial: matrix not square");
  const int n = x.rows();
  // Stack flattened powers I, x, x^2, ... until the first dependence.
  std::vector<Vec> powers;
  QMatrix p = QMatrix::identity(n);
  Subspace span = Subspace::zero(n * n);
  for (int k = 0; k <= n; ++k) {
    const Vec flat = p.flatten();
    if (span.contains(flat)) {
      // x^k = sum a_i x^i, i < k: solve over the stacked earlier powers.
      QMatrix sys(n * n, k);
      for (int i = 0; i < k; ++i)
        for (int r = 0; r < n * n; ++r) sys.at(r, i) = powers[i][r];
      auto a = solve_linear(sys, flat);
      if (!a) throw std::logic_error("minimal_polynomial: dependence detection inconsistent");
      std::vector<Rat> coeffs(k + 1, Rat(0));
      for (int i = 0; i < k; ++i) coeffs[i] = -(*a)[i];
      coeffs[k] = Rat(1);
      return QPoly(std::move(coeffs));
    }
    powers.push_back(flat);
    span = subspace_sum(span, Subspace::span(n * n, {flat}));
    p = p * x;
  }
  throw std::logic_error("minimal_polynomial: no dependence up to the ambient size");
}

bool is_semisimple_matrix(const QMatrix& x) {
  const QPoly m = minimal_polynomial(x);
  return poly_gcd(m, m.derivative()).degree() == 0;
}

bool is_nilpotent_matrix(const QMatrix& x) { return power_nilpotent(x); }

JordanPair jordan_chevalley(const QMatrix& x) {
  if (!x.is_square()) throw std::invalid_argument("jordan_chevalley: matrix not square");
  const int n = x.rows();
  const QPoly m = minimal_polynomial(x);
  const QPoly f = squarefree_part(m);
  QMatrix s = x;
  if (f.degree() != m.degree()) {
    const QPoly fd = f.derivative();
    const int iters = static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
    for (int it = 0; it < iters; ++it) {
      const QMatrix fz = f.eval(s);
      if (fz.is_zero()) break;
      auto inv = try_inverse(fd.eval(s));
      if (!inv)
        throw std::domain_error("jordan_chevalley: derivative not invertible during lifting");
      s -= fz * (*inv);
    }
  }
  JordanPair out{s, x - s};

  // Verification pass: recompute every invariant instead of trusting
  // convergence.
  if (!f.eval(out.s).is_zero())
    throw std::domain_error("jordan_chevalley: lifting did not converge");
  if (out.s * out.n != out.n * out.s)
    throw std::domain_error("jordan_chevalley: parts do not commute");
  if (!power_nilpotent(out.n)) throw std::domain_error("jordan_chevalley: nilpotent part is not nilpotent");
  if (!is_semisimple_matrix(out.s))
    throw std::domain_error("jordan_chevalley: semisimple part has a repeated factor");
  // Both parts are polynomials in x: membership in span{I, x, ..., x^{d-1}}.
  {
    std::vector<Vec> pows;
    QMatrix p = QMatrix::identity(n);
    for (int k = 0; k < std::max(m.degree(), 1); ++k) {
      pows.push_back(p.flatten());
      p = p * x;
    }
    Subspace alg = Subspace::span(n * n, pows);
    if (!alg.contains(out.s.flatten()))
      throw std::domain_error("jordan_chevalley: semisimple part escaped the power algebra");
  }
  return out;
}

QMatrix exp_nilpotent(const QMatrix& v) {
  if (!power_nilpotent(v)) throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
  const int n = v.rows();
  QMatrix acc = QMatrix::identity(n);
  QMatrix term = QMatrix::identity(n);
  Rat factorial(1);
  for (int k = 1; k < n; ++k) {
    term = term * v;
    if (term.is_zero()) break;
    factorial *= Rat(k);
    acc += term * factorial.inverse();
  }
  return acc;
}

QMatrix log_unipotent(const QMatrix& u) {
  if (!u.is_square()) throw std::invalid_argument("log_unipotent: matrix not square");
  const int n = u.rows();
  const QMatrix d = u - QMatrix::identity(n);
  if (!power_nilpotent(d)) throw std::invalid_argument("log_unipotent: matrix is not unipotent");
  QMatrix acc(n, n);
  QMatrix term = QMatrix::identity(n);
  for (int k = 1; k < n; ++k) {
    term = term * d;
    if (term.is_zero()) break;
    const Rat c = Rat((k % 2 == 1) ? 1 : -1, k);
    acc += term * c;
  }
  return acc;
}

OneParamCurve OneParamCurve::unipotent(const QMatrix& direction) {
  if (!power_nilpotent(direction))
    throw std::invalid_argument("OneParamCurve: direction is not nilpotent");
  OneParamCurve c;
  c.kind_ = Kind::Unipotent;
  c.direction_ = direction;
  return c;
}

OneParamCurve OneParamCurve::torus(const std::vector<long>& weights) {
  OneParamCurve c;
  c.kind_ = Kind::Torus;
  c.weights_ = weights;
  return c;
}

QMatrix OneParamCurve::eval(const Rat& param) const {
  if (kind_ == Kind::Unipotent) return exp_nilpotent(direction_ * param);
  if (param.is_zero()) throw std::domain_error("torus curve: parameter must be nonzero");
  Vec d(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) d[i] = param.pow(weights_[i]);
  return QMatrix::diagonal(d);
}

}  // namespace multgen
