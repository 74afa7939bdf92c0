#include "multgen/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace multgen {

QPoly QPoly::monomial(int k, const Rat& c) {
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
  v.back() = c;
  return QPoly(std::move(v));
}

QPoly QPoly::from_roots(const std::vector<Rat>& roots) {
  QPoly p = QPoly::constant(Rat(1));
  for (const auto& r : roots) p = p * QPoly({-r, Rat(1)});
  return p;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& c) const {
  std::vector<Rat> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * c;
  return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("poly divmod: division by zero polynomial");
  QPoly rem = *this;
  std::vector<Rat> q(degree() >= d.degree() ? static_cast<std::size_t>(degree() - d.degree()) + 1 : 0,
                     Rat(0));
  const Rat lead_inv = d.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const int k = rem.degree() - d.degree();
    const Rat f = rem.leading() * lead_inv;
    q[k] = f;
    // rem -= f * t^k * d
    for (int i = 0; i <= d.degree(); ++i) rem.c_[i + k] -= f * d.c_[i];
    rem.trim();
  }
  return {QPoly(std::move(q)), rem};
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

QPoly QPoly::derivative() const {
  if (degree() < 1) return QPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return QPoly(std::move(v));
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QMatrix QPoly::eval(const QMatrix& x) const {
  if (!x.is_square()) throw std::invalid_argument("poly eval: matrix not square");
  QMatrix acc = QMatrix::zero(x.rows(), x.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x;
    if (!it->is_zero()) acc += QMatrix::identity(x.rows()) * (*it);
  }
  return acc;
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    const Rat a = c.abs();
    const bool unit = a.is_one() && k > 0;
    if (!unit) os << a.str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p.monic();
  QPoly g = poly_gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

namespace {

// Positive divisors by trial division; throws if n is too large to factor
// this way.
std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
  mpz_class n = ::abs(n_in);
  if (n == 0) throw std::invalid_argument("divisors of zero");
  if (n > mpz_class("1000000000000"))
    throw std::overflow_error("rational_roots: coefficient too large for divisor enumeration");
  std::vector<mpz_class> divs;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      mpz_class q = n / d;
      if (q != d) divs.push_back(q);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

RationalRoots rational_roots(const QPoly& p_in) {
  RationalRoots out;
  if (p_in.degree() <= 0) {
    out.remaining_degree = 0;
    return out;
  }
  QPoly p = p_in.monic();
  // Strip roots at zero first.
  int zero_mult = 0;
  while (!p.is_zero() && p.coeff(0).is_zero() && p.degree() > 0) {
    p = p.divmod(QPoly::monomial(1)).first;
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.push_back({Rat(0), zero_mult});
  if (p.degree() > 0) {
    // Clear denominators: integer polynomial with the same roots.
    mpz_class den_lcm = 1;
    for (int k = 0; k <= p.degree(); ++k) {
      mpz_class d = p.coeff(k).denominator();
      den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    mpz_class a0 = p.coeff(0).numerator() * (den_lcm / p.coeff(0).denominator());
    mpz_class an = p.coeff(p.degree()).numerator() * (den_lcm / p.coeff(p.degree()).denominator());
    std::vector<Rat> candidates;
    for (const auto& num : positive_divisors(a0))
      for (const auto& den : positive_divisors(an)) {
        Rat c(mpq_class(num, den));
        candidates.push_back(c);
        candidates.push_back(-c);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      while (p.degree() > 0 && p.eval(r).is_zero()) {
        p = p.divmod(QPoly({-r, Rat(1)})).first;
        ++mult;
      }
      if (mult > 0) out.roots.push_back({r, mult});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.remaining_degree = p.degree() > 0 ? p.degree() : 0;
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

}  // namespace multgen
