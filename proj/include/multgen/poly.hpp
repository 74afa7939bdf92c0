#pragma once

#include <string>
#include <utility>
#include <vector>

#include "multgen/qmatrix.hpp"
#include "multgen/rat.hpp"

namespace multgen {

// Dense univariate polynomial over Rat, coefficients in ascending degree.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPoly constant(const Rat& c) { return QPoly({c}); }
  static QPoly monomial(int k, const Rat& c = Rat(1));
  // (t - r0)(t - r1)...
  static QPoly from_roots(const std::vector<Rat>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0); }
  Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& c) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  // Quotient and remainder; divisor must be nonzero.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  QPoly monic() const;
  QPoly derivative() const;

  Rat eval(const Rat& x) const;
  QMatrix eval(const QMatrix& x) const;  // Horner with matrices

  std::string str(const std::string& var = "t") const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Monic gcd.
QPoly poly_gcd(QPoly a, QPoly b);

// p / gcd(p, p'): the product of the distinct irreducible factors.
QPoly squarefree_part(const QPoly& p);

struct RationalRoots {
  std::vector<std::pair<Rat, int>> roots;  // (root, multiplicity), ascending
  int remaining_degree = 0;                // degree left after removing rational linear factors
};

// Rational roots by the rational root test on the integer-cleared polynomial.
// Throws std::overflow_error when coefficient divisors are too large to
// enumerate; callers treat that as "not split".
RationalRoots rational_roots(const QPoly& p);

std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace multgen
