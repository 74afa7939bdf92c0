#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace multgen {

// Exact rational scalar. Invariant: numerator and denominator coprime,
// denominator positive, zero stored as 0/1. Backed by GMP.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long num, long den) : v_(static_cast<signed long>(num)) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ /= mpq_class(static_cast<signed long>(den));
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& z) : v_(z) {}

  // Accepts "p" or "p/q", optional sign on either part, no whitespace.
  static Rat parse(const std::string& s);

  std::string str() const;

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  Rat abs() const { return Rat(tagged{}, ::abs(v_)); }

  Rat inverse() const {
    if (is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(tagged{}, mpq_class(1) / v_);
  }

  Rat operator-() const { return Rat(tagged{}, -v_); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(tagged{}, mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(tagged{}, mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(tagged{}, mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(tagged{}, mpq_class(a.v_ / b.v_));
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  // Integer power, negative exponents allowed for nonzero base.
  Rat pow(long e) const;

private:
  // GMP arithmetic keeps canonical form; this tag skips re-canonicalization.
  struct tagged {};
  Rat(tagged, mpq_class q) : v_(std::move(q)) {}

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace multgen
