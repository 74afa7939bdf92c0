#include "multgen/rat.hpp"

#include <cctype>
#include <ostream>

namespace multgen {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  if (!valid_integer_token(num))
    throw std::invalid_argument("invalid rational literal: '" + s + "'");
  const mpz_class num_z(num);
  mpq_class v(num_z);
  if (slash != std::string::npos) {
    const std::string den = s.substr(slash + 1);
    if (!valid_integer_token(den))
      throw std::invalid_argument("invalid rational literal: '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    v /= mpq_class(d);
  }
  return Rat(v);
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  Rat base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat acc(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace multgen
