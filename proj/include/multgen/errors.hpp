#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace multgen {

// The input failed one of the verifications the pipeline relies on: it is not
// (or cannot be certified as) the tangent algebra of a linear algebraic group.
// Carries the name of the failed check for reporting.
class InputNotAlgebraic : public std::runtime_error {
public:
  InputNotAlgebraic(std::string check, const std::string& detail)
      : std::runtime_error(check + ": " + detail), check_(std::move(check)) {}

  const std::string& failed_check() const { return check_; }

private:
  std::string check_;
};

// The computed multiplicative subalgebra disagrees with the minimal-ideal
// oracle, or equivalent conditions diverge. Fatal: either a bug or a
// non-algebraic input that slipped past verification.
class TheoremViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// A toral element acts with irrational eigenvalues; the weight-space
// diagnostic is unavailable. The main pipeline never needs weights.
class NotSplit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input document. line/column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, int line = 0, int column = 0)
      : std::runtime_error(msg), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace multgen
