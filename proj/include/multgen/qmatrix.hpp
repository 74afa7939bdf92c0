#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multgen/rat.hpp"

namespace multgen {

using Vec = std::vector<Rat>;

bool vec_is_zero(const Vec& v);
// v += c * w
void vec_axpy(Vec& v, const Rat& c, const Vec& w);
Vec vec_scaled(const Vec& v, const Rat& c);
Rat vec_dot(const Vec& a, const Vec& b);

// Dense rational matrix, row-major.
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  static QMatrix identity(int n);
  static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }
  // Elementary matrix with a single 1 at (i, j), zero-based.
  static QMatrix unit(int n, int i, int j);
  static QMatrix diagonal(const Vec& d);
  static QMatrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  QMatrix transpose() const;
  Rat trace() const;
  Vec flatten() const { return e_; }
  Vec row(int i) const;
  void set_row(int i, const Vec& v);
  void swap_rows(int i, int j);

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rat& c);

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rat& c) { return a *= c; }
  friend QMatrix operator*(const Rat& c, QMatrix a) { return a *= c; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  Vec apply(const Vec& v) const;  // matrix * column vector

  std::string str() const;  // aligned, for diagnostics

private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

struct RrefResult {
  QMatrix mat;
  std::vector<int> pivots;  // pivot column per nonzero row
  int rank = 0;
};

// Reduced row-echelon form; exact, deterministic (first nonzero pivot).
RrefResult rref(const QMatrix& m);

struct RrefTransform {
  QMatrix mat;        // rref of input
  QMatrix transform;  // invertible, mat = transform * input
  std::vector<int> pivots;
  int rank = 0;
};

RrefTransform rref_with_transform(const QMatrix& m);

// One solution of a·x = b (free variables set to zero), or nullopt.
std::optional<Vec> solve_linear(const QMatrix& a, const Vec& b);

std::optional<QMatrix> try_inverse(const QMatrix& m);
QMatrix inverse(const QMatrix& m);  // throws std::domain_error if singular

}  // namespace multgen
