#include "multgen/qmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace multgen {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void vec_axpy(Vec& v, const Rat& c, const Vec& w) {
  if (v.size() != w.size()) throw std::invalid_argument("vec_axpy: length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
}

Vec vec_scaled(const Vec& v, const Rat& c) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Rat vec_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_dot: length mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

QMatrix QMatrix::unit(int n, int i, int j) {
  QMatrix m(n, n);
  m.at(i, j) = Rat(1);
  return m;
}

QMatrix QMatrix::diagonal(const Vec& d) {
  QMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vec>& rows, int cols) {
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("from_rows: row length mismatch");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rat QMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix not square");
  Rat s;
  for (int i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

Vec QMatrix::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void QMatrix::set_row(int i, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("set_row: length mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void QMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: size mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub: size mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rat& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix mul: size mismatch");
  QMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

QMatrix operator-(const QMatrix& a) {
  QMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = -a.at(i, j);
  return out;
}

Vec QMatrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: length mismatch");
  Vec out(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat s;
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

std::string QMatrix::str() const {
  std::vector<std::string> cells(e_.size());
  std::vector<std::size_t> width(cols_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      cells[static_cast<std::size_t>(i) * cols_ + j] = at(i, j).str();
      width[j] = std::max(width[j], cells[static_cast<std::size_t>(i) * cols_ + j].size());
    }
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[ ";
    for (int j = 0; j < cols_; ++j) {
      const auto& c = cells[static_cast<std::size_t>(i) * cols_ + j];
      os << std::string(width[j] - c.size(), ' ') << c << (j + 1 < cols_ ? "  " : " ");
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) { return os << m.str(); }

namespace {

// Gauss-Jordan over the rationals. Pivot choice: first row with a nonzero
// entry in the leftmost unfinished column, so results are deterministic in
// the input row order.
void gauss_jordan(QMatrix& m, std::vector<int>& pivots) {
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(r, p);
    const Rat inv = m.at(r, c).inverse();
    for (int j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Rat f = m.at(i, c);
      for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
}

}  // namespace

RrefResult rref(const QMatrix& m) {
  RrefResult out;
  out.mat = m;
  gauss_jordan(out.mat, out.pivots);
  out.rank = static_cast<int>(out.pivots.size());
  return out;
}

RrefTransform rref_with_transform(const QMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  QMatrix aug(rows, cols + rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, cols + i) = Rat(1);
  }
  // Eliminate on the left block only; the right block records the row ops.
  std::vector<int> pivots;
  {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (!aug.at(i, c).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      aug.swap_rows(r, p);
      const Rat inv = aug.at(r, c).inverse();
      for (int j = 0; j < cols + rows; ++j) aug.at(r, j) *= inv;
      for (int i = 0; i < rows; ++i) {
        if (i == r || aug.at(i, c).is_zero()) continue;
        const Rat f = aug.at(i, c);
        for (int j = 0; j < cols + rows; ++j) aug.at(i, j) -= f * aug.at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
  }
  RrefTransform out;
  out.mat = QMatrix(rows, cols);
  out.transform = QMatrix(rows, rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out.mat.at(i, j) = aug.at(i, j);
    for (int j = 0; j < rows; ++j) out.transform.at(i, j) = aug.at(i, cols + j);
  }
  out.pivots = std::move(pivots);
  out.rank = static_cast<int>(out.pivots.size());
  return out;
}

std::optional<Vec> solve_linear(const QMatrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_linear: size mismatch");
  const int rows = a.rows(), cols = a.cols();
  QMatrix aug(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, cols) = b[i];
  }
  std::vector<int> pivots;
  gauss_jordan(aug, pivots);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == cols) return std::nullopt;  // pivot in augmented column: inconsistent
  Vec x(cols, Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), cols);
  return x;
}

std::optional<QMatrix> try_inverse(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const int n = m.rows();
  auto rt = rref_with_transform(m);
  if (rt.rank != n) return std::nullopt;
  return rt.transform;
}

QMatrix inverse(const QMatrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw std::domain_error("inverse: singular matrix");
  return *inv;
}

}  // namespace multgen
