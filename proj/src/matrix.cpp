#include "liepar/matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace liepar {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  RatVector r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& c : a_)
    if (!c.is_zero()) return false;
  return true;
}

Rational RatMatrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff: shape mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply: length mismatch");
  RatVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

namespace {

// In-place Gauss-Jordan on an augmented matrix [A | B] where A occupies the
// first `acols` columns. Returns pivot columns of A.
std::vector<std::size_t> gauss_jordan(RatMatrix& m, std::size_t acols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < acols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const RatMatrix& m) {
  RatMatrix work = m;
  const auto pivots = gauss_jordan(work, m.cols());
  RatMatrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = work(i, j);
  return {out, pivots.size()};
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix work = m;
  return gauss_jordan(work, m.cols()).size();
}

std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = gauss_jordan(aug, a.cols());
  // Inconsistent iff some row reads 0 = nonzero.
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (!aug(i, a.cols()).is_zero()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Rational(1);
  }
  const auto pivots = gauss_jordan(aug, n);
  if (pivots.size() != n) throw std::invalid_argument("inverse: singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RatMatrix work = m;
  const auto pivots = gauss_jordan(work, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> vandermonde_solve(const std::vector<Rational>& nodes,
                                         const std::vector<RatVector>& values) {
  const std::size_t m = nodes.size();
  if (values.size() != m) throw std::invalid_argument("vandermonde_solve: node/value count mismatch");
  if (m == 0) return {};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (nodes[i] == nodes[j]) throw std::invalid_argument("vandermonde_solve: duplicate nodes");
  const std::size_t width = values[0].size();
  for (const auto& v : values)
    if (v.size() != width) throw std::invalid_argument("vandermonde_solve: ragged values");

  // Augmented Gauss-Jordan over [V | values], V_{j,k} = nodes[j]^k.
  RatMatrix aug(m, m + width);
  for (std::size_t j = 0; j < m; ++j) {
    Rational p(1);
    for (std::size_t k = 0; k < m; ++k) {
      aug(j, k) = p;
      p *= nodes[j];
    }
    for (std::size_t c = 0; c < width; ++c) aug(j, m + c) = values[j][c];
  }
  gauss_jordan(aug, m);
  std::vector<RatVector> coeffs(m, RatVector(width));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t c = 0; c < width; ++c) coeffs[k][c] = aug(k, m + c);
  return coeffs;
}

}  // namespace liepar
