#ifndef LIEPAR_MATRIX_HPP
#define LIEPAR_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "liepar/rational.hpp"

namespace liepar {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatMatrix transpose() const;
  bool is_zero() const;
  Rational trace() const;

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& c) const;
  RatVector apply(const RatVector& v) const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  RatMatrix mat;     // reduced row echelon form, zero rows dropped
  std::size_t rank;  // = mat.rows()
};

/// Unique reduced row echelon form; zero rows are dropped.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Exact solution of a*x = b, or nullopt when the system is inconsistent.
/// Underdetermined consistent systems return the solution with free
/// variables set to zero.
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b);

/// Inverse of a square nonsingular matrix; throws std::invalid_argument
/// otherwise.
RatMatrix inverse(const RatMatrix& a);

/// Basis vectors of the null space {v : m*v = 0}, not canonicalized.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Coefficient vectors c_0..c_d of the unique vector-valued polynomial of
/// degree <= d through (nodes[j], values[j]). Nodes must be pairwise
/// distinct and |nodes| = |values| = d+1.
std::vector<RatVector> vandermonde_solve(const std::vector<Rational>& nodes,
                                         const std::vector<RatVector>& values);

}  // namespace liepar

#endif
