#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "vee/rational.hpp"

namespace vee {

/// Dense row-major matrix of exact rationals. Sizes in this project stay
/// small (n <= ~12), so every algorithm here is plain cubic elimination.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector col(std::size_t j) const;
  RatMatrix transpose() const;

  /// this * v for a column vector v.
  RatVector apply(const RatVector& v) const;
  /// u * this for a row vector u.
  RatVector apply_left(const RatVector& u) const;
  /// u * this * v^T.
  Rational bilinear(const RatVector& u, const RatVector& v) const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& m);

/// Outer product a^T b.
RatMatrix outer(const RatVector& a, const RatVector& b);

Rational determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Throws VeeError(SingularMatrix) when det(m) = 0.
RatMatrix mat_inverse(const RatMatrix& m);

struct AdjugateDet {
  RatMatrix adjugate;
  Rational det;
};

/// adj(m) and det(m); defined for singular m as well.
AdjugateDet mat_adjugate_det(const RatMatrix& m);

/// Rows forming a basis of {v : m v = 0}.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Coefficients of the characteristic polynomial det(t I - m), constant term
/// first; the leading coefficient (index n) is 1.
RatVector characteristic_polynomial(const RatMatrix& m);

}  // namespace vee
