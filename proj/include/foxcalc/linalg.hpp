#pragma once

#include <functional>
#include <vector>

#include "foxcalc/ring.hpp"

namespace foxcalc {

/// Dense row-major matrix over any of the coefficient rings. The element
/// type carries its own rank, so a matrix knows its ring from `zero`.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> out;
    out.resize_like(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.raw()[i] = f(data_[i]);
    return out;
  }

  Matrix transpose() const {
    Matrix out;
    out.rows_ = cols_;
    out.cols_ = rows_;
    out.data_.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) out.data_.push_back((*this)(i, j));
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix out;
    out.rows_ = nr;
    out.cols_ = nc;
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out.data_.push_back((*this)(r0 + i, c0 + j));
    return out;
  }

  std::vector<T>& raw() noexcept { return data_; }
  const std::vector<T>& raw() const noexcept { return data_; }

  template <class U>
  void resize_like(const Matrix<U>& other) {
    rows_ = other.rows();
    cols_ = other.cols();
    data_.assign(rows_ * cols_, T{});
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> identity_matrix(std::size_t n, const T& zero, const T& one) {
  Matrix<T> m(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::RankMismatch, "matrix dimensions do not agree");
  if (a.rows() == 0 || b.cols() == 0) return Matrix<T>(a.rows(), b.cols(), T{});
  const T zero = a.cols() ? a(0, 0) - a(0, 0) : T{};
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& x = a(i, k);
      if (x == zero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::RankMismatch, "matrix dimensions do not agree");
  for (std::size_t i = 0; i < a.raw().size(); ++i) a.raw()[i] += b.raw()[i];
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::RankMismatch, "matrix dimensions do not agree");
  for (std::size_t i = 0; i < a.raw().size(); ++i) a.raw()[i] -= b.raw()[i];
  return a;
}

using FreeMatrix = Matrix<FreeRingElement>;
using LaurentMatrix = Matrix<LaurentPolynomial>;
using FractionMatrix = Matrix<LaurentFraction>;
using IntMatrix = Matrix<Coefficient>;

/// Fraction-free (Bareiss) determinant over Z[H].
LaurentPolynomial determinant(const LaurentMatrix& m);
/// Bareiss over Z.
Coefficient determinant(const IntMatrix& m);
/// Gaussian elimination over the fraction field.
LaurentFraction determinant(const FractionMatrix& m);

/// Solves m * x = rhs over K_H in common-denominator form: returns the
/// numerator matrix N with x = N / det(m), via the adjugate.
LaurentMatrix adjugate_solve(const LaurentMatrix& m, const LaurentMatrix& rhs, LaurentPolynomial* det_out = nullptr);

struct SmithForm {
  std::vector<Coefficient> diagonal;  // nonzero invariant factors, divisibility chain
  std::size_t rank = 0;
};
SmithForm smith_normal_form(IntMatrix m);

/// Solves m * x = b over Z when m is square and unimodular.
std::vector<Coefficient> solve_unimodular(const IntMatrix& m, const std::vector<Coefficient>& b);
IntMatrix inverse_unimodular(const IntMatrix& m);

LaurentMatrix abelianize(const FreeMatrix& m);
FractionMatrix to_fractions(const LaurentMatrix& m);
LaurentMatrix bar_transpose(const LaurentMatrix& m);
FreeMatrix bar_transpose(const FreeMatrix& m);

IntMatrix trivialize(const FreeMatrix& m);
IntMatrix trivialize(const LaurentMatrix& m);

LaurentMatrix laurent_identity(std::size_t n, int rank);
LaurentMatrix laurent_scalar(const IntMatrix& m, int rank);

}  // namespace foxcalc
