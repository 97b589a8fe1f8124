#include <cstdlib>
#include <numeric>
#include <utility>

#include "foxcalc/linalg.hpp"

namespace foxcalc {

LaurentPolynomial determinant(const LaurentMatrix& m_in) {
  if (!m_in.square()) throw Error(ErrorCode::RankMismatch, "determinant of a non-square matrix");
  const std::size_t n = m_in.rows();
  if (n == 0) throw Error(ErrorCode::Precondition, "determinant of an empty matrix needs an explicit ring");
  const int rank = m_in(0, 0).rank();
  LaurentMatrix m = m_in;
  LaurentPolynomial prev = LaurentPolynomial::constant(rank, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return LaurentPolynomial(rank);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        auto q = v.exact_divide(prev);
        if (!q) throw Error(ErrorCode::Internal, "Bareiss step was not exact");
        m(i, j) = std::move(*q);
      }
      m(i, k) = LaurentPolynomial(rank);
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Coefficient determinant(const IntMatrix& m_in) {
  if (!m_in.square()) throw Error(ErrorCode::RankMismatch, "determinant of a non-square matrix");
  const std::size_t n = m_in.rows();
  if (n == 0) return 1;
  IntMatrix m = m_in;
  Coefficient prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = checked_sub(checked_mul(m(k, k), m(i, j)), checked_mul(m(i, k), m(k, j))) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

LaurentFraction determinant(const FractionMatrix& m_in) {
  if (!m_in.square()) throw Error(ErrorCode::RankMismatch, "determinant of a non-square matrix");
  const std::size_t n = m_in.rows();
  if (n == 0) throw Error(ErrorCode::Precondition, "determinant of an empty matrix needs an explicit ring");
  FractionMatrix m = m_in;
  const int rank = m(0, 0).rank();
  LaurentFraction det = LaurentFraction::constant(rank, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return LaurentFraction(rank);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      det = -det;
    }
    det *= m(k, k);
    const LaurentFraction inv = m(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const LaurentFraction f = m(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

LaurentMatrix adjugate_solve(const LaurentMatrix& m, const LaurentMatrix& rhs, LaurentPolynomial* det_out) {
  if (!m.square() || rhs.rows() != m.rows()) throw Error(ErrorCode::RankMismatch, "system dimensions do not agree");
  const std::size_t n = m.rows();
  const LaurentPolynomial det = determinant(m);
  if (det.is_zero()) throw Error(ErrorCode::Singular, "singular system over the fraction field");
  if (det_out) *det_out = det;
  LaurentMatrix out(n, rhs.cols(), LaurentPolynomial(det.rank()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      LaurentMatrix c = m;
      for (std::size_t r = 0; r < n; ++r) c(r, i) = rhs(r, j);
      out(i, j) = determinant(c);
    }
  return out;
}

SmithForm smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Bring the smallest nonzero entry of the remaining block to (t, t).
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m(i, j) != 0 && (pi == rows || std::llabs(m(i, j)) < std::llabs(m(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pj));
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      const Coefficient q = m(i, t) / m(t, t);
      if (q != 0)
        for (std::size_t j = t; j < cols; ++j) m(i, j) = checked_sub(m(i, j), checked_mul(q, m(t, j)));
      if (m(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      const Coefficient q = m(t, j) / m(t, t);
      if (q != 0)
        for (std::size_t i = t; i < rows; ++i) m(i, j) = checked_sub(m(i, j), checked_mul(q, m(i, t)));
      if (m(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // Enforce the divisibility chain.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m(i, j) % m(t, t) != 0) {
          for (std::size_t c = t; c < cols; ++c) m(t, c) = checked_add(m(t, c), m(i, c));
          divides = false;
          break;
        }
    if (!divides) continue;
    out.diagonal.push_back(std::llabs(m(t, t)));
    ++t;
  }
  out.rank = out.diagonal.size();
  return out;
}

IntMatrix inverse_unimodular(const IntMatrix& m_in) {
  if (!m_in.square()) throw Error(ErrorCode::RankMismatch, "inverse of a non-square matrix");
  const std::size_t n = m_in.rows();
  IntMatrix m = m_in;
  IntMatrix inv = identity_matrix<Coefficient>(n, 0, 1);
  const auto row_op = [&](std::size_t dst, std::size_t src, Coefficient q) {
    for (std::size_t j = 0; j < n; ++j) {
      m(dst, j) = checked_sub(m(dst, j), checked_mul(q, m(src, j)));
      inv(dst, j) = checked_sub(inv(dst, j), checked_mul(q, inv(src, j)));
    }
  };
  const auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(a, j), m(b, j));
      std::swap(inv(a, j), inv(b, j));
    }
  };
  for (std::size_t k = 0; k < n; ++k) {
    // Euclid down column k until only (k, k) is nonzero below the diagonal.
    while (true) {
      std::size_t p = n;
      for (std::size_t i = k; i < n; ++i)
        if (m(i, k) != 0 && (p == n || std::llabs(m(i, k)) < std::llabs(m(p, k)))) p = i;
      if (p == n) throw Error(ErrorCode::Singular, "matrix is not unimodular");
      if (p != k) swap_rows(p, k);
      bool done = true;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          row_op(i, k, m(i, k) / m(k, k));
          if (m(i, k) != 0) done = false;
        }
      if (done) break;
    }
    if (std::llabs(m(k, k)) != 1) throw Error(ErrorCode::Singular, "matrix is not unimodular");
    if (m(k, k) == -1)
      for (std::size_t j = 0; j < n; ++j) {
        m(k, j) = -m(k, j);
        inv(k, j) = -inv(k, j);
      }
  }
  for (std::size_t k = n; k-- > 0;)
    for (std::size_t i = 0; i < k; ++i)
      if (m(i, k) != 0) row_op(i, k, m(i, k));
  return inv;
}

std::vector<Coefficient> solve_unimodular(const IntMatrix& m, const std::vector<Coefficient>& b) {
  const IntMatrix inv = inverse_unimodular(m);
  std::vector<Coefficient> x(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) x[i] = checked_add(x[i], checked_mul(inv(i, j), b[j]));
  return x;
}

LaurentMatrix abelianize(const FreeMatrix& m) {
  return m.map([](const FreeRingElement& e) { return e.abelianize(); });
}

FractionMatrix to_fractions(const LaurentMatrix& m) {
  return m.map([](const LaurentPolynomial& p) { return LaurentFraction(p); });
}

LaurentMatrix bar_transpose(const LaurentMatrix& m) {
  return m.transpose().map([](const LaurentPolynomial& p) { return p.bar(); });
}

FreeMatrix bar_transpose(const FreeMatrix& m) {
  return m.transpose().map([](const FreeRingElement& p) { return p.bar(); });
}

IntMatrix trivialize(const FreeMatrix& m) {
  return m.map([](const FreeRingElement& e) { return e.trivializer(); });
}

IntMatrix trivialize(const LaurentMatrix& m) {
  return m.map([](const LaurentPolynomial& e) { return e.trivializer(); });
}

LaurentMatrix laurent_identity(std::size_t n, int rank) {
  return identity_matrix(n, LaurentPolynomial(rank), LaurentPolynomial::constant(rank, 1));
}

LaurentMatrix laurent_scalar(const IntMatrix& m, int rank) {
  return m.map([rank](Coefficient c) { return LaurentPolynomial::constant(rank, c); });
}

}  // namespace foxcalc
