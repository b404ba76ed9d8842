#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lr3/rational.hpp"

// Exact rational linear algebra. Everything here runs on matrices of at most
// 9x9, so plain Gaussian elimination is used throughout. Pivot selection is
// the first row with a nonzero entry: comparisons are exact, so there is no
// stability concern and the result is deterministic.

namespace lr3 {

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("matrix is singular") {}
};

struct RankDeficient : std::runtime_error {
  explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

inline RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix z(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) z(i, j) += x(i, k) * y(k, j);
    }
  return z;
}

inline std::vector<Rat> operator*(const RatMatrix& m, const std::vector<Rat>& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix shape mismatch");
  std::vector<Rat> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

// Solves a x = rhs for square a; throws SingularMatrix when no unique
// solution exists.
inline std::vector<Rat> solve_linear(RatMatrix a, std::vector<Rat> rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n || rhs.size() != n)
    throw std::invalid_argument("solve_linear needs square a and matching rhs");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw SingularMatrix();
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(col, j), a(piv, j));
      std::swap(rhs[col], rhs[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rat f = a(r, col) / a(col, col);
      a(r, col) = 0;
      for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat s = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

inline RatMatrix inverse(RatMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse needs a square matrix");
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw SingularMatrix();
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    const Rat pv = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= pv;
      inv(col, j) /= pv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rat f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

inline Rat determinant(RatMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant needs a square matrix");
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(col, j), a(piv, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rat f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

inline std::size_t rank(RatMatrix a) {
  const std::size_t nr = a.rows(), nc = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < nc && r < nr; ++col) {
    std::size_t piv = r;
    while (piv < nr && a(piv, col) == 0) ++piv;
    if (piv == nr) continue;
    if (piv != r)
      for (std::size_t j = 0; j < nc; ++j) std::swap(a(r, j), a(piv, j));
    for (std::size_t i = r + 1; i < nr; ++i) {
      if (a(i, col) == 0) continue;
      const Rat f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < nc; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

// Orthogonal projection onto the row space of v: Q = v^T (v v^T)^(-1) v.
// Throws RankDeficient when the rows of v are dependent (v v^T singular).
inline RatMatrix projection_matrix(const RatMatrix& v) {
  const RatMatrix vt = v.transpose();
  const RatMatrix gram = v * vt;
  RatMatrix gram_inv;
  try {
    gram_inv = inverse(gram);
  } catch (const SingularMatrix&) {
    throw RankDeficient("projection_matrix: rows are linearly dependent");
  }
  return vt * (gram_inv * v);
}

using Coord = std::int64_t;
using Vec6 = std::array<Coord, 6>;

// 6x6 integer matrix acting on column vectors.
struct IntMat6 {
  std::array<std::array<Coord, 6>, 6> a{};

  static IntMat6 identity() {
    IntMat6 m;
    for (int i = 0; i < 6; ++i) m.a[i][i] = 1;
    return m;
  }

  Vec6 apply(const Vec6& p) const {
    Vec6 out{};
    for (int i = 0; i < 6; ++i) {
      Coord s = 0;
      for (int j = 0; j < 6; ++j) s += a[i][j] * p[j];
      out[i] = s;
    }
    return out;
  }

  friend IntMat6 operator*(const IntMat6& x, const IntMat6& y) {
    IntMat6 z;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        Coord s = 0;
        for (int k = 0; k < 6; ++k) s += x.a[i][k] * y.a[k][j];
        z.a[i][j] = s;
      }
    return z;
  }

  friend bool operator==(const IntMat6&, const IntMat6&) = default;
  friend auto operator<=>(const IntMat6&, const IntMat6&) = default;
};

inline RatMatrix to_rational(const IntMat6& m) {
  RatMatrix out(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out(i, j) = m.a[i][j];
  return out;
}

inline bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (denominator(m(i, j)) != 1) return false;
  return true;
}

// pre: m is 6x6 with integer entries that fit in Coord.
inline IntMat6 to_integral(const RatMatrix& m) {
  if (m.rows() != 6 || m.cols() != 6 || !is_integral(m))
    throw std::invalid_argument("to_integral: not an integral 6x6 matrix");
  IntMat6 out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      out.a[i][j] = static_cast<Coord>(numerator(m(i, j)));
  return out;
}

inline bool is_unimodular(const IntMat6& m) {
  const Rat d = determinant(to_rational(m));
  return d == 1 || d == -1;
}

// pre: is_unimodular(m); the inverse of a unimodular matrix is integral.
inline IntMat6 unimodular_inverse(const IntMat6& m) {
  return to_integral(inverse(to_rational(m)));
}

}  // namespace lr3
