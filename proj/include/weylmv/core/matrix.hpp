#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "weylmv/core/errors.hpp"
#include "weylmv/core/rational.hpp"

namespace weylmv {

// Dense row-major matrix over a ring T (T(0), T(1) constructible).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int r, int c, const T& fill = T(0)) : rows_(r), cols_(c), a_(static_cast<std::size_t>(r) * c, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw CompositionError("matrix product: shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (xik == T(0)) continue;
        for (int j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    x.check_same(y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    x.check_same(y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }
  friend Matrix operator*(const T& s, Matrix x) {
    for (auto& v : x.a_) v = s * v;
    return x;
  }
  Matrix operator-() const { return T(-1) * *this; }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!(v == T(0))) return false;
    return true;
  }
  int nonzero_count() const {
    int n = 0;
    for (const auto& v : a_)
      if (!(v == T(0))) ++n;
    return n;
  }

  Matrix column(int j) const {
    Matrix c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }
  Matrix block(int r0, int c0, int nr, int nc) const {
    Matrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(int r0, int c0, const Matrix& b) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
  static Matrix hconcat(const std::vector<Matrix>& cols, int rows) {
    int c = 0;
    for (const auto& m : cols) c += m.cols();
    Matrix r(rows, c);
    int off = 0;
    for (const auto& m : cols) {
      r.set_block(0, off, m);
      off += m.cols();
    }
    return r;
  }

 private:
  void check_same(const Matrix& y) const {
    if (rows_ != y.rows_ || cols_ != y.cols_) throw CompositionError("matrix sum: shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Q>;

inline std::string render(const QMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref_inplace(QMatrix& m) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Q inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Q f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

inline int rank(QMatrix m) { return static_cast<int>(rref_inplace(m).size()); }

// Columns form a basis of the right nullspace, in reduced form.
inline QMatrix nullspace(const QMatrix& a) {
  QMatrix m = a;
  auto piv = rref_inplace(m);
  std::vector<bool> is_piv(a.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_piv[c]) free.push_back(c);
  QMatrix n(a.cols(), static_cast<int>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    n(free[k], static_cast<int>(k)) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) n(piv[i], static_cast<int>(k)) = -m(static_cast<int>(i), free[k]);
  }
  return n;
}

// Some X with A X = B, or nullopt when inconsistent.
inline std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw CompositionError("solve: shape mismatch");
  QMatrix aug(a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  auto piv = rref_inplace(aug);
  for (int c : piv)
    if (c >= a.cols()) return std::nullopt;
  QMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(static_cast<int>(i), a.cols() + j);
  return x;
}

inline std::optional<QMatrix> inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, QMatrix::identity(a.rows()));
}

// Basis of the column space, chosen as the reduced row echelon form of the transpose.
inline QMatrix column_space_basis(const QMatrix& a) {
  QMatrix t = a.transpose();
  auto piv = rref_inplace(t);
  QMatrix b(a.rows(), static_cast<int>(piv.size()));
  for (int j = 0; j < b.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i) b(i, j) = t(j, i);
  return b;
}

// Rank of the reduction modulo a prime p < 2^62; nullopt if some denominator vanishes
// mod p. Any nonzero minor mod p is nonzero over Q, so this is a lower bound for rank.
inline std::optional<int> rank_mod_p(const QMatrix& a, std::uint64_t p = 2305843009213693951ull) {
  using u128 = unsigned __int128;
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint64_t>(u128(x) * y % p); };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, b = mulmod(b, b))
      if (e & 1) r = mulmod(r, b);
    return r;
  };
  mpz_class P(std::to_string(p));
  auto reduce = [&](const mpz_class& z) {
    mpz_class r = z % P;
    if (r < 0) r += P;
    return static_cast<std::uint64_t>(std::stoull(r.get_str()));
  };
  int R = a.rows(), C = a.cols();
  std::vector<std::vector<std::uint64_t>> m(R, std::vector<std::uint64_t>(C));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) {
      std::uint64_t den = reduce(a(i, j).get_den());
      if (den == 0) return std::nullopt;
      m[i][j] = mulmod(reduce(a(i, j).get_num()), powmod(den, p - 2));
    }
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int piv = -1;
    for (int i = r; i < R; ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    std::uint64_t inv = powmod(m[r][c], p - 2);
    for (int i = r + 1; i < R; ++i) {
      if (!m[i][c]) continue;
      std::uint64_t f = mulmod(m[i][c], inv);
      for (int j = c; j < C; ++j) m[i][j] = (m[i][j] + p - mulmod(f, m[r][j])) % p;
    }
    ++r;
  }
  return r;
}

inline Q trace(const QMatrix& m) {
  Q s = 0;
  for (int i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

}  // namespace weylmv
