#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "weylmv/core/matrix.hpp"
#include "weylmv/core/rational.hpp"

namespace weylmv {

// Finite Laurent polynomial in t over Q; exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Q(c)) {}  // NOLINT: integer constants embed
  LaurentPoly(const Q& c) {                  // NOLINT: rational constants embed
    if (c != 0) c_[0] = c;
  }
  static LaurentPoly monomial(int k, const Q& c = 1) {
    LaurentPoly p;
    if (c != 0) p.c_[k] = c;
    return p;
  }

  const std::map<int, Q>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Lowest exponent; INT_MAX for zero.
  int valuation() const { return c_.empty() ? INT_MAX : c_.begin()->first; }
  int top_degree() const { return c_.empty() ? INT_MIN : c_.rbegin()->first; }
  Q coefficient(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Q(0) : it->second;
  }
  LaurentPoly shifted(int k) const {
    LaurentPoly p;
    for (const auto& [e, c] : c_) p.c_[e + k] = c;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const { return LaurentPoly() - *this; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [e, c] : a.c_)
      for (const auto& [f, d] : b.c_) p.add(e + f, c * d);
    return p;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

  std::string render() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
      Q a = c;
      if (!first) os << (a < 0 ? " - " : " + ");
      else if (a < 0) os << "-";
      if (!first || a < 0) a = abs(a);
      bool unit = a == 1;
      if (!unit || e == 0) os << a.get_str();
      if (e != 0) os << (unit ? "" : "*") << "t" << (e != 1 ? "^" + std::to_string(e) : "");
      first = false;
    }
    return os.str();
  }

 private:
  void add(int e, const Q& c) {
    if (c == 0) return;
    Q& x = c_[e];
    x += c;
    if (x == 0) c_.erase(e);
  }
  std::map<int, Q> c_;
};

using LaurentMatrix = Matrix<LaurentPoly>;

// Sorted (decreasing) t-adic exponents of the elementary divisors.
using LatticeType = std::vector<int>;

// Sum_{k<d} x^k t^{-k-1} = t^{-1} (1 - x t^{-1})^{-1}; x must be nilpotent.
inline LaurentMatrix lusztig_embed(const QMatrix& x) {
  int d = x.rows();
  if (x.cols() != d) throw DomainError("lusztig_embed: not square");
  QMatrix p = QMatrix::identity(d);
  LaurentMatrix m(d, d);
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (p(i, j) != 0) m(i, j) += LaurentPoly::monomial(-k - 1, p(i, j));
    p = p * x;
  }
  if (!p.is_zero()) throw DomainError("lusztig_embed: matrix is not nilpotent");
  return m;
}

namespace detail {

// Unit part u of p = t^v u (u(0) != 0), as a polynomial shifted to valuation zero.
inline LaurentPoly unit_part(const LaurentPoly& p) { return p.shifted(-p.valuation()); }

}  // namespace detail

// Elementary divisor exponents over the local ring at t = 0. Poles are cleared by t^N;
// each pivot is an entry of minimal valuation (lowest row, then lowest column); rows
// and columns are cleared fraction-free by multiplying with the pivot's unit part,
// which is invertible locally and so leaves the local invariants unchanged.
inline LatticeType smith_type(LaurentMatrix m) {
  int d = m.rows();
  if (m.cols() != d) throw DomainError("smith_type: not square");
  int low = INT_MAX;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) low = std::min(low, m(i, j).valuation());
  if (low == INT_MAX) throw DomainError("smith_type: singular matrix");
  int N = -low;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = m(i, j).shifted(N);
  LatticeType out;
  for (int k = 0; k < d; ++k) {
    int pi = -1, pj = -1, pv = INT_MAX;
    for (int i = k; i < d; ++i)
      for (int j = k; j < d; ++j)
        if (m(i, j).valuation() < pv) {
          pv = m(i, j).valuation();
          pi = i;
          pj = j;
        }
    if (pv == INT_MAX) throw DomainError("smith_type: singular matrix");
    for (int j = 0; j < d; ++j) std::swap(m(k, j), m(pi, j));
    for (int i = 0; i < d; ++i) std::swap(m(i, k), m(i, pj));
    LaurentPoly u = detail::unit_part(m(k, k));
    for (int i = k + 1; i < d; ++i) {
      if (m(i, k).is_zero()) continue;
      LaurentPoly f = m(i, k).shifted(-pv);
      for (int j = k; j < d; ++j) m(i, j) = u * m(i, j) - f * m(k, j);
    }
    for (int j = k + 1; j < d; ++j) {
      if (m(k, j).is_zero()) continue;
      LaurentPoly f = m(k, j).shifted(-pv);
      for (int i = k; i < d; ++i) m(i, j) = u * m(i, j) - f * m(i, k);
    }
    out.push_back(pv - N);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Determinant by permutation expansion (d <= 6).
inline LaurentPoly laurent_det(const LaurentMatrix& m) {
  int d = m.rows();
  if (m.cols() != d || d > 6) throw DomainError("laurent_det: need a square matrix of size <= 6");
  std::vector<int> p(d);
  for (int i = 0; i < d; ++i) p[i] = i;
  LaurentPoly det;
  do {
    int inv = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (p[i] > p[j]) ++inv;
    LaurentPoly term(1);
    for (int i = 0; i < d && !term.is_zero(); ++i) term = term * m(i, p[i]);
    if (inv % 2) det -= term;
    else det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

}  // namespace weylmv
