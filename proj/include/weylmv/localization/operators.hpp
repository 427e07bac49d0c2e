#pragma once

#include <map>
#include <vector>

#include "weylmv/core/matrix.hpp"
#include "weylmv/localization/classes.hpp"
#include "weylmv/symgrp/perm.hpp"

namespace weylmv {

// Sparse matrix of rational functions in a fixed ring.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols, int nvars) : rows_(rows), cols_(cols), nvars_(nvars) {}

  static RatMatrix identity(int n, int nvars) {
    RatMatrix m(n, n, nvars);
    for (int i = 0; i < n; ++i) m.set(i, i, RatFunc(MultiPoly(nvars, Q(1))));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }

  RatFunc get(int i, int j) const {
    auto it = data_.find(i);
    if (it == data_.end()) return RatFunc(nvars_);
    auto jt = it->second.find(j);
    return jt == it->second.end() ? RatFunc(nvars_) : jt->second;
  }
  void set(int i, int j, const RatFunc& v) {
    if (v.is_zero()) {
      auto it = data_.find(i);
      if (it != data_.end()) {
        it->second.erase(j);
        if (it->second.empty()) data_.erase(it);
      }
      return;
    }
    data_[i][j] = v;
  }
  void add(int i, int j, const RatFunc& v) {
    if (!v.is_zero()) set(i, j, get(i, j) + v);
  }

  bool is_zero() const { return data_.empty(); }
  int nonzero_count() const {
    int n = 0;
    for (const auto& [i, row] : data_) n += static_cast<int>(row.size());
    return n;
  }
  const std::map<int, std::map<int, RatFunc>>& entries() const { return data_; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw CompositionError("RatMatrix: shape mismatch in product");
    RatMatrix r(a.rows_, b.cols_, a.nvars_);
    for (const auto& [i, row] : a.data_)
      for (const auto& [k, av] : row) {
        auto it = b.data_.find(k);
        if (it == b.data_.end()) continue;
        for (const auto& [j, bv] : it->second) r.add(i, j, av * bv);
      }
    return r;
  }
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) {
    a.check_shape(b);
    for (const auto& [i, row] : b.data_)
      for (const auto& [j, v] : row) a.add(i, j, v);
    return a;
  }
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + Q(-1) * b; }
  friend RatMatrix operator*(const Q& s, RatMatrix a) {
    if (s == 0) return RatMatrix(a.rows_, a.cols_, a.nvars_);
    RatFunc f(MultiPoly(a.nvars_, s));
    for (auto& [i, row] : a.data_)
      for (auto& [j, v] : row) v = v * f;
    return a;
  }
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && (a - b).is_zero();
  }

  bool regular_along(int var) const {
    for (const auto& [i, row] : data_)
      for (const auto& [j, v] : row)
        if (!v.regular_along(var)) return false;
    return true;
  }

  RatMatrix specialize(int var, const Q& value) const {
    RatMatrix r(rows_, cols_, nvars_);
    for (const auto& [i, row] : data_)
      for (const auto& [j, v] : row) r.set(i, j, v.specialize(var, value));
    return r;
  }

  // Entrywise constants, if every entry is one.
  std::optional<QMatrix> as_constant() const {
    QMatrix m(rows_, cols_);
    for (const auto& [i, row] : data_)
      for (const auto& [j, v] : row) {
        auto p = v.as_polynomial();
        if (!p || !p->is_constant()) return std::nullopt;
        m(i, j) = p->constant_term();
      }
    return m;
  }

  static RatMatrix from(const QMatrix& m, int nvars) {
    RatMatrix r(m.rows(), m.cols(), nvars);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0) r.set(i, j, RatFunc(MultiPoly(nvars, m(i, j))));
    return r;
  }

 private:
  void check_shape(const RatMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw CompositionError("RatMatrix: shape mismatch");
  }

  int rows_ = 0, cols_ = 0, nvars_ = 0;
  std::map<int, std::map<int, RatFunc>> data_;
};

// Fixed-point basis of the direct sum over P_{n,d}: (composition, coset key) pairs.
struct FixedPointLayout {
  int n = 0, d = 0;
  std::vector<Composition> comps;
  std::map<Composition, int> offset;
  std::map<Composition, std::vector<CosetKey>> keys;  // sorted
  std::map<std::pair<Composition, CosetKey>, int> index;
  int total = 0;
};

inline FixedPointLayout fixed_point_layout(int n, int d) {
  FixedPointLayout l{n, d, compositions(n, d), {}, {}, {}, 0};
  for (const auto& c : l.comps) {
    l.offset[c] = l.total;
    std::vector<CosetKey> ks;
    for (const auto& w : young_cosets(c)) ks.push_back(coset_key(w, c.parts));
    std::sort(ks.begin(), ks.end());
    for (const auto& k : ks) l.index[{c, k}] = l.total++;
    l.keys[c] = std::move(ks);
  }
  return l;
}

// Entry (p, r) = A_{p,r} Eu_r: composing operators becomes matrix multiplication.
inline void place_operator(RatMatrix& m, const FixedPointLayout& l, const CorrClass& a) {
  Ambient amb = ambient_of(a.family);
  for (const auto& [pr, v] : a.coeffs) {
    int i = l.index.at({a.target, pr.first});
    int j = l.index.at({a.source, pr.second});
    m.add(i, j, v * RatFunc(middle_euler(a.source, amb, pr.second)));
  }
}

inline RatMatrix operator_matrix(const FixedPointLayout& l, const std::vector<CorrClass>& blocks) {
  RatMatrix m(l.total, l.total, l.d + 1);
  for (const auto& b : blocks) place_operator(m, l, b);
  return m;
}

inline RatMatrix operator_matrix(const FixedPointLayout& l, const CorrClass& a) {
  return operator_matrix(l, std::vector<CorrClass>{a});
}

// Restriction of a global operator to the block of a single composition pair.
inline RatMatrix block_of(const FixedPointLayout& l, const RatMatrix& m, const Composition& target,
                          const Composition& source) {
  int r0 = l.offset.at(target), c0 = l.offset.at(source);
  int nr = static_cast<int>(l.keys.at(target).size()), nc = static_cast<int>(l.keys.at(source).size());
  RatMatrix b(nr, nc, m.nvars());
  for (const auto& [i, row] : m.entries())
    if (i >= r0 && i < r0 + nr)
      for (const auto& [j, v] : row)
        if (j >= c0 && j < c0 + nc) b.set(i - r0, j - c0, v);
  return b;
}

// Specialize h := 0 after checking every entry is regular there.
inline RatMatrix at_h_zero(const RatMatrix& m) {
  int h = m.nvars() - 1;
  if (!m.regular_along(h)) throw DomainError("operator has a pole along h = 0");
  return m.specialize(h, Q(0));
}

inline RatMatrix cartan_matrix(const FixedPointLayout& l, int a) {
  RatMatrix g(l.total, l.total, l.d + 1);
  for (const auto& c : l.comps)
    for (std::size_t i = 0; i < l.keys.at(c).size(); ++i) {
      int k = l.offset.at(c) + static_cast<int>(i);
      g.set(k, k, RatFunc(MultiPoly(l.d + 1, Q(c[a] - c[a + 1]))));
    }
  return g;
}

// Right translation [u] -> [u s_a] on the full flag fixed points.
inline RatMatrix right_translation(const FixedPointLayout& l, int a) {
  Composition one = Composition::ones(l.d);
  int k = static_cast<int>(l.keys.at(one).size());
  RatMatrix s(k, k, l.d + 1);
  Perm sa = simple_reflection(l.d, a);
  for (int j = 0; j < k; ++j) {
    Perm u = coset_min_rep(l.keys.at(one)[j], one.parts);
    int i = l.index.at({one, coset_key(compose(u, sa), one.parts)}) - l.offset.at(one);
    s.set(i, j, RatFunc(MultiPoly(l.d + 1, Q(1))));
  }
  return s;
}

// Divided difference [u] -> ([u s_a] - [u]) / u(alpha_a).
inline RatMatrix divided_difference(const FixedPointLayout& l, int a) {
  Composition one = Composition::ones(l.d);
  int k = static_cast<int>(l.keys.at(one).size());
  RatMatrix m(k, k, l.d + 1);
  TorusRing R{l.d};
  Perm sa = simple_reflection(l.d, a);
  for (int j = 0; j < k; ++j) {
    Perm u = coset_min_rep(l.keys.at(one)[j], one.parts);
    RatFunc inv = RatFunc(MultiPoly(l.d + 1, Q(1)), weyl_act(u, R.alpha(a)));
    int i = l.index.at({one, coset_key(compose(u, sa), one.parts)}) - l.offset.at(one);
    m.add(i, j, inv);
    m.add(j, j, -inv);
  }
  return m;
}

}  // namespace weylmv
