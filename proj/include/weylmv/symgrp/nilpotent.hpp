#pragma once

#include <vector>

#include "weylmv/core/matrix.hpp"
#include "weylmv/symgrp/composition.hpp"
#include "weylmv/symgrp/partition.hpp"

namespace weylmv {

inline bool is_strictly_upper(const QMatrix& x) {
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j <= i && j < x.cols(); ++j)
      if (x(i, j) != 0) return false;
  return true;
}

inline Partition jordan_type(const QMatrix& x) {
  int d = x.rows();
  if (x.cols() != d) throw DomainError("jordan_type: not square");
  std::vector<int> ranks{d};
  QMatrix p = QMatrix::identity(d);
  for (int k = 1; k <= d; ++k) {
    p = p * x;
    ranks.push_back(rank(p));
  }
  if (ranks.back() != 0) throw DomainError("jordan_type: matrix is not nilpotent");
  std::vector<int> cols;
  for (int k = 1; k <= d; ++k)
    if (ranks[k - 1] - ranks[k] > 0) cols.push_back(ranks[k - 1] - ranks[k]);
  return Partition(cols).transpose();
}

// Chain of Jordan types of x on span(v_1..v_k).
inline StandardTableau spaltenstein_tableau(const QMatrix& x) {
  if (x.rows() != x.cols() || !is_strictly_upper(x)) throw DomainError("spaltenstein_tableau: not strictly upper triangular");
  int d = x.rows();
  std::vector<std::vector<int>> rows;
  Partition prev;
  for (int k = 1; k <= d; ++k) {
    Partition cur = jordan_type(x.block(0, 0, k, k));
    int grown = -1;
    for (int i = 0; i < cur.length(); ++i)
      if (cur[i] != prev[i]) {
        if (grown >= 0 || cur[i] != prev[i] + 1) throw CertificationError("spaltenstein_tableau: chain is not one box per step");
        grown = i;
      }
    if (grown < 0) throw CertificationError("spaltenstein_tableau: chain did not grow");
    if (static_cast<int>(rows.size()) <= grown) rows.resize(grown + 1);
    rows[grown].push_back(k);
    prev = cur;
  }
  return StandardTableau(rows);
}

// Nilpotent in Jordan form, blocks of sizes lambda along the diagonal (superdiagonal ones).
inline QMatrix jordan_matrix(const Partition& lambda) {
  int d = lambda.size();
  QMatrix x(d, d);
  int off = 0;
  for (int b : lambda.parts) {
    for (int i = 0; i + 1 < b; ++i) x(off + i, off + i + 1) = 1;
    off += b;
  }
  return x;
}

inline QMatrix random_upper_invertible(Rng& rng, int d, long height = 3) {
  QMatrix b(d, d);
  for (int i = 0; i < d; ++i) {
    long diag = 0;
    while (diag == 0) diag = uniform_int(rng, -height, height);
    b(i, i) = diag;
    for (int j = i + 1; j < d; ++j) b(i, j) = random_q(rng, height);
  }
  return b;
}

// b J b^{-1} for a random invertible upper triangular b; lies in O_lambda and u.
inline QMatrix sample_borel_conjugate(Rng& rng, const QMatrix& j) {
  QMatrix b = random_upper_invertible(rng, j.rows());
  return b * j * *inverse(b);
}

// x-stable coordinate flags of the Jordan form: orderings that list every Jordan
// chain bottom-up. Returns P^{-1} J P for the induced permutation matrix P.
inline std::vector<QMatrix> coordinate_flag_conjugates(const Partition& lambda) {
  int d = lambda.size();
  QMatrix j = jordan_matrix(lambda);
  std::vector<int> chain_of(d), start;
  int off = 0;
  for (int c = 0; c < lambda.length(); ++c) {
    start.push_back(off);
    for (int i = 0; i < lambda[c]; ++i) chain_of[off + i] = c;
    off += lambda[c];
  }
  std::vector<QMatrix> out;
  std::vector<int> order(d);
  std::vector<int> taken(lambda.length(), 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == d) {
      QMatrix p(d, d);  // column k is e_{order[k]}
      for (int i = 0; i < d; ++i) p(order[i], i) = 1;
      out.push_back(p.transpose() * j * p);
      return;
    }
    for (int c = 0; c < lambda.length(); ++c) {
      if (taken[c] >= lambda[c]) continue;
      order[k] = start[c] + taken[c]++;
      self(self, k + 1);
      --taken[c];
    }
  };
  rec(rec, 0);
  return out;
}

// Points of O_lambda in u covering every Spaltenstein stratum: Borel conjugates
// of the stable coordinate-flag conjugates of the Jordan form.
inline std::vector<QMatrix> sample_orbit_points(Rng& rng, const Partition& lambda, int per_flag) {
  std::vector<QMatrix> out;
  for (const auto& y : coordinate_flag_conjugates(lambda))
    for (int k = 0; k < per_flag; ++k) out.push_back(sample_borel_conjugate(rng, y));
  return out;
}

}  // namespace weylmv
