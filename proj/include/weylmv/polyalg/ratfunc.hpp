#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylmv/core/errors.hpp"
#include "weylmv/core/multipoly.hpp"
#include "weylmv/polyalg/torus.hpp"

namespace weylmv {

// num / prod(f_i^k_i). Denominator factors are monic, nonconstant, free of monomial
// content except single variables, and share no factor with num that trial
// division or a gcd can detect.
class RatFunc {
 public:
  using Factor = std::pair<MultiPoly, int>;

  RatFunc() = default;
  explicit RatFunc(int nvars) : num_(nvars) {}
  RatFunc(MultiPoly num) : num_(std::move(num)) {}  // NOLINT: polynomials embed implicitly
  RatFunc(MultiPoly num, const MultiPoly& den) : num_(std::move(num)) {
    if (den.is_zero()) throw DomainError("RatFunc: zero denominator");
    if (den.nvars() != num_.nvars()) throw CompositionError("RatFunc: rings differ");
    mul_den(den, 1);
    normalize();
  }
  static RatFunc from_factors(MultiPoly num, const std::vector<MultiPoly>& den_factors) {
    RatFunc r(std::move(num));
    for (const auto& f : den_factors) {
      if (f.is_zero()) throw DomainError("RatFunc: zero denominator factor");
      r.mul_den(f, 1);
    }
    r.normalize();
    return r;
  }

  int nvars() const { return num_.nvars(); }
  const MultiPoly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  MultiPoly den() const {
    MultiPoly d(nvars(), Q(1));
    for (const auto& [f, k] : den_) d *= f.pow(k);
    return d;
  }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  std::optional<MultiPoly> as_polynomial() const {
    if (!den_.empty()) return std::nullopt;
    return num_;
  }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.nvars());
    RatFunc r(a.num_ * b.num_);
    r.den_ = a.den_;
    for (const auto& [f, k] : b.den_) r.merge_factor(f, k);
    r.normalize();
    return r;
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<Factor> common = a.den_;
    for (const auto& [f, k] : b.den_) {
      bool found = false;
      for (auto& [g, m] : common)
        if (g == f) {
          m = std::max(m, k);
          found = true;
        }
      if (!found) common.emplace_back(f, k);
    }
    RatFunc r(a.scaled_to(common) + b.scaled_to(common));
    if (!r.num_.is_zero()) r.den_ = std::move(common);
    r.normalize();
    return r;
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  RatFunc inverse() const {
    if (is_zero()) throw DomainError("RatFunc: inverse of zero");
    RatFunc r(den());
    r.mul_den(num_, 1);
    r.normalize();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.nvars() != b.nvars()) return false;
    return (a - b).is_zero();
  }

  // Ring automorphism induced by a permutation of variables.
  RatFunc permute_vars(const std::vector<int>& perm) const {
    RatFunc r(num_.permute_vars(perm));
    for (const auto& [f, k] : den_) r.mul_den(f.permute_vars(perm), k);
    r.normalize();
    return r;
  }

  // Substitute var := value; throws if the reduced denominator vanishes there.
  RatFunc specialize(int var, const Q& value) const {
    RatFunc r(num_.specialize(var, value));
    for (const auto& [f, k] : den_) {
      MultiPoly g = f.specialize(var, value);
      if (g.is_zero()) throw DomainError("RatFunc: specialization hits a pole");
      r.mul_den(g, k);
    }
    r.normalize();
    return r;
  }

  // True iff the reduced denominator is not divisible by variable var.
  bool regular_along(int var) const {
    for (const auto& [f, k] : den_)
      if (f.specialize(var, Q(0)).is_zero()) return false;
    return true;
  }

  Q evaluate(const std::vector<Q>& pt) const {
    Q dv = 1;
    for (const auto& [f, k] : den_)
      for (int i = 0; i < k; ++i) dv *= f.evaluate(pt);
    if (dv == 0) throw DomainError("RatFunc: evaluation at a pole");
    return num_.evaluate(pt) / dv;
  }

  std::string render(const std::vector<std::string>& names) const {
    if (den_.empty()) return num_.render(names);
    std::string s = "(" + num_.render(names) + ")/(";
    bool first = true;
    for (const auto& [f, k] : den_) {
      if (!first) s += "*";
      first = false;
      s += "(" + f.render(names) + ")";
      if (k > 1) s += "^" + std::to_string(k);
    }
    return s + ")";
  }

 private:
  // Multiply the denominator by f^k, keeping factor invariants.
  void mul_den(const MultiPoly& f, int k) { mul_den_impl(f, k); }

  void mul_den_impl(MultiPoly f, int k) {
    if (k == 0) return;
    if (f.is_constant()) {
      Q c = f.constant_term();
      Q s = 1;
      for (int i = 0; i < k; ++i) s *= c;
      num_ *= Q(1) / s;
      return;
    }
    Monomial mc = f.monomial_content();
    if (!mc.is_one()) {
      for (int v = 0; v < nvars(); ++v)
        if (mc.e[v]) merge_factor(MultiPoly::variable(nvars(), v), mc.e[v] * k);
      f = *divide_exact(f, MultiPoly::monomial(nvars(), mc));
      if (f.is_constant()) {
        mul_den_impl(f, k);
        return;
      }
    }
    Q lc = f.lead().second;
    Q s = 1;
    for (int i = 0; i < k; ++i) s *= lc;
    num_ *= Q(1) / s;
    merge_factor(f.monic(), k);
  }

  void merge_factor(const MultiPoly& f, int k) {
    for (auto& [g, m] : den_)
      if (g == f) {
        m += k;
        return;
      }
    den_.emplace_back(f, k);
  }

  MultiPoly scaled_to(const std::vector<Factor>& common) const {
    MultiPoly r = num_;
    for (const auto& [f, k] : common) {
      int have = 0;
      for (const auto& [g, m] : den_)
        if (g == f) have = m;
      if (k > have) r *= f.pow(k - have);
    }
    return r;
  }

  void normalize() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < den_.size(); ++i) {
        auto& [f, k] = den_[i];
        while (k > 0) {
          auto q = divide_exact(num_, f);
          if (!q) break;
          num_ = std::move(*q);
          --k;
        }
        if (k > 0 && f.total_degree() > 1 && num_.total_degree() > 0) {
          MultiPoly g = gcd(num_, f);
          if (!g.is_constant()) {
            MultiPoly rest = *divide_exact(f, g);
            int kk = k;
            den_.erase(den_.begin() + static_cast<long>(i));
            mul_den_impl(g, kk);
            mul_den_impl(rest, kk);
            changed = true;
            break;
          }
        }
      }
      std::vector<Factor> kept;
      for (auto& fk : den_)
        if (fk.second > 0) kept.push_back(std::move(fk));
      den_ = std::move(kept);
    }
    std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) {
      return a.first.terms() < b.first.terms();
    });
  }

  MultiPoly num_;
  std::vector<Factor> den_;
};

inline RatFunc weyl_act(const Perm& w, const RatFunc& f) {
  int d = static_cast<int>(w.size());
  if (f.nvars() != d + 1) throw CompositionError("weyl_act: dimension mismatch");
  if (!is_perm(w)) throw DomainError("weyl_act: not a permutation");
  Perm full = w;
  full.push_back(d);
  return f.permute_vars(full);
}

}  // namespace weylmv
