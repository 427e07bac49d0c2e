#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "weylmv/core/errors.hpp"
#include "weylmv/core/rational.hpp"

namespace weylmv {

inline constexpr int kMaxVars = 16;

// Dense exponent vector; slots at index >= nvars are always zero.
struct Monomial {
  std::array<std::int16_t, kMaxVars> e{};

  int degree() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
    return m;
  }
  // Caller guarantees o divides *this.
  Monomial operator/(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::int16_t>(e[i] - o.e[i]);
    return m;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::min(a.e[i], b.e[i]);
    return m;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic with variable 0 most significant.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

inline Monomial unit_monomial(int var, int power = 1) {
  Monomial m;
  m.e[var] = static_cast<std::int16_t>(power);
  return m;
}

// Sparse polynomial over Q in a fixed number of variables; canonical: no zero coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Q>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) { check_nvars(); }
  MultiPoly(int nvars, const Q& c) : nvars_(nvars) {
    check_nvars();
    if (c != 0) terms_.emplace(Monomial{}, c);
  }

  static MultiPoly constant(int nvars, const Q& c) { return MultiPoly(nvars, c); }
  static MultiPoly variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw DomainError("variable index out of range");
    MultiPoly p(nvars);
    p.terms_.emplace(unit_monomial(i), Q(1));
    return p;
  }
  static MultiPoly monomial(int nvars, const Monomial& m, const Q& c = 1) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  Q constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Q(0) : it->second;
  }
  Q coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Q(0) : it->second;
  }

  // Lex-largest term; polynomial must be nonzero.
  const std::pair<const Monomial, Q>& lead() const {
    if (terms_.empty()) throw DomainError("lead of zero polynomial");
    return *terms_.rbegin();
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  int degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m.e[var]);
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }
  bool uses_var(int var) const { return degree_in(var) > 0; }

  void add_term(const Monomial& m, const Q& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const Q& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Q& s) { return a *= s; }
  friend MultiPoly operator+(MultiPoly a, const Q& c) {
    a.add_term(Monomial{}, c);
    return a;
  }
  friend MultiPoly operator-(MultiPoly a, const Q& c) {
    a.add_term(Monomial{}, -c);
    return a;
  }
  friend MultiPoly operator*(const Q& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.same_ring(b);
    MultiPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly mul_term(const Monomial& m, const Q& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
    return r;
  }
  MultiPoly pow(unsigned k) const {
    MultiPoly r(nvars_, Q(1));
    MultiPoly b = *this;
    while (k) {
      if (k & 1u) r *= b;
      k >>= 1u;
      if (k) b *= b;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Replace variable i by polynomial images[i]; images must share a ring.
  MultiPoly compose(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw CompositionError("compose: arity mismatch");
    int target = images.empty() ? 0 : images[0].nvars();
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
      MultiPoly t(target, c);
      for (int i = 0; i < nvars_; ++i)
        if (m.e[i]) t *= images[i].pow(m.e[i]);
      r += t;
    }
    return r;
  }

  // Rename variables: variable i becomes variable perm[i].
  MultiPoly permute_vars(const std::vector<int>& perm) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial n;
      for (int i = 0; i < nvars_; ++i) n.e[perm[i]] = m.e[i];
      r.terms_.emplace(n, c);
    }
    return r;
  }

  Q evaluate(const std::vector<Q>& pt) const {
    Q s = 0;
    for (const auto& [m, c] : terms_) {
      Q t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < m.e[i]; ++k) t *= pt[i];
      s += t;
    }
    return s;
  }

  // Substitute var := value, keeping the ring.
  MultiPoly specialize(int var, const Q& value) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial n = m;
      Q t = c;
      for (int k = 0; k < m.e[var]; ++k) t *= value;
      n.e[var] = 0;
      r.add_term(n, t);
    }
    return r;
  }

  MultiPoly derivative(int var) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (!m.e[var]) continue;
      Monomial n = m;
      --n.e[var];
      r.add_term(n, c * m.e[var]);
    }
    return r;
  }

  // Coefficients as a polynomial in `var`: degree -> coefficient (free of var).
  std::map<int, MultiPoly> as_univariate(int var) const {
    std::map<int, MultiPoly> out;
    for (const auto& [m, c] : terms_) {
      Monomial n = m;
      int k = n.e[var];
      n.e[var] = 0;
      auto it = out.try_emplace(k, MultiPoly(nvars_)).first;
      it->second.add_term(n, c);
    }
    return out;
  }

  // Homogeneous component of total degree k.
  MultiPoly homogeneous_part(int k) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == k) r.terms_.emplace(m, c);
    return r;
  }

  Monomial monomial_content() const {
    if (terms_.empty()) return {};
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) g = Monomial::gcd(g, m);
    return g;
  }

  // Divide by the lex-leading coefficient.
  MultiPoly monic() const {
    if (terms_.empty()) return *this;
    Q inv = 1 / lead().second;
    return *this * inv;
  }

  MultiPoly extend(int new_nvars) const {
    if (new_nvars < nvars_) throw CompositionError("extend: shrinking ring");
    MultiPoly r(new_nvars);
    r.terms_ = terms_;
    return r;
  }

  // Expanded rendering; terms by descending degree then descending lex.
  std::string render(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Q>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
      int da = a.first.degree(), db = b.first.degree();
      if (da != db) return da > db;
      return b.first < a.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ts) {
      Q a = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool one = m.is_one();
      if (a != 1 || one) {
        os << a.get_str();
        if (!one) os << "*";
      }
      bool firstvar = true;
      for (int i = 0; i < nvars_; ++i) {
        if (!m.e[i]) continue;
        if (!firstvar) os << "*";
        firstvar = false;
        os << names.at(i);
        if (m.e[i] > 1) os << "^" << m.e[i];
      }
    }
    return os.str();
  }

 private:
  void check_nvars() const {
    if (nvars_ < 0 || nvars_ > kMaxVars) throw DomainError("too many variables");
  }
  void same_ring(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw CompositionError("polynomial rings differ");
  }

  int nvars_ = 0;
  TermMap terms_;
};

// Exact quotient f/g if g divides f, else nullopt.
inline std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  MultiPoly q(f.nvars()), r = f;
  const auto& [gm, gc] = g.lead();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.lead();
    if (!gm.divides(rm)) return std::nullopt;
    Monomial m = rm / gm;
    Q c = rc / gc;
    q.add_term(m, c);
    r -= g.mul_term(m, c);
  }
  return q;
}

namespace detail {

inline int max_var(const MultiPoly& f) {
  for (int v = f.nvars() - 1; v >= 0; --v)
    if (f.uses_var(v)) return v;
  return -1;
}

MultiPoly gcd_impl(const MultiPoly& f, const MultiPoly& g);

// gcd of the coefficients of f viewed as a polynomial in var.
inline MultiPoly content_in(const MultiPoly& f, int var) {
  MultiPoly c(f.nvars());
  for (const auto& [k, coef] : f.as_univariate(var)) {
    c = c.is_zero() ? coef.monic() : gcd_impl(c, coef);
    if (c.is_constant()) return MultiPoly(f.nvars(), Q(1));
  }
  return c;
}

// Pseudo-remainder of f by g in var (deg_var g >= 1).
inline MultiPoly prem(MultiPoly f, const MultiPoly& g, int var) {
  int dg = g.degree_in(var);
  auto gu = g.as_univariate(var);
  MultiPoly lc = gu.rbegin()->second;
  MultiPoly gtail = g - lc.mul_term(unit_monomial(var, dg), 1);
  while (!f.is_zero() && f.degree_in(var) >= dg) {
    int df = f.degree_in(var);
    auto fu = f.as_univariate(var);
    MultiPoly lf = fu.rbegin()->second;
    MultiPoly ftail = f - lf.mul_term(unit_monomial(var, df), 1);
    f = lc * ftail - lf.mul_term(unit_monomial(var, df - dg), 1) * gtail;
  }
  return f;
}

inline MultiPoly gcd_impl(const MultiPoly& f, const MultiPoly& g) {
  int n = f.nvars();
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return MultiPoly(n, Q(1));
  int vf = max_var(f), vg = max_var(g);
  int v = std::max(vf, vg);
  if (vf != v) return gcd_impl(f, content_in(g, v));
  if (vg != v) return gcd_impl(content_in(f, v), g);
  MultiPoly cf = content_in(f, v), cg = content_in(g, v);
  MultiPoly c = gcd_impl(cf, cg);
  MultiPoly a = *divide_exact(f, cf), b = *divide_exact(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero() && b.degree_in(v) > 0) {
    MultiPoly r = prem(a, b, v);
    a = std::move(b);
    if (r.is_zero()) {
      b = MultiPoly(n);
    } else {
      b = *divide_exact(r, content_in(r, v));
    }
  }
  MultiPoly prim = b.is_zero() ? *divide_exact(a, content_in(a, v)) : MultiPoly(n, Q(1));
  return (c * prim).monic();
}

}  // namespace detail

// Monic (lex-leading coefficient 1) greatest common divisor over Q.
inline MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
  if (f.nvars() != g.nvars()) throw CompositionError("gcd: rings differ");
  return detail::gcd_impl(f, g);
}

}  // namespace weylmv
