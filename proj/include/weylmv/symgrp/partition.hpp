#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "weylmv/core/errors.hpp"

namespace weylmv {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    for (int x : parts)
      if (x < 0) throw DomainError("partition with negative part");
    if (!std::is_sorted(parts.rbegin(), parts.rend())) throw DomainError("partition parts not decreasing");
  }

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const { return i < length() ? parts[i] : 0; }  // 0-based row

  Partition transpose() const {
    std::vector<int> t;
    for (int c = 0; c < (parts.empty() ? 0 : parts[0]); ++c) {
      int n = 0;
      for (int x : parts)
        if (x > c) ++n;
      t.push_back(n);
    }
    return Partition(t);
  }

  // Number of (k)-th power rank: sum_i max(lambda_i - k, 0).
  int rank_of_power(int k) const {
    int r = 0;
    for (int x : parts) r += std::max(x - k, 0);
    return r;
  }

  // dominance: this <= o
  bool dominated_by(const Partition& o) const {
    int a = 0, b = 0;
    for (int i = 0; i < std::max(length(), o.length()); ++i) {
      a += (*this)[i];
      b += o[i];
      if (a > b) return false;
    }
    return size() == o.size();
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& x, const Partition& y) { return x.parts < y.parts; }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    return os.str();
  }
};

// Partitions of d, reverse lexicographic: (d), (d-1,1), ...
inline std::vector<Partition> partitions(int d) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

// #SYT by the hook length formula.
inline long hook_length_count(const Partition& l) {
  Partition t = l.transpose();
  long num = 1;
  for (int i = 2; i <= l.size(); ++i) num *= i;
  long den = 1;
  for (int i = 0; i < l.length(); ++i)
    for (int j = 0; j < l[i]; ++j) den *= (l[i] - j - 1) + (t[j] - i - 1) + 1;
  return num / den;
}

// sum (lambda^t_i)^2
inline int sum_sq_transpose(const Partition& l) {
  int s = 0;
  for (int x : l.transpose().parts) s += x * x;
  return s;
}

// Half the dimension of the nilpotent orbit of type l.
inline int half_orbit_dim(const Partition& l) {
  int d = l.size();
  return (d * d - sum_sq_transpose(l)) / 2;
}

struct StandardTableau {
  std::vector<std::vector<int>> rows;  // entries 1..d

  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
    if (!is_standard()) throw DomainError("tableau not standard");
  }

  Partition shape() const {
    std::vector<int> p;
    for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
    return Partition(p);
  }
  int size() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
  }
  bool is_standard() const {
    int n = size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty()) return false;
      if (i && rows[i].size() > rows[i - 1].size()) return false;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        int x = rows[i][j];
        if (x < 1 || x > n || seen[x]) return false;
        seen[x] = true;
        if (j && rows[i][j - 1] >= x) return false;
        if (i && rows[i - 1][j] >= x) return false;
      }
    }
    return true;
  }
  StandardTableau transpose() const {
    std::vector<std::vector<int>> cols;
    for (const auto& r : rows)
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (cols.size() <= j) cols.emplace_back();
        cols[j].push_back(r[j]);
      }
    return StandardTableau(cols);
  }
  // Row index of each entry 1..d (index 0 unused).
  std::vector<int> row_of() const {
    std::vector<int> r(size() + 1, -1);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int x : rows[i]) r[x] = static_cast<int>(i);
    return r;
  }
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend bool operator<(const StandardTableau& a, const StandardTableau& b) { return a.rows < b.rows; }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < rows[i].size(); ++j) os << (j ? "," : "") << rows[i][j];
      os << "]";
    }
    os << "]";
    return os.str();
  }
};

// Standard tableaux of shape l, sorted by row lists.
inline std::vector<StandardTableau> standard_tableaux(const Partition& l) {
  std::vector<StandardTableau> out;
  int d = l.size();
  std::vector<std::vector<int>> rows(l.length());
  auto rec = [&](auto&& self, int k) -> void {
    if (k > d) {
      out.emplace_back(rows);
      return;
    }
    for (int i = 0; i < l.length(); ++i) {
      int len = static_cast<int>(rows[i].size());
      if (len >= l[i]) continue;
      if (i && static_cast<int>(rows[i - 1].size()) <= len) continue;
      rows[i].push_back(k);
      self(self, k + 1);
      rows[i].pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace weylmv
