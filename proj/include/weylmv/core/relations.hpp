#pragma once

#include <functional>
#include <string>

#include "weylmv/core/rational.hpp"

namespace weylmv {

enum class Which { E, F };

struct RelationReport {
  bool ok = true;
  int checked = 0;
  std::string witness;

  void fail(const std::string& w) {
    if (ok) witness = w;
    ok = false;
  }
};

// gl_n relations for operators E_a, F_a, H_a (a = 1..n-1) on a common space.
// M needs *, +, -, Q * M, and is_zero().
template <class M>
RelationReport check_gln_relations(int n, const std::function<M(int, Which)>& op, const std::function<M(int)>& cartan) {
  RelationReport r;
  std::vector<M> e, f;
  for (int a = 1; a < n; ++a) {
    e.push_back(op(a, Which::E));
    f.push_back(op(a, Which::F));
  }
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      const M& ea = e[a - 1];
      const M& fb = f[b - 1];
      M comm = ea * fb - fb * ea;
      if (a == b) comm = comm - cartan(a);
      ++r.checked;
      if (!comm.is_zero()) r.fail("[E" + std::to_string(a) + ",F" + std::to_string(b) + "]");
      if (a >= b) continue;
      const M& eb = e[b - 1];
      const M& fa = f[a - 1];
      if (b - a == 1) {
        for (int flip = 0; flip < 2; ++flip) {
          const M& x = flip ? eb : ea;
          const M& y = flip ? ea : eb;
          ++r.checked;
          if (!(x * x * y - Q(2) * (x * y * x) + y * x * x).is_zero())
            r.fail("Serre E" + std::to_string(a) + "," + std::to_string(b));
          const M& u = flip ? f[b - 1] : fa;
          const M& w = flip ? fa : f[b - 1];
          ++r.checked;
          if (!(u * u * w - Q(2) * (u * w * u) + w * u * u).is_zero())
            r.fail("Serre F" + std::to_string(a) + "," + std::to_string(b));
        }
      } else {
        ++r.checked;
        if (!(ea * eb - eb * ea).is_zero()) r.fail("[E" + std::to_string(a) + ",E" + std::to_string(b) + "]");
        ++r.checked;
        if (!(fa * f[b - 1] - f[b - 1] * fa).is_zero())
          r.fail("[F" + std::to_string(a) + ",F" + std::to_string(b) + "]");
      }
    }
  return r;
}

}  // namespace weylmv
