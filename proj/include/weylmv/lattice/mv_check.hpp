#pragma once

#include <string>
#include <vector>

#include "weylmv/lattice/laurent.hpp"
#include "weylmv/symgrp/nilpotent.hpp"

namespace weylmv {

// Lattice type as a partition: the negated exponents, zeros dropped. The image of
// lusztig_embed has all exponents <= 0 and determinant valuation -d, so this is a
// partition of d; anything else is a convention violation.
inline Partition type_partition(const LatticeType& t) {
  std::vector<int> parts;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (*it > 0) throw DomainError("type_partition: positive exponent");
    if (*it < 0) parts.push_back(-*it);
  }
  return Partition(parts);
}

inline Partition lattice_type_of(const QMatrix& x) { return type_partition(smith_type(lusztig_embed(x))); }

struct LatticeReport {
  Partition lambda;
  int samples = 0;
  int boundary_samples = 0;
  int failures = 0;
  std::vector<std::string> witnesses;  // first few offending matrices
  bool ok() const { return failures == 0; }
};

namespace detail {

// Cycle through the stable coordinate-flag conjugates, one Borel conjugate each,
// with sample i drawn from its own split stream.
inline std::vector<QMatrix> orbit_samples(const Partition& mu, int count, std::uint64_t seed) {
  auto flags = coordinate_flag_conjugates(mu);
  std::vector<QMatrix> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
    out.push_back(sample_borel_conjugate(rng, flags[i % flags.size()]));
  }
  return out;
}

}  // namespace detail

// Samples of O_lambda meet u must have lattice type lambda; samples of each O_mu with
// mu < lambda (boundary strata of the closure) must have type mu, which is <= lambda.
inline LatticeReport mv_type_check(const Partition& lambda, int samples, std::uint64_t seed, int boundary_per_stratum = 10) {
  LatticeReport r;
  r.lambda = lambda;
  auto record = [&](const QMatrix& x, const Partition& want) {
    Partition got = lattice_type_of(x);
    if (got == want && got.dominated_by(lambda)) return;
    ++r.failures;
    if (r.witnesses.size() < 3) r.witnesses.push_back(render(x) + " has type " + got.str() + ", expected " + want.str());
  };
  for (const auto& x : detail::orbit_samples(lambda, samples, seed)) {
    if (!(jordan_type(x) == lambda)) throw CertificationError("mv_type_check: sampler left the orbit");
    record(x, lambda);
    ++r.samples;
  }
  std::uint64_t stream = 1;
  for (const auto& mu : partitions(lambda.size())) {
    if (mu == lambda || !mu.dominated_by(lambda)) continue;
    for (const auto& x : detail::orbit_samples(mu, boundary_per_stratum, split_seed(seed, stream++))) {
      record(x, mu);
      ++r.boundary_samples;
    }
  }
  return r;
}

}  // namespace weylmv
