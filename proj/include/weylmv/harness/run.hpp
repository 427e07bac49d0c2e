#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "weylmv/lattice/mv_check.hpp"
#include "weylmv/localization/checks.hpp"
#include "weylmv/orbital/conjecture.hpp"

namespace weylmv {

inline constexpr const char* kReportSchema = "weylmv-report/1";
inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kMaxRank = 5;
inline constexpr int kLatticeSamples = 100;

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Checks in dependency order; orbital feeds hotta feeds conjecture.
inline const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> v{"convolution", "relations", "schurweyl-match", "orbital",
                                          "hotta",       "conjecture", "lattice"};
  return v;
}

struct RunConfig {
  int d = 3;
  std::vector<Partition> lambdas;  // empty: every partition of d
  std::set<std::string> checks;
  std::uint64_t seed = 1;
  long pair_cap = GroebnerBudget{}.pair_cap;
  int jobs = 1;
};

// "2,1" -> (2,1). Parts must be positive integers in weakly decreasing order.
inline Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ConfigError("malformed partition '" + text + "'");
    }
    if (used != tok.size() || v <= 0) throw ConfigError("malformed partition '" + text + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw ConfigError("empty partition");
  if (!std::is_sorted(parts.rbegin(), parts.rend())) throw ConfigError("partition '" + text + "' is not decreasing");
  return Partition(parts);
}

inline void validate(RunConfig& c) {
  if (c.d < 1 || c.d > kMaxRank) throw ConfigError("d must lie in 1.." + std::to_string(kMaxRank));
  if (c.jobs < 1) throw ConfigError("jobs must be positive");
  if (c.pair_cap < 1) throw ConfigError("groebner pair cap must be positive");
  for (const auto& l : c.lambdas)
    if (l.size() != c.d) throw ConfigError("partition " + l.str() + " does not sum to d = " + std::to_string(c.d));
  for (const auto& k : c.checks)
    if (std::find(all_checks().begin(), all_checks().end(), k) == all_checks().end())
      throw ConfigError("unknown check '" + k + "'");
  if (c.checks.empty()) throw ConfigError("no checks selected");
  if (c.lambdas.empty()) c.lambdas = partitions(c.d);
  std::sort(c.lambdas.begin(), c.lambdas.end());
  c.lambdas.erase(std::unique(c.lambdas.begin(), c.lambdas.end()), c.lambdas.end());
}

namespace detail {

using nlohmann::json;

inline std::uint64_t partition_stream(const Partition& l) {
  std::uint64_t s = 0;
  for (int p : l.parts) s = s * 8 + static_cast<std::uint64_t>(p);
  return s;
}

inline json matrices_json(const std::vector<QMatrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
      rows.push_back(row);
    }
    out.push_back(rows);
  }
  return out;
}

inline json character_json(const ClassFunction& chi) {
  json out = json::object();
  for (const auto& [cyc, v] : chi) {
    std::string key;
    for (std::size_t i = 0; i < cyc.size(); ++i) key += (i ? "," : "") + std::to_string(cyc[i]);
    out[key] = v.get_str();
  }
  return out;
}

inline std::string render_torus(const MultiPoly& p, int d) { return p.render(TorusRing{d}.names()); }

struct Outcome {
  std::string verdict;  // PASS, PASS-PROJECTIVE, FAIL, INCOMPLETE
  json artifacts = json::object();
  std::string witness;
  double seconds = 0;
};

inline Outcome verdict_only(std::string v) {
  Outcome o;
  o.verdict = std::move(v);
  return o;
}

inline json outcome_json(const Outcome& o) {
  json j{{"verdict", o.verdict}, {"artifacts", o.artifacts}};
  if (!o.witness.empty()) j["witness"] = o.witness;
  return j;
}

// Runs f, mapping budget exhaustion to INCOMPLETE and certification or domain failures to FAIL.
inline Outcome guarded(const std::function<Outcome()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const BudgetExceeded& e) {
    o = Outcome{"INCOMPLETE", json::object(), e.what()};
  } catch (const std::exception& e) {
    o = Outcome{"FAIL", json::object(), e.what()};
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

inline Outcome from_results(const std::vector<CheckResult>& rs) {
  Outcome o = verdict_only("PASS");
  o.artifacts["checked"] = json::array();
  for (const auto& r : rs) {
    o.artifacts["checked"].push_back(r.name);
    if (!r.ok && o.witness.empty()) {
      o.verdict = "FAIL";
      o.witness = r.name + ": " + r.detail;
    }
  }
  return o;
}

inline constexpr int kMaxConvolutionRank = 4;  // d! fixed points; d = 5 takes minutes per operator

inline Outcome run_convolution(int d) {
  if (d > kMaxConvolutionRank)
    throw BudgetExceeded("convolution identities are evaluated for d <= " + std::to_string(kMaxConvolutionRank));
  std::vector<CheckResult> rs;
  for (int a = 1; a < d; ++a)
    for (Family fam : {Family::Z, Family::X}) {
      rs.push_back(check_composite(fam, d, a));
      rs.push_back(check_weight_zero_T(fam, d, a));
    }
  Outcome o = from_results(rs);
  o.artifacts["sign_convention"] = to_string(SignConvention::Split);
  o.artifacts["weight_zero"] = {{"Z", "T_a = s_a"}, {"X", "T_a = -s_a"}};
  return o;
}

// Local gl_n relations at n = d <= 3 (fixed-point count grows as d!); Specht towers for every lambda.
inline Outcome run_relations(int d, const std::vector<Partition>& lambdas) {
  std::vector<CheckResult> rs;
  if (d >= 2 && d <= 3)
    for (Family fam : {Family::Z, Family::X}) rs.push_back(check_local_relations(fam, d, d));
  for (const auto& l : lambdas) {
    InvariantTower t = build_tower(specht_module(l), d);
    BlockLayout bl = layout_of(t);
    std::function<QMatrix(int, Which)> op = [&](int a, Which w) { return global_operator(t, bl, a, w); };
    std::function<QMatrix(int)> h = [&](int a) { return global_cartan(bl, a); };
    RelationReport rep = check_gln_relations<QMatrix>(t.n, op, h);
    rs.push_back(CheckResult{"specht-tower-" + l.str(), rep.ok, rep.witness});
  }
  Outcome o = from_results(rs);
  if (d > 3) o.artifacts["note"] = "local relations checked only for d <= 3";
  return o;
}

inline Outcome run_schurweyl_match(int d) {
  std::vector<CheckResult> rs;
  if (d >= 2 && d <= 3)
    for (int n = 2; n <= d; ++n) rs.push_back(check_bg_schur_weyl(n, d));
  Outcome o = from_results(rs);
  if (d < 2 || d > 3) o.artifacts["note"] = "fixed-point comparison runs for d in 2..3";
  return o;
}

struct LambdaResults {
  std::map<std::string, Outcome> by_check;
};

inline LambdaResults run_lambda(const Partition& l, const RunConfig& c, const KLData* kl) {
  LambdaResults out;
  auto want = [&](const char* k) { return c.checks.count(k) > 0; };
  std::uint64_t stream = partition_stream(l);
  bool need_dec = want("orbital") || want("hotta") || want("conjecture");
  OrbitalDecomposition dec;
  HottaReport hot;
  bool have_dec = false, have_hotta = false;
  std::string upstream;
  if (need_dec) {
    Outcome o = guarded([&] {
      Rng rng(split_seed(c.seed, stream));
      DecomposeOptions opt;
      opt.budget.pair_cap = c.pair_cap;
      dec = decompose(l, rng, opt);
      have_dec = true;
      Outcome r = verdict_only("PASS");
      r.artifacts["expected_count"] = dec.expected_count;
      r.artifacts["orbit_multidegree"] = render_torus(dec.orbit_multidegree, l.size());
      r.artifacts["additive"] = dec.additive;
      r.artifacts["used_fallback"] = dec.used_fallback;
      json comps = json::array();
      for (const auto& k : dec.components)
        comps.push_back({{"tableau", k.tableau.rows}, {"joseph", render_torus(k.joseph, l.size())}, {"dim", k.dim}});
      r.artifacts["components"] = comps;
      if (static_cast<long>(dec.components.size()) != dec.expected_count || !dec.additive) {
        r.verdict = "FAIL";
        r.witness = std::to_string(dec.components.size()) + " components, expected " +
                    std::to_string(dec.expected_count) + (dec.additive ? "" : "; multidegree not additive");
      }
      return r;
    });
    if (o.verdict != "PASS") upstream = "orbital: " + o.verdict + " (" + o.witness + ")";
    if (want("orbital")) out.by_check["orbital"] = o;
  }
  if ((want("hotta") || want("conjecture")) && have_dec && upstream.empty()) {
    Outcome o = guarded([&] {
      hot = hotta_check(dec);
      have_hotta = true;
      Outcome r = verdict_only(hot.ok() ? "PASS" : "FAIL");
      r.artifacts = {{"rank", hot.rank},
                     {"injective", hot.injective},
                     {"stable_J", hot.stable_J},
                     {"stable_E", hot.stable_E},
                     {"e_is_minus_J", hot.e_is_minus_J},
                     {"coxeter_J", hot.coxeter_J},
                     {"coxeter_E", hot.coxeter_E},
                     {"chi_J", character_json(hot.chi_J)},
                     {"chi_E", character_json(hot.chi_E)},
                     {"character_J", hot.outcome_J},
                     {"character_E", hot.outcome_E}};
      if (!hot.ok()) r.witness = hot.failures.front();
      return r;
    });
    if (o.verdict != "PASS") upstream = "hotta: " + o.verdict + " (" + o.witness + ")";
    if (want("hotta")) out.by_check["hotta"] = o;
  }
  auto blocked = [&](const char* k) {
    std::string v = upstream.find("INCOMPLETE") != std::string::npos ? "INCOMPLETE" : "FAIL";
    out.by_check[k] = Outcome{v, json::object(), "blocked by " + upstream};
  };
  if (want("hotta") && !out.by_check.count("hotta")) blocked("hotta");
  if (want("conjecture")) {
    if (!have_hotta || !upstream.empty()) {
      blocked("conjecture");
    } else {
      out.by_check["conjecture"] = guarded([&] {
        ConjectureReport cr = conjecture_check(dec, hot, *kl);
        Outcome r = verdict_only(to_string(cr.verdict));
        r.artifacts["model"] = cr.model;
        r.artifacts["E"] = matrices_json(cr.E);
        r.artifacts["model_T"] = matrices_json(cr.model_T);
        json elems = json::array();
        for (const auto& w : cr.model_elements) elems.push_back(w);
        r.artifacts["model_elements"] = elems;
        if (cr.match) {
          json scale = json::array();
          for (const auto& s : cr.match->scale) scale.push_back(s.get_str());
          r.artifacts["permutation"] = cr.match->perm;
          r.artifacts["scalars"] = scale;
        }
        r.artifacts["label_permutation"] = cr.label_perm;
        r.artifacts["labels_agree"] = cr.labels_agree;
        r.artifacts["polytabloid_basis"] = cr.specht_diagnostic;
        r.artifacts["notes"] = cr.notes;
        if (cr.verdict == Verdict::Fail || cr.verdict == Verdict::Incomplete)
          r.witness = cr.notes.empty() ? "no basis match" : cr.notes.front();
        return r;
      });
    }
  }
  if (want("lattice")) {
    out.by_check["lattice"] = guarded([&] {
      LatticeReport lr = mv_type_check(l, kLatticeSamples, split_seed(c.seed, stream + 0x10000));
      Outcome r = verdict_only(lr.ok() ? "PASS" : "FAIL");
      r.artifacts = {{"samples", lr.samples}, {"boundary_samples", lr.boundary_samples}, {"failures", lr.failures}};
      if (!lr.ok()) r.witness = lr.witnesses.front();
      return r;
    });
  }
  return out;
}

}  // namespace detail

struct RunResult {
  nlohmann::json report;  // deterministic given config and seed; timings live under "timings"
  int exit_code = 0;
};

inline bool is_passing(const std::string& v) { return v == "PASS" || v == "PASS-PROJECTIVE"; }

// Exit codes: 0 all pass, 1 any FAIL, 3 budget exhausted (no FAIL). Config errors (2) are
// raised as ConfigError before any work starts.
inline RunResult run(RunConfig c) {
  using nlohmann::json;
  validate(c);
  std::map<std::string, detail::Outcome> global;
  auto want = [&](const char* k) { return c.checks.count(k) > 0; };
  if (want("convolution")) global["convolution"] = detail::guarded([&] { return detail::run_convolution(c.d); });
  if (want("relations"))
    global["relations"] = detail::guarded([&] { return detail::run_relations(c.d, c.lambdas); });
  if (want("schurweyl-match"))
    global["schurweyl-match"] = detail::guarded([&] { return detail::run_schurweyl_match(c.d); });

  std::unique_ptr<KLData> kl;
  if (want("conjecture")) kl = std::make_unique<KLData>(c.d);
  std::vector<detail::LambdaResults> per(c.lambdas.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < c.lambdas.size();) per[i] = detail::run_lambda(c.lambdas[i], c, kl.get());
  };
  int nthreads = std::min<int>(c.jobs, static_cast<int>(c.lambdas.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json report;
  report["schema"] = kReportSchema;
  report["version"] = kVersion;
  json lam = json::array();
  for (const auto& l : c.lambdas) lam.push_back(l.str());
  report["config"] = {{"d", c.d},
                      {"lambdas", lam},
                      {"checks", c.checks},
                      {"seed", c.seed},
                      {"groebner_pair_cap", c.pair_cap}};
  report["conventions"] = {{"positive_roots", "e_i - e_j for i < j, shifted by +h"},
                           {"chevalley_signs", to_string(SignConvention::Split)},
                           {"j_basis_character", "lambda"},
                           {"e_basis_character", "transpose of lambda"},
                           {"conjecture_model", "Kazhdan-Lusztig left-cell basis"}};
  json checks = json::object(), timings = json::object();
  bool fail = false, incomplete = false;
  auto tally = [&](const detail::Outcome& o) {
    fail |= o.verdict == "FAIL";
    incomplete |= o.verdict == "INCOMPLETE";
  };
  for (const auto& [k, o] : global) {
    checks[k] = detail::outcome_json(o);
    timings[k] = o.seconds;
    tally(o);
  }
  for (std::size_t i = 0; i < c.lambdas.size(); ++i)
    for (const auto& [k, o] : per[i].by_check) {
      checks[k]["per_lambda"][c.lambdas[i].str()] = detail::outcome_json(o);
      timings[k + "/" + c.lambdas[i].str()] = o.seconds;
      tally(o);
    }
  for (auto& [k, v] : checks.items()) {
    if (!v.contains("per_lambda")) continue;
    std::string agg = "PASS";
    for (auto& [l, o] : v["per_lambda"].items()) {
      std::string s = o["verdict"];
      if (s == "FAIL") agg = "FAIL";
      else if (s == "INCOMPLETE" && agg != "FAIL") agg = "INCOMPLETE";
      else if (s == "PASS-PROJECTIVE" && agg == "PASS") agg = "PASS-PROJECTIVE";
    }
    v["verdict"] = agg;
  }
  report["checks"] = checks;
  RunResult r;
  r.exit_code = fail ? 1 : incomplete ? 3 : 0;
  report["status"] = fail ? "FAIL" : incomplete ? "INCOMPLETE" : "PASS";
  report["exit_code"] = r.exit_code;
  report["timings"] = timings;
  r.report = std::move(report);
  return r;
}

}  // namespace weylmv
