#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "weylmv/harness/run.hpp"

namespace {

constexpr int kExitConfig = 2;

struct Subcommand {
  const char* name;
  const char* help;
  std::vector<std::string> checks;
};

const std::vector<Subcommand>& subcommands() {
  static const std::vector<Subcommand> v{
      {"verify-convolution", "two-step convolution and weight-zero operators on the full flag block",
       {"convolution"}},
      {"verify-relations", "gl_n relations and the fixed-point vs. Schur-Weyl match", {"relations", "schurweyl-match"}},
      {"orbital", "orbital variety decomposition and Joseph polynomials", {"orbital"}},
      {"check-hotta", "Weyl action on the span of Joseph polynomials", {"hotta"}},
      {"check-conjecture", "e-basis action versus weight-zero operators", {"conjecture"}},
      {"lattice-check", "lattice type of embedded nilpotents", {"lattice"}},
      {"verify-all", "every check", weylmv::all_checks()},
  };
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification harness for orbital varieties and weight-zero Weyl actions"};
  app.require_subcommand(1);
  weylmv::RunConfig cfg;
  std::vector<std::string> lambdas, checks;
  std::string out;
  for (const auto& sc : subcommands()) {
    CLI::App* sub = app.add_subcommand(sc.name, sc.help);
    sub->add_option("--d", cfg.d, "rank d (1..5)")->capture_default_str();
    sub->add_option("--lambda", lambdas, "partition of d, e.g. 2,1 (repeatable; default all)");
    sub->add_option("--checks", checks, "override the check set")->delimiter(',');
    sub->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
    sub->add_option("--groebner-pair-cap", cfg.pair_cap, "S-pair budget per Groebner basis")->capture_default_str();
    sub->add_option("--out", out, "write the JSON report here (default stdout)");
    sub->add_option("--jobs", cfg.jobs, "worker threads over partitions")->capture_default_str();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  weylmv::RunResult res;
  try {
    for (const auto& sc : subcommands())
      if (app.got_subcommand(sc.name)) cfg.checks = {sc.checks.begin(), sc.checks.end()};
    if (!checks.empty()) cfg.checks = {checks.begin(), checks.end()};
    for (const auto& l : lambdas) cfg.lambdas.push_back(weylmv::parse_partition(l));
    res = weylmv::run(cfg);
  } catch (const weylmv::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const weylmv::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  std::string text = res.report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "config error: cannot write " << out << "\n";
      return kExitConfig;
    }
    f << text;
  }
  std::cerr << "status " << res.report["status"].get<std::string>() << "\n";
  return res.exit_code;
}
