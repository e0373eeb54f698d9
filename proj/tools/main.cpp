#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "checks.hpp"

#ifndef COBLE_FIXTURE_DIR
#define COBLE_FIXTURE_DIR "fixtures"
#endif

int main(int argc, char** argv) {
  using namespace coble::tools;
  CLI::App app{"Coble cubic / sextic duality checks over finite fields"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  RunConfig cfg;
  cfg.fixture_dir = COBLE_FIXTURE_DIR;
  app.add_option("--prime", cfg.prime, "prime p (default depends on the check)");
  app.add_option("--ext", cfg.ext, "extension degree for extension-field stages")->check(CLI::Range(1, 4));
  app.add_option("--alpha", cfg.alpha, "fixture file or a0,a1,a2,a3,a4 (default: shipped alpha_star.json)");
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--samples", cfg.samples, "sample count override");
  app.add_option("--max-degree", cfg.max_degree, "largest dual degree tried")->check(CLI::Range(1, 8));
  app.add_flag("--heavy", cfg.heavy, "allow scans over ~1e9 field evaluations");
  app.add_option("--cache-dir", cfg.cache_dir, "dual cache directory (env COBLE_CACHE)");
  app.add_option("--out", cfg.out, "also write the JSON report here");
  app.add_option("--fixture-dir", cfg.fixture_dir, "directory with the shipped fixtures");
  for (auto& name : check_names()) app.add_subcommand(name);
  CLI11_PARSE(app, argc, argv);

  auto name = app.get_subcommands().front()->get_name();
  Report r;
  try {
    r = run_check(name, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto text = r.to_json().dump(2) + "\n";
  std::cout << text;
  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    out << text;
  }
  return r.pass() ? 0 : 1;
}
