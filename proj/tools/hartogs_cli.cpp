// Scenario-driven batch runner for the Hartogs companion toolkit.
//
//   hartogs run        --config s.json --out outdir [--tol T] [--nodes N] [--seed S]
//   hartogs verify-all --config suitedir --out outdir [--parallel] ...
//   hartogs grid       --config s.json --out grid.csv ...
//   hartogs catalog-list
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 config error,
// 3 numeric failure (non-convergence / failed synthesis).

#include <CLI11.hpp>

#include <future>
#include <iostream>

#include "hartogs/oracles.hpp"
#include "hartogs/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hartogs companion toolkit"};
  app.require_subcommand(1);

  std::string config, out = "out";
  double tol = 0.0;
  std::size_t nodes = 0;
  long long seed = -1;
  bool parallel = false;

  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    if (needs_config) cmd->add_option("--config", config, "scenario file or suite directory")->required();
    cmd->add_option("--out", out, "output directory or file");
    cmd->add_option("--tol", tol, "override quadrature tolerance");
    cmd->add_option("--nodes", nodes, "override per-curve node cap");
    cmd->add_option("--seed", seed, "override the scenario seed");
  };

  CLI::App* run = app.add_subcommand("run", "run one scenario");
  add_common(run, true);

  CLI::App* all = app.add_subcommand("verify-all", "run every scenario in a directory");
  add_common(all, true);
  all->add_flag("--parallel", parallel, "run scenarios concurrently");

  CLI::App* grid = app.add_subcommand("grid", "dump companion values over a 2d slice grid");
  add_common(grid, true);

  CLI::App* list = app.add_subcommand("catalog-list", "list function catalog ids");
  (void)list;

  CLI11_PARSE(app, argc, argv);

  hartogs::scenario::RunOverrides overrides;
  if (tol > 0.0) overrides.quad_tol = tol;
  if (nodes > 0) overrides.node_cap = nodes;
  if (seed >= 0) overrides.seed = static_cast<std::uint64_t>(seed);

  try {
    if (app.got_subcommand("catalog-list")) {
      for (const auto& id : hartogs::catalog_ids()) std::cout << id << "\n";
      return 0;
    }
    if (app.got_subcommand("run")) {
      const int code = hartogs::scenario::run_scenario(config, out, overrides);
      std::cout << "exit " << code << "\n";
      return code;
    }
    if (app.got_subcommand("grid")) {
      return hartogs::scenario::dump_grid(config, out, overrides);
    }
    if (app.got_subcommand("verify-all")) {
      if (!parallel) {
        const int code = hartogs::scenario::verify_all(config, out, overrides);
        std::cout << "exit " << code << "\n";
        return code;
      }
      // parallel mode: one async task per scenario file, summary afterwards
      namespace fs = std::filesystem;
      std::vector<fs::path> configs;
      if (fs::is_directory(config))
        for (const auto& e : fs::directory_iterator(config))
          if (e.path().extension() == ".json") configs.push_back(e.path());
      if (configs.empty()) return hartogs::scenario::kExitConfigError;
      std::sort(configs.begin(), configs.end());
      std::vector<std::future<int>> futures;
      futures.reserve(configs.size());
      for (const auto& p : configs)
        futures.push_back(std::async(std::launch::async, [&, p] {
          return hartogs::scenario::run_scenario(p, out, overrides);
        }));
      for (auto& f : futures) f.wait();
      // reuse the serial path for the summary file and the combined status
      const int code = hartogs::scenario::verify_all(config, out, overrides);
      std::cout << "exit " << code << "\n";
      return code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hartogs::scenario::kExitConfigError;
  }
  return hartogs::scenario::kExitConfigError;
}
