#include <iostream>

#include "CLI11.hpp"
#include "qopt/bench/commands.hpp"

using namespace qopt::bench;

int main(int argc, char** argv) {
  CLI::App app{"qopt: differential evolution and state-averaged orbital-optimized VQE benchmarks"};
  app.require_subcommand(1);

  CommandOptions opts;
  std::string seeds;
  std::string mode;
  std::string input;

  auto add_common = [&](CLI::App* sub, bool with_mode) {
    sub->add_option("--config", opts.config, "key=value run configuration")->required();
    sub->add_option("--out", opts.out, "output directory");
    sub->add_option("--seeds", seeds, "seed list, e.g. 0-9 or 1,3,5");
    sub->add_option("--jobs", opts.jobs, "concurrent runs")->check(CLI::PositiveNumber);
    if (with_mode) sub->add_option("--mode", mode, "savqe, saoo, or both (scan)");
  };

  auto* optimize = app.add_subcommand("optimize", "run optimizers on an analytic test function");
  add_common(optimize, false);
  auto* vqe = app.add_subcommand("vqe", "fixed-orbital SA-VQE runs");
  add_common(vqe, false);
  vqe->add_option("molecule", input, "FCIDUMP file (overrides the config)");
  auto* saoo = app.add_subcommand("saoo", "SA-OO-VQE runs");
  add_common(saoo, false);
  saoo->add_option("molecule", input, "FCIDUMP file (overrides the config)");
  auto* compare = app.add_subcommand("compare", "multi-seed optimizer comparison with traces");
  add_common(compare, true);
  compare->add_option("molecule", input, "FCIDUMP file (overrides the config)");
  auto* scan = app.add_subcommand("scan", "energies over a directory of FCIDUMP files");
  add_common(scan, true);
  scan->add_option("directory", input, "directory of FCIDUMP files (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!seeds.empty()) opts.seeds = parse_seed_list(seeds);
    if (!mode.empty()) opts.mode = mode;
    if (!input.empty()) opts.input = input;
    if (*optimize) cmd_optimize(opts, std::cout);
    if (*vqe) cmd_vqe(opts, std::cout);
    if (*saoo) cmd_saoo(opts, std::cout);
    if (*compare) cmd_compare(opts, std::cout);
    if (*scan) cmd_scan(opts, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
