#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qopt/de/differential_evolution.hpp"
#include "qopt/error.hpp"

namespace qopt::bench {

/// Bad command line or configuration; the CLI exits with status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Flat key=value run configuration. Blank lines and lines starting with '#'
/// are ignored; unknown or repeated keys are errors.
struct RunConfig {
  std::filesystem::path molecule;  // FCIDUMP file, or a directory for scan
  std::string function;            // analytic test function for optimize
  std::size_t dimension = 2;
  std::vector<std::string> optimizers{"bfgs"};
  de::Strategy strategy = de::Strategy::rand1;
  de::Crossover crossover = de::Crossover::binomial;
  de::BoundaryHandling boundary = de::BoundaryHandling::clamp;
  std::optional<std::size_t> np;
  double f = 0.5;
  double cr = 0.9;
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::vector<double> weights{0.5, 0.5};
  double macro_tol = 1e-4;
  std::size_t max_macro_iters = 20;
  std::string mode = "saoo";  // savqe, saoo, or both (scan only)
  std::optional<std::size_t> max_evals;  // DE evaluation budget per run
  std::size_t max_iters = 200;           // BFGS / GD iteration cap
  double learning_rate = 0.1;            // GD step size
  int n_frozen = 0;
  bool warm_start = true;

  static const std::vector<std::string>& keys();
};

/// Relative molecule paths are resolved against `base_dir`. Throws UsageError.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// Comma-separated integers; "a-b" expands to an inclusive range.
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

/// Throws UsageError unless `mode` is savqe, saoo, or (when allowed) both.
void check_mode(std::string_view mode, bool allow_both);

}  // namespace qopt::bench
