#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qopt/bench/config.hpp"
#include "qopt/bench/methods.hpp"
#include "qopt/trace.hpp"

namespace qopt::bench {

struct CommandOptions {
  std::filesystem::path config;
  std::filesystem::path out;
  std::optional<std::vector<std::uint64_t>> seeds;
  std::optional<std::string> mode;
  std::size_t jobs = 1;
  /// Overrides the config's molecule (a file, or a directory for scan).
  std::optional<std::filesystem::path> input;
};

/// Outcome of one (method, seed) molecular run.
struct RunOutcome {
  std::string method;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string status;  // macro-loop status, or "failed"
  std::string error;
  std::size_t evaluations = 0;
  std::size_t macro_iterations = 0;
  double e_sa = 0.0;
  double e0 = 0.0;  // by initial-state lineage
  double e1 = 0.0;
  OptimizationTrace trace;
};

struct SummaryRow {
  std::string method;
  std::size_t evals_min = 0;
  std::size_t evals_max = 0;
  double evals_mean = 0.0;
  double e_min = 0.0;
  double e_max = 0.0;
  double e_mean = 0.0;
};

/// Statistics over the successful runs of each method, in first-seen order.
/// Methods whose runs all failed get no row.
std::vector<SummaryRow> summarize(const std::vector<RunOutcome>& runs);

/// One SA-OO-VQE run ("saoo") or a single fixed-orbital SA-VQE stage
/// ("savqe") on the config's molecule. Failures are captured in the outcome.
RunOutcome run_molecule(const RunConfig& cfg, const MethodSpec& method, std::uint64_t seed,
                        const std::string& mode);

struct BatchResult {
  std::vector<RunOutcome> runs;
  std::vector<SummaryRow> summary;
};

/// Every (method, seed) pair on up to `jobs` threads. When `out_dir` is
/// nonempty writes trace_<method>_<seed>.csv, runs.csv, summary.csv,
/// failures.csv and manifest.csv there.
BatchResult run_batch(const RunConfig& cfg, const std::string& mode, std::size_t jobs,
                      const std::filesystem::path& out_dir);

void write_trace_csv(const std::filesystem::path& path, const OptimizationTrace& trace);

/// Subcommands. Throw UsageError for bad input (exit 2) and Error for
/// runtime failures (exit 1). `log` receives a short human summary.
void cmd_optimize(const CommandOptions& opts, std::ostream& log);
void cmd_vqe(const CommandOptions& opts, std::ostream& log);
void cmd_saoo(const CommandOptions& opts, std::ostream& log);
void cmd_compare(const CommandOptions& opts, std::ostream& log);
void cmd_scan(const CommandOptions& opts, std::ostream& log);

}  // namespace qopt::bench
