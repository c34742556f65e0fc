#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qopt/bench/config.hpp"
#include "qopt/de/differential_evolution.hpp"
#include "qopt/vqe/sa_vqe.hpp"

namespace qopt::bench {

struct MethodSpec {
  enum class Family { bfgs, gd, de } family = Family::bfgs;
  de::Strategy strategy = de::Strategy::rand1;
  de::Crossover crossover = de::Crossover::binomial;

  std::string label() const;
};

/// "bfgs", "gd", "de_<strategy>_bin" or "de_<strategy>_exp".
std::optional<MethodSpec> parse_method(std::string_view label);

/// bfgs, gd and the eight binomial DE variants.
std::vector<std::string> all_method_labels();

/// Resolves config optimizer names: "all" expands to all_method_labels(), "de"
/// to the configured strategy and crossover. Throws UsageError naming the
/// valid set on an unknown name.
std::vector<MethodSpec> resolve_methods(const std::vector<std::string>& names, const RunConfig& cfg);

/// Stopping rule used for DE inside SA-VQE: a generation cap plus a stall
/// test on the best value.
de::TerminationCriteria default_vqe_de_termination();

de::DEConfig make_de_config(const MethodSpec& m, const RunConfig& cfg, std::size_t dimension,
                            std::uint64_t seed, const de::TerminationCriteria& termination);

vqe::InnerOptimizer make_inner_optimizer(const MethodSpec& m, const RunConfig& cfg,
                                         std::size_t dimension, std::uint64_t seed);

}  // namespace qopt::bench
