#include <algorithm>

#include "qopt/bench/methods.hpp"

namespace qopt::bench {

std::string MethodSpec::label() const {
  switch (family) {
    case Family::bfgs: return "bfgs";
    case Family::gd: return "gd";
    case Family::de: break;
  }
  return "de_" + std::string(de::to_string(strategy)) +
         (crossover == de::Crossover::binomial ? "_bin" : "_exp");
}

std::optional<MethodSpec> parse_method(std::string_view label) {
  if (label == "bfgs") return MethodSpec{MethodSpec::Family::bfgs};
  if (label == "gd") return MethodSpec{MethodSpec::Family::gd};
  if (!label.starts_with("de_") || label.size() < 8) return std::nullopt;
  const std::string_view tail = label.substr(label.size() - 4);
  MethodSpec m{MethodSpec::Family::de};
  if (tail == "_bin") {
    m.crossover = de::Crossover::binomial;
  } else if (tail == "_exp") {
    m.crossover = de::Crossover::exponential;
  } else {
    return std::nullopt;
  }
  const auto s = de::parse_strategy(label.substr(3, label.size() - 7));
  if (!s) return std::nullopt;
  m.strategy = *s;
  return m;
}

std::vector<std::string> all_method_labels() {
  std::vector<std::string> out{"bfgs", "gd"};
  for (const auto s : de::kAllStrategies) {
    out.push_back(MethodSpec{MethodSpec::Family::de, s, de::Crossover::binomial}.label());
  }
  return out;
}

std::vector<MethodSpec> resolve_methods(const std::vector<std::string>& names, const RunConfig& cfg) {
  std::vector<MethodSpec> out;
  auto push = [&out](const MethodSpec& m) {
    const auto l = m.label();
    if (std::none_of(out.begin(), out.end(), [&](const MethodSpec& o) { return o.label() == l; })) {
      out.push_back(m);
    }
  };
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& l : all_method_labels()) push(*parse_method(l));
    } else if (n == "de") {
      push({MethodSpec::Family::de, cfg.strategy, cfg.crossover});
    } else if (const auto m = parse_method(n)) {
      push(*m);
    } else if (n == "cobyla" || n == "slsqp") {
      throw UsageError("optimizer '" + n + "' is not available in this build; use bfgs, gd or a DE variant");
    } else {
      std::string valid = "all, de";
      for (const auto& l : all_method_labels()) valid += ", " + l;
      throw UsageError("unknown optimizer '" + n + "'; valid: " + valid +
                       " (DE labels also accept an _exp suffix)");
    }
  }
  return out;
}

de::TerminationCriteria default_vqe_de_termination() {
  de::TerminationCriteria t;
  t.max_generations = 200;
  t.abs_tol = de::AbsoluteTolerance{1e-6, 10};
  return t;
}

de::DEConfig make_de_config(const MethodSpec& m, const RunConfig& cfg, std::size_t dimension,
                            std::uint64_t seed, const de::TerminationCriteria& termination) {
  de::DEConfig c = de::DEConfig::defaults(dimension);
  c.strategy = m.strategy;
  c.crossover = m.crossover;
  c.boundary = cfg.boundary;
  if (cfg.np) c.np = *cfg.np;
  c.np = std::max(c.np, de::min_population(m.strategy));
  c.f = cfg.f;
  c.cr = cfg.cr;
  c.seed = seed;
  c.termination = termination;
  if (cfg.max_evals) c.termination.max_evals = *cfg.max_evals;
  return c;
}

vqe::InnerOptimizer make_inner_optimizer(const MethodSpec& m, const RunConfig& cfg,
                                         std::size_t dimension, std::uint64_t seed) {
  local::LocalOptConfig lc;
  lc.max_iters = cfg.max_iters;
  lc.gd_learning_rate = cfg.learning_rate;
  switch (m.family) {
    case MethodSpec::Family::bfgs: return vqe::Bfgs{lc};
    case MethodSpec::Family::gd: return vqe::GradientDescent{lc};
    case MethodSpec::Family::de: break;
  }
  return vqe::DifferentialEvolution{make_de_config(m, cfg, dimension, seed, default_vqe_de_termination())};
}

}  // namespace qopt::bench
