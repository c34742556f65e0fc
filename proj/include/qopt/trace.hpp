#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qopt/error.hpp"

namespace qopt {

/// Granularity of a trace event. Filtering a trace on scope yields the
/// three convergence views: macro index vs energy, cumulative evaluations per
/// macro iteration, and cumulative evaluations per optimizer step.
enum class TraceScope { optimizer_step, sa_oo_vqe_iteration };

constexpr std::string_view to_string(TraceScope scope) noexcept {
  return scope == TraceScope::optimizer_step ? "optimizer_step" : "sa_oo_vqe_iteration";
}

struct TraceEvent {
  std::size_t cumulative_evaluations = 0;
  TraceScope scope = TraceScope::optimizer_step;
  int macro_index = 0;
  double e_sa = 0.0;
  std::vector<double> e_states;
};

/// Ordered, append-only record of optimization progress.
class OptimizationTrace {
 public:
  /// Throws Error if the event breaks evaluation monotonicity or the
  /// consecutive numbering of sa_oo_vqe_iteration events.
  void append(TraceEvent event) {
    if (!events_.empty() && event.cumulative_evaluations < events_.back().cumulative_evaluations) {
      throw Error("trace: cumulative evaluations must be nondecreasing");
    }
    if (event.scope == TraceScope::sa_oo_vqe_iteration) {
      if (last_macro_ >= 0 && event.macro_index != last_macro_ + 1) {
        throw Error("trace: macro iterations must be numbered consecutively");
      }
      last_macro_ = event.macro_index;
    }
    events_.push_back(std::move(event));
  }

  /// Appends every event of `other`, shifting its evaluation counts by `offset`.
  void extend(const OptimizationTrace& other, std::size_t offset = 0) {
    for (TraceEvent e : other.events_) {
      e.cumulative_evaluations += offset;
      append(std::move(e));
    }
  }

  const std::vector<TraceEvent>& events() const noexcept { return events_; }
  bool empty() const noexcept { return events_.empty(); }
  std::size_t size() const noexcept { return events_.size(); }

  std::vector<TraceEvent> filter(TraceScope scope) const {
    std::vector<TraceEvent> out;
    for (const auto& e : events_) {
      if (e.scope == scope) out.push_back(e);
    }
    return out;
  }

  friend bool operator==(const OptimizationTrace& a, const OptimizationTrace& b) {
    if (a.events_.size() != b.events_.size()) return false;
    for (std::size_t i = 0; i < a.events_.size(); ++i) {
      const auto& x = a.events_[i];
      const auto& y = b.events_[i];
      if (x.cumulative_evaluations != y.cumulative_evaluations || x.scope != y.scope ||
          x.macro_index != y.macro_index || x.e_sa != y.e_sa || x.e_states != y.e_states) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<TraceEvent> events_;
  int last_macro_ = -1;
};

/// Raised when an optimizer run is aborted by an objective failure. Carries
/// the progress recorded up to the failure.
class RunAborted : public Error {
 public:
  RunAborted(const std::string& what, OptimizationTrace partial)
      : Error(what), partial_(std::move(partial)) {}
  const OptimizationTrace& partial_trace() const noexcept { return partial_; }

 private:
  OptimizationTrace partial_;
};

}  // namespace qopt
