#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <span>

namespace qopt {

/// Scalar objective over a real parameter vector.
using Objective = std::function<double(std::span<const double>)>;

/// Wraps an objective and counts every call. Thread-safe counting.
class CountingObjective {
 public:
  explicit CountingObjective(Objective inner) : inner_(std::move(inner)) {}

  double operator()(std::span<const double> x) const {
    count_.fetch_add(1, std::memory_order_relaxed);
    return inner_(x);
  }

  std::size_t count() const noexcept { return count_.load(std::memory_order_relaxed); }

 private:
  Objective inner_;
  mutable std::atomic<std::size_t> count_{0};
};

}  // namespace qopt
