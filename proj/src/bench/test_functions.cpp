#include <cmath>
#include <numbers>

#include "qopt/bench/test_functions.hpp"

namespace qopt::bench {

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double rastrigin(std::span<const double> x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
  return s;
}

namespace {

const TestFunction kFunctions[] = {
    {"sphere", &sphere, -5.0, 5.0},
    {"rosenbrock", &rosenbrock, -5.0, 10.0},
    {"rastrigin", &rastrigin, -5.12, 5.12},
};

}  // namespace

std::optional<TestFunction> find_test_function(std::string_view name) {
  for (const auto& f : kFunctions) {
    if (f.name == name) return f;
  }
  return std::nullopt;
}

std::vector<std::string> test_function_names() {
  std::vector<std::string> out;
  for (const auto& f : kFunctions) out.push_back(f.name);
  return out;
}

}  // namespace qopt::bench
