#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qopt::bench {

double sphere(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double rastrigin(std::span<const double> x);

struct TestFunction {
  std::string name;
  double (*fn)(std::span<const double>);
  double lower;
  double upper;
};

std::optional<TestFunction> find_test_function(std::string_view name);
std::vector<std::string> test_function_names();

}  // namespace qopt::bench
