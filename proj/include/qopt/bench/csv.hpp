#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace qopt::bench {

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_double(double v);

/// Quotes a field when it contains a comma, quote or line break.
std::string csv_escape(std::string_view field);

class CsvWriter {
 public:
  /// Throws Error if the file cannot be opened.
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

  void row(const std::vector<std::string>& fields);

 private:
  std::ofstream out_;
  std::size_t columns_;
};

/// Splits one CSV document into rows of fields. Handles quoted fields.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace qopt::bench
