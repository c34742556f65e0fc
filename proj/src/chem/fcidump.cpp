#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <locale>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "qopt/chem/fcidump.hpp"
#include "qopt/error.hpp"

namespace qopt::chem {

namespace {

std::optional<long> header_int(const std::string& header, const char* key) {
  const std::regex re(std::string("\\b") + key + "\\s*=\\s*(-?[0-9]+)", std::regex::icase);
  std::smatch m;
  if (!std::regex_search(header, m, re)) return std::nullopt;
  return std::stol(m[1].str());
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_value(std::string_view token, std::size_t line_no) {
  std::string t(token);
  std::replace(t.begin(), t.end(), 'D', 'E');
  std::replace(t.begin(), t.end(), 'd', 'e');
  const char* first = t.data();
  if (*first == '+') ++first;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError("bad integral value '" + std::string(token) + "'", line_no);
  }
  return v;
}

long parse_index(std::string_view token, std::size_t line_no) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("bad orbital index '" + std::string(token) + "'", line_no);
  }
  return v;
}

}  // namespace

MolecularIntegrals parse_fcidump(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }

  std::string header;
  std::size_t body_start = 0;
  bool closed = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view l = lines[i];
    std::string upper(l);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    const auto trimmed = split_ws(upper);
    if (upper.find("&END") != std::string::npos || (trimmed.size() == 1 && trimmed[0] == "/")) {
      header.append(l.substr(0, upper.find("&END"))).push_back(' ');
      body_start = i + 1;
      closed = true;
      break;
    }
    header.append(l).push_back(' ');
  }
  if (!closed) throw HeaderError("FCIDUMP header is not terminated by &END or /");

  const auto norb = header_int(header, "NORB");
  const auto nelec = header_int(header, "NELEC");
  if (!norb) throw HeaderError("FCIDUMP header lacks NORB");
  if (!nelec) throw HeaderError("FCIDUMP header lacks NELEC");
  if (*norb <= 0 || *nelec < 0) throw HeaderError("FCIDUMP header has nonpositive NORB or negative NELEC");

  auto ints = MolecularIntegrals::zeros(static_cast<std::size_t>(*norb), static_cast<std::size_t>(*nelec));
  ints.ms2 = static_cast<int>(header_int(header, "MS2").value_or(0));

  for (std::size_t i = body_start; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto tok = split_ws(lines[i]);
    if (tok.empty()) continue;
    if (tok.size() != 5) throw ParseError("expected 'value i j k l'", line_no);
    const double value = parse_value(tok[0], line_no);
    std::array<long, 4> idx{};
    for (int k = 0; k < 4; ++k) {
      idx[k] = parse_index(tok[k + 1], line_no);
      if (idx[k] < 0 || idx[k] > *norb) {
        throw IndexError("line " + std::to_string(line_no) + ": orbital index " +
                         std::to_string(idx[k]) + " outside [0, " + std::to_string(*norb) + "]");
      }
    }
    const auto [a, b, c, d] = idx;
    if (a > 0 && b > 0 && c > 0 && d > 0) {
      ints.set_chem(a - 1, b - 1, c - 1, d - 1, value);
    } else if (a > 0 && b > 0 && c == 0 && d == 0) {
      ints.h(a - 1, b - 1) = value;
      ints.h(b - 1, a - 1) = value;
    } else if (a == 0 && b == 0 && c == 0 && d == 0) {
      ints.core_energy = value;
    } else if (a > 0 && b == 0 && c == 0 && d == 0) {
      // orbital energy, not needed
    } else {
      throw ParseError("unsupported index pattern", line_no);
    }
  }
  return ints;
}

MolecularIntegrals read_fcidump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open FCIDUMP file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fcidump(ss.str());
}

std::string write_fcidump(const MolecularIntegrals& ints, double threshold) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(17);
  const std::size_t n = ints.n_orb;
  out << " &FCI NORB=" << n << ",NELEC=" << ints.n_elec << ",MS2=" << ints.ms2 << ",\n  ORBSYM=";
  for (std::size_t p = 0; p < n; ++p) out << "1,";
  out << "\n  ISYM=1,\n &END\n";
  // Unique chemist quadruples: a >= b, c >= d, ab >= cd as pair indices.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b <= a; ++b)
      for (std::size_t c = 0; c <= a; ++c)
        for (std::size_t d = 0; d <= c; ++d) {
          if (a * (a + 1) / 2 + b < c * (c + 1) / 2 + d) continue;
          const double v = ints.chem(a, b, c, d);
          if (std::abs(v) < threshold) continue;
          out << ' ' << v << ' ' << a + 1 << ' ' << b + 1 << ' ' << c + 1 << ' ' << d + 1 << '\n';
        }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q) {
      const double v = ints.h(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
      if (std::abs(v) < threshold) continue;
      out << ' ' << v << ' ' << p + 1 << ' ' << q + 1 << " 0 0\n";
    }
  out << ' ' << ints.core_energy << " 0 0 0 0\n";
  return out.str();
}

}  // namespace qopt::chem
