#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "qopt/bench/config.hpp"

namespace qopt::bench {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find(',', pos), s.size());
    const auto item = trim(s.substr(pos, end - pos));
    if (!item.empty()) out.emplace_back(item);
    pos = end + 1;
  }
  return out;
}

template <class T>
T parse_number(std::string_view key, std::string_view v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw UsageError("config: '" + std::string(key) + "' expects a number, got '" + std::string(v) + "'");
  }
  return out;
}

std::size_t parse_count(std::string_view key, std::string_view v) {
  if (!v.empty() && v.front() == '-') throw UsageError("config: '" + std::string(key) + "' must be nonnegative");
  return parse_number<std::size_t>(key, v);
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw UsageError("config: '" + std::string(key) + "' expects true or false");
}

}  // namespace

const std::vector<std::string>& RunConfig::keys() {
  static const std::vector<std::string> k = {
      "molecule", "function", "dimension", "optimizer", "strategy", "crossover", "boundary",
      "np", "f", "cr", "seeds", "weights", "macro_tol", "max_macro_iters", "mode",
      "max_evals", "max_iters", "learning_rate", "n_frozen", "warm_start"};
  return k;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split_list(text)) {
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(parse_number<std::uint64_t>("seeds", item));
      continue;
    }
    const auto lo = parse_number<std::uint64_t>("seeds", trim(std::string_view(item).substr(0, dash)));
    const auto hi = parse_number<std::uint64_t>("seeds", trim(std::string_view(item).substr(dash + 1)));
    if (hi < lo || hi - lo > 100000) throw UsageError("seeds: bad range '" + item + "'");
    for (auto s = lo; s <= hi; ++s) out.push_back(s);
  }
  if (out.empty()) throw UsageError("seeds: empty list");
  return out;
}

void check_mode(std::string_view mode, bool allow_both) {
  if (mode == "savqe" || mode == "saoo" || (allow_both && mode == "both")) return;
  throw UsageError("mode must be one of savqe, saoo" + std::string(allow_both ? ", both" : "") +
                   "; got '" + std::string(mode) + "'");
}

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  RunConfig c;
  std::map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view v = trim(line.substr(eq + 1));
    const auto& known = RunConfig::keys();
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw UsageError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (const auto [it, fresh] = seen.emplace(key, line_no); !fresh) {
      throw UsageError("config line " + std::to_string(line_no) + ": key '" + key + "' repeated");
    }

    if (key == "molecule") {
      c.molecule = std::filesystem::path(std::string(v));
      if (c.molecule.is_relative() && !base_dir.empty()) c.molecule = base_dir / c.molecule;
    } else if (key == "function") {
      c.function = v;
    } else if (key == "dimension") {
      c.dimension = parse_count(key, v);
    } else if (key == "optimizer") {
      c.optimizers = split_list(v);
      if (c.optimizers.empty()) throw UsageError("config: 'optimizer' is empty");
    } else if (key == "strategy") {
      const auto s = de::parse_strategy(v);
      if (!s) throw UsageError("config: unknown strategy '" + std::string(v) + "'");
      c.strategy = *s;
    } else if (key == "crossover") {
      const auto s = de::parse_crossover(v);
      if (!s) throw UsageError("config: unknown crossover '" + std::string(v) + "'");
      c.crossover = *s;
    } else if (key == "boundary") {
      const auto s = de::parse_boundary(v);
      if (!s) throw UsageError("config: unknown boundary handling '" + std::string(v) + "'");
      c.boundary = *s;
    } else if (key == "np") {
      c.np = parse_count(key, v);
    } else if (key == "f") {
      c.f = parse_number<double>(key, v);
    } else if (key == "cr") {
      c.cr = parse_number<double>(key, v);
    } else if (key == "seeds") {
      c.seeds = parse_seed_list(v);
    } else if (key == "weights") {
      c.weights.clear();
      for (const auto& w : split_list(v)) c.weights.push_back(parse_number<double>(key, w));
    } else if (key == "macro_tol") {
      c.macro_tol = parse_number<double>(key, v);
    } else if (key == "max_macro_iters") {
      c.max_macro_iters = parse_count(key, v);
    } else if (key == "mode") {
      check_mode(v, true);
      c.mode = v;
    } else if (key == "max_evals") {
      c.max_evals = parse_count(key, v);
    } else if (key == "max_iters") {
      c.max_iters = parse_count(key, v);
    } else if (key == "learning_rate") {
      c.learning_rate = parse_number<double>(key, v);
    } else if (key == "n_frozen") {
      c.n_frozen = parse_number<int>(key, v);
    } else if (key == "warm_start") {
      c.warm_start = parse_bool(key, v);
    }
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

}  // namespace qopt::bench
