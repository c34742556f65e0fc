#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "qopt/bench/commands.hpp"
#include "qopt/bench/csv.hpp"
#include "qopt/bench/test_functions.hpp"
#include "qopt/chem/fcidump.hpp"
#include "qopt/vqe/sa_oo_vqe.hpp"

namespace qopt::bench {

namespace fs = std::filesystem;

namespace {

RunConfig load(const CommandOptions& o) {
  if (o.config.empty()) throw UsageError("--config is required");
  RunConfig cfg = load_config(o.config);
  if (o.seeds) cfg.seeds = *o.seeds;
  if (o.mode) {
    check_mode(*o.mode, true);
    cfg.mode = *o.mode;
  }
  if (o.input) cfg.molecule = *o.input;
  if (o.jobs == 0) throw UsageError("--jobs must be at least 1");
  return cfg;
}

void prepare_out_dir(const fs::path& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory " + dir.string() + ": " + ec.message());
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_double(v[i]);
  return s;
}

chem::MolecularIntegrals load_molecule(const RunConfig& cfg) {
  if (cfg.molecule.empty()) throw UsageError("config key 'molecule' is required");
  if (!fs::is_regular_file(cfg.molecule)) {
    throw UsageError("molecule file not found: " + cfg.molecule.string());
  }
  chem::MolecularIntegrals ints = chem::read_fcidump(cfg.molecule);
  return chem::freeze_core(ints, cfg.n_frozen);
}

// Runs fn(0..n-1) on up to `jobs` threads; the first exception is rethrown after the join.
template <class Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  const std::size_t k = std::min(jobs, n);
  if (k <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < k; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<RunOutcome>& runs) {
  std::vector<SummaryRow> out;
  std::map<std::string, std::vector<const RunOutcome*>> groups;
  std::vector<std::string> order;
  for (const auto& r : runs) {
    if (!groups.count(r.method)) order.push_back(r.method);
    auto& g = groups[r.method];
    if (r.ok) g.push_back(&r);
  }
  for (const auto& m : order) {
    const auto& g = groups[m];
    if (g.empty()) continue;
    SummaryRow s;
    s.method = m;
    s.evals_min = s.evals_max = g.front()->evaluations;
    s.e_min = s.e_max = g.front()->e_sa;
    double evals_sum = 0.0;
    double e_sum = 0.0;
    for (const auto* r : g) {
      s.evals_min = std::min(s.evals_min, r->evaluations);
      s.evals_max = std::max(s.evals_max, r->evaluations);
      s.e_min = std::min(s.e_min, r->e_sa);
      s.e_max = std::max(s.e_max, r->e_sa);
      evals_sum += static_cast<double>(r->evaluations);
      e_sum += r->e_sa;
    }
    s.evals_mean = evals_sum / static_cast<double>(g.size());
    s.e_mean = e_sum / static_cast<double>(g.size());
    out.push_back(s);
  }
  return out;
}

RunOutcome run_molecule(const RunConfig& cfg, const MethodSpec& method, std::uint64_t seed,
                        const std::string& mode) {
  RunOutcome r;
  r.method = method.label();
  r.seed = seed;
  try {
    check_mode(mode, false);
    const auto ints = load_molecule(cfg);
    const auto ansatz = vqe::default_ansatz(ints.n_orb, ints.n_elec);
    vqe::EnsembleSpec weights{cfg.weights};
    weights.validate();
    vqe::MacroConfig macro;
    macro.macro_tol = cfg.macro_tol;
    macro.max_macro_iters = mode == "saoo" ? cfg.max_macro_iters : 1;
    macro.warm_start = cfg.warm_start;
    macro.optimize_orbitals = mode == "saoo";
    const auto inner = make_inner_optimizer(method, cfg, ansatz.parameter_count(), seed);
    const auto res = vqe::run_sa_oo_vqe(ints, ansatz, weights, inner, {}, macro);
    r.trace = res.trace;
    r.evaluations = res.evaluations;
    r.macro_iterations = res.macro_trace.size();
    r.status = std::string(vqe::to_string(res.status));
    if (res.status == vqe::MacroStatus::aborted) {
      r.error = res.macro_trace.empty() ? "aborted" : res.macro_trace.back().error;
      return r;
    }
    r.ok = true;
    r.e_sa = res.e_sa;
    r.e0 = res.state_energies.at(0);
    r.e1 = res.state_energies.at(1);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    r.ok = false;
    r.status = "failed";
    r.error = e.what();
  }
  return r;
}

void write_trace_csv(const fs::path& path, const OptimizationTrace& trace) {
  CsvWriter w(path, {"cum_evals", "scope", "macro_index", "e_sa", "e0", "e1"});
  for (const auto& e : trace.events()) {
    const auto state = [&](std::size_t k) { return k < e.e_states.size() ? format_double(e.e_states[k]) : ""; };
    w.row({std::to_string(e.cumulative_evaluations), std::string(to_string(e.scope)),
           std::to_string(e.macro_index), format_double(e.e_sa), state(0), state(1)});
  }
}

BatchResult run_batch(const RunConfig& cfg, const std::string& mode, std::size_t jobs, const fs::path& out_dir) {
  check_mode(mode, false);
  const auto methods = resolve_methods(cfg.optimizers, cfg);
  const auto probe = load_molecule(cfg);  // surface input errors before starting workers
  try {
    vqe::EnsembleSpec{cfg.weights}.validate();
    vqe::MacroConfig{cfg.macro_tol, cfg.max_macro_iters}.validate();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  prepare_out_dir(out_dir);

  std::vector<std::pair<MethodSpec, std::uint64_t>> tasks;
  for (const auto& m : methods)
    for (const auto s : cfg.seeds) tasks.emplace_back(m, s);

  BatchResult b;
  b.runs.resize(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    b.runs[i] = run_molecule(cfg, tasks[i].first, tasks[i].second, mode);
    if (!out_dir.empty()) {
      write_trace_csv(out_dir / ("trace_" + b.runs[i].method + "_" + std::to_string(tasks[i].second) + ".csv"),
                      b.runs[i].trace);
    }
  });
  b.summary = summarize(b.runs);
  if (out_dir.empty()) return b;

  {
    CsvWriter w(out_dir / "summary.csv",
                {"method", "evals_min", "evals_max", "evals_mean", "E_min", "E_max", "E_mean"});
    for (const auto& s : b.summary) {
      w.row({s.method, std::to_string(s.evals_min), std::to_string(s.evals_max), format_double(s.evals_mean),
             format_double(s.e_min), format_double(s.e_max), format_double(s.e_mean)});
    }
  }
  {
    CsvWriter w(out_dir / "runs.csv", {"method", "seed", "status", "macro_iterations", "evals", "e_sa", "e0",
                                       "e1", "e_low", "e_high"});
    for (const auto& r : b.runs) {
      if (!r.ok) {
        w.row({r.method, std::to_string(r.seed), r.status, std::to_string(r.macro_iterations),
               std::to_string(r.evaluations), "", "", "", "", ""});
        continue;
      }
      w.row({r.method, std::to_string(r.seed), r.status, std::to_string(r.macro_iterations),
             std::to_string(r.evaluations), format_double(r.e_sa), format_double(r.e0), format_double(r.e1),
             format_double(std::min(r.e0, r.e1)), format_double(std::max(r.e0, r.e1))});
    }
  }
  {
    CsvWriter w(out_dir / "failures.csv", {"method", "seed", "error"});
    for (const auto& r : b.runs) {
      if (!r.ok) w.row({r.method, std::to_string(r.seed), r.error});
    }
  }
  {
    CsvWriter w(out_dir / "manifest.csv", {"key", "value"});
    const auto de_term = default_vqe_de_termination();
    std::string method_list;
    for (const auto& m : methods) method_list += (method_list.empty() ? "" : " ") + m.label();
    std::string seeds;
    for (const auto s : cfg.seeds) seeds += (seeds.empty() ? "" : " ") + std::to_string(s);
    const de::DEConfig de_defaults = make_de_config({MethodSpec::Family::de}, cfg, 1, 0, de_term);
    w.row({"molecule", cfg.molecule.string()});
    w.row({"n_orb", std::to_string(probe.n_orb)});
    w.row({"n_elec", std::to_string(probe.n_elec)});
    w.row({"n_frozen", std::to_string(cfg.n_frozen)});
    w.row({"mode", mode});
    w.row({"methods", method_list});
    w.row({"seeds", seeds});
    w.row({"weights", join(cfg.weights)});
    w.row({"macro_tol", format_double(cfg.macro_tol)});
    w.row({"max_macro_iters", std::to_string(mode == "saoo" ? cfg.max_macro_iters : 1)});
    w.row({"warm_start", cfg.warm_start ? "true" : "false"});
    w.row({"ansatz", "spin-adapted singles + paired doubles"});
    w.row({"local_max_iters", std::to_string(cfg.max_iters)});
    w.row({"local_grad_tol", format_double(local::LocalOptConfig{}.grad_tol)});
    w.row({"local_grad_step", format_double(local::LocalOptConfig{}.grad_step)});
    w.row({"gd_learning_rate", format_double(cfg.learning_rate)});
    w.row({"de_np", cfg.np ? std::to_string(*cfg.np) : "max(15, 5*D)"});
    w.row({"de_f", format_double(cfg.f)});
    w.row({"de_cr", format_double(cfg.cr)});
    w.row({"de_boundary", std::string(de::to_string(cfg.boundary))});
    w.row({"de_bounds", "[-pi, pi]"});
    w.row({"de_p_best_fraction", format_double(de_defaults.p_best_fraction)});
    w.row({"de_max_generations", std::to_string(*de_term.max_generations)});
    w.row({"de_abs_tol", format_double(de_term.abs_tol->eps) + " over " + std::to_string(de_term.abs_tol->n_tol) +
                             " generations"});
    w.row({"de_max_evals", cfg.max_evals ? std::to_string(*cfg.max_evals) : "none"});
    w.row({"orbital_grad_tol", format_double(vqe::OrbitalOptConfig{}.bfgs.grad_tol)});
  }
  return b;
}

void cmd_optimize(const CommandOptions& opts, std::ostream& log) {
  const RunConfig cfg = load(opts);
  const auto fn = find_test_function(cfg.function);
  if (!fn) {
    std::string names;
    for (const auto& n : test_function_names()) names += (names.empty() ? "" : ", ") + n;
    throw UsageError("unknown function '" + cfg.function + "'; valid: " + names);
  }
  if (cfg.dimension == 0) throw UsageError("dimension must be at least 1");
  const auto methods = resolve_methods(cfg.optimizers, cfg);
  const Objective objective = [f = fn->fn](std::span<const double> x) { return f(x); };

  struct Row {
    std::string method;
    std::uint64_t seed;
    std::size_t evals;
    double value;
  };
  std::vector<std::pair<MethodSpec, std::uint64_t>> tasks;
  for (const auto& m : methods)
    for (const auto s : cfg.seeds) tasks.emplace_back(m, s);
  std::vector<Row> rows(tasks.size());
  std::vector<std::string> errors(tasks.size());

  parallel_for(tasks.size(), opts.jobs, [&](std::size_t i) {
    const auto& [m, seed] = tasks[i];
    rows[i] = {m.label(), seed, 0, 0.0};
    try {
      if (m.family == MethodSpec::Family::de) {
        de::TerminationCriteria t;
        t.max_generations = 1000;
        const auto res = de::de_minimize(objective, de::Bounds::box(cfg.dimension, fn->lower, fn->upper),
                                         make_de_config(m, cfg, cfg.dimension, seed, t));
        rows[i].evals = res.evaluations;
        rows[i].value = res.best_fitness;
        return;
      }
      CounterRng rng(seed);
      std::vector<double> x0(cfg.dimension);
      for (auto& v : x0) v = fn->lower + rng.uniform01() * (fn->upper - fn->lower);
      local::LocalOptConfig lc;
      lc.max_iters = cfg.max_iters;
      lc.gd_learning_rate = cfg.learning_rate;
      const auto res = m.family == MethodSpec::Family::bfgs ? local::bfgs_minimize(objective, x0, lc)
                                                            : local::gradient_descent(objective, x0, lc);
      rows[i].evals = res.evaluations;
      rows[i].value = res.value;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) throw Error(rows[i].method + " seed " + std::to_string(rows[i].seed) + ": " + errors[i]);
  }

  const std::vector<std::string> header{"kind", "function", "optimizer", "dimension", "seed", "evals", "f_final"};
  auto emit = [&](auto&& write) {
    for (const auto& r : rows) {
      write({"run", fn->name, r.method, std::to_string(cfg.dimension), std::to_string(r.seed),
             std::to_string(r.evals), format_double(r.value)});
    }
    for (const auto& m : methods) {
      double evals = 0.0, value = 0.0, count = 0.0;
      for (const auto& r : rows) {
        if (r.method != m.label()) continue;
        evals += static_cast<double>(r.evals);
        value += r.value;
        count += 1.0;
      }
      write({"summary", fn->name, m.label(), std::to_string(cfg.dimension), "", format_double(evals / count),
             format_double(value / count)});
    }
  };
  if (opts.out.empty()) {
    auto line = [&](const std::vector<std::string>& f) {
      for (std::size_t i = 0; i < f.size(); ++i) log << (i ? "," : "") << csv_escape(f[i]);
      log << '\n';
    };
    line(header);
    emit(line);
    return;
  }
  prepare_out_dir(opts.out);
  CsvWriter w(opts.out / "optimize.csv", header);
  emit([&](const std::vector<std::string>& f) { w.row(f); });
  log << "wrote " << (opts.out / "optimize.csv").string() << '\n';
}

namespace {

void report(const BatchResult& b, std::ostream& log) {
  for (const auto& s : b.summary) {
    log << s.method << ": evals " << s.evals_min << "/" << s.evals_max << "/" << format_double(s.evals_mean)
        << "  E_SA " << format_double(s.e_min) << "/" << format_double(s.e_max) << "/" << format_double(s.e_mean)
        << '\n';
  }
  std::size_t failed = 0;
  for (const auto& r : b.runs) failed += r.ok ? 0 : 1;
  if (failed) log << failed << " run(s) failed, see failures.csv\n";
}

void batch_command(const CommandOptions& opts, std::ostream& log, const std::string& fixed_mode) {
  const RunConfig cfg = load(opts);
  std::string mode = fixed_mode.empty() ? cfg.mode : fixed_mode;
  if (!fixed_mode.empty() && opts.mode && *opts.mode != fixed_mode) {
    throw UsageError("--mode conflicts with this subcommand");
  }
  check_mode(mode, false);
  const auto b = run_batch(cfg, mode, opts.jobs, opts.out);
  report(b, log);
  if (!b.runs.empty() && b.summary.empty()) throw Error("every run failed");
}

}  // namespace

void cmd_vqe(const CommandOptions& opts, std::ostream& log) { batch_command(opts, log, "savqe"); }
void cmd_saoo(const CommandOptions& opts, std::ostream& log) { batch_command(opts, log, "saoo"); }

void cmd_compare(const CommandOptions& opts, std::ostream& log) {
  if (opts.out.empty()) throw UsageError("compare requires --out");
  batch_command(opts, log, "");
}

void cmd_scan(const CommandOptions& opts, std::ostream& log) {
  const RunConfig cfg = load(opts);
  if (opts.out.empty()) throw UsageError("scan requires --out");
  if (cfg.molecule.empty() || !fs::is_directory(cfg.molecule)) {
    throw UsageError("scan needs a directory of FCIDUMP files (molecule key or positional argument)");
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(cfg.molecule)) {
    if (e.is_regular_file() && e.path().filename().string().front() != '.') files.push_back(e.path());
  }
  if (files.empty()) throw UsageError("scan directory " + cfg.molecule.string() + " holds no files");
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  const auto methods = resolve_methods(cfg.optimizers, cfg);
  const MethodSpec method = methods.front();
  const std::uint64_t seed = cfg.seeds.front();
  std::vector<std::string> modes;
  if (cfg.mode == "both") {
    modes = {"savqe", "saoo"};
  } else {
    modes = {cfg.mode};
  }

  std::vector<std::pair<fs::path, std::string>> tasks;
  for (const auto& f : files)
    for (const auto& m : modes) tasks.emplace_back(f, m);
  std::vector<RunOutcome> results(tasks.size());
  parallel_for(tasks.size(), opts.jobs, [&](std::size_t i) {
    RunConfig point = cfg;
    point.molecule = tasks[i].first;
    results[i] = run_molecule(point, method, seed, tasks[i].second);
  });

  prepare_out_dir(opts.out);
  CsvWriter w(opts.out / "scan.csv", {"coordinate_label", "e0", "e1", "e_sa", "mode", "status"});
  std::size_t failed = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& r = results[i];
    const std::string label = tasks[i].first.stem().string();
    if (!r.ok) {
      ++failed;
      w.row({label, "", "", "", tasks[i].second, "failed"});
      log << label << " (" << tasks[i].second << ") failed: " << r.error << '\n';
      continue;
    }
    w.row({label, format_double(std::min(r.e0, r.e1)), format_double(std::max(r.e0, r.e1)),
           format_double(r.e_sa), tasks[i].second, r.status});
  }
  log << "wrote " << (opts.out / "scan.csv").string() << " (" << tasks.size() << " points, " << failed
      << " failed)\n";
}

}  // namespace qopt::bench
