// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failures (capped at 1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "qopt/bench/commands.hpp"
#include "qopt/bench/csv.hpp"
#include "qopt/bench/test_functions.hpp"
#include "qopt/chem/fcidump.hpp"
#include "qopt/vqe/sa_oo_vqe.hpp"

using namespace qopt;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

const char* kH2 = "fcidump/h2_sto3g.fcidump";

chem::MolecularIntegrals h2() { return chem::read_fcidump(oracle::data_path(kH2)); }

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// 1: qubit spectrum against the occupation-basis oracle.
Verdict jw_spectrum() {
  const auto ints = h2();
  const Eigen::MatrixXcd q = chem::jordan_wigner(ints).to_matrix();
  const Eigen::VectorXd a = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(q).eigenvalues();
  const Eigen::VectorXd b = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(oracle::fock_hamiltonian(ints)).eigenvalues();
  const double err = (a - b).cwiseAbs().maxCoeff();
  return {a.size() == 16 && err < 1e-10, fmt("16 eigenvalues, max |diff| = %.2e (tol 1e-10)", err)};
}

// 2: SA-VQE with BFGS reaches the exact two-state ensemble energy.
Verdict sa_vqe_exact() {
  const auto ints = h2();
  const auto init = vqe::build_initial_states(2, 2);
  const auto r = vqe::run_sa_vqe(chem::jordan_wigner(ints), vqe::default_ansatz(2, 2), init, vqe::EnsembleSpec{},
                                 vqe::Bfgs{});
  const double target = oracle::singlet_ensemble_minimum(ints);
  const double err = std::abs(r.e_sa - target);
  return {err < 1e-6, fmt("E_SA = %.10f", r.e_sa) + fmt(", oracle = %.10f", target) + fmt(", |diff| = %.2e (tol 1e-6)", err)};
}

// 3: FCI energy does not depend on the orbital basis.
Verdict rotation_invariance() {
  const auto ints = h2();
  const double ref = oracle::fci_ground(ints);
  CounterRng rng(2024);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    vqe::KappaMatrix k = vqe::KappaMatrix::zero(2);
    for (auto& p : k.params) p = rng.uniform01() - 0.5;
    worst = std::max(worst, std::abs(oracle::fci_ground(vqe::rotate_integrals(ints, k)) - ref));
  }
  return {worst < 1e-8, fmt("20 random kappa, max |dE_FCI| = %.2e (tol 1e-8)", worst)};
}

// 4: RDM contraction against the Pauli-sum expectation.
Verdict energy_paths() {
  const auto ints = h2();
  const auto h = chem::jordan_wigner(ints);
  const auto ans = vqe::default_ansatz(2, 2);
  const auto init = vqe::build_initial_states(2, 2);
  CounterRng rng(77);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    std::vector<double> theta(ans.parameter_count());
    for (auto& t : theta) t = std::numbers::pi * (2.0 * rng.uniform01() - 1.0);
    auto s = init[static_cast<std::size_t>(i % 2)];
    vqe::apply_ansatz(s, ans, theta);
    const double e_rdm = qsim::contract_energy(ints, qsim::measure_rdms(s, 2));
    worst = std::max(worst, std::abs(e_rdm - qsim::expectation(s, h)));
  }
  return {worst < 1e-10, fmt("50 states, max |E_rdm - E_pauli| = %.2e (tol 1e-10)", worst)};
}

// 5: DE/rand/1/bin on the 5-D sphere.
Verdict de_sphere() {
  int hits = 0;
  std::size_t max_evals_used = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    de::DEConfig c;
    c.np = 20;
    c.f = 0.5;
    c.cr = 0.9;
    c.strategy = de::Strategy::rand1;
    c.crossover = de::Crossover::binomial;
    c.seed = seed;
    c.termination.max_evals = 30000;
    const auto r = de::de_minimize(bench::sphere, de::Bounds::box(5, -5.0, 5.0), c);
    max_evals_used = std::max(max_evals_used, r.evaluations);
    if (r.best_fitness < 1e-6 && r.evaluations <= 30000) ++hits;
  }
  return {hits >= 9, std::to_string(hits) + "/10 seeds reach f < 1e-6 within " + std::to_string(max_evals_used) +
                         " evaluations (need >= 9)"};
}

// 6: BFGS, GD and the eight DE variants on H2 over seeds 0..9.
Verdict compare_trend() {
  bench::RunConfig cfg;
  cfg.molecule = oracle::data_path(kH2);
  cfg.optimizers = {"all"};
  const std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto batch = bench::run_batch(cfg, cfg.mode, jobs, {});
  const bench::SummaryRow* bfgs = nullptr;
  std::vector<const bench::SummaryRow*> des;
  for (const auto& row : batch.summary) {
    if (row.method == "bfgs") bfgs = &row;
    if (row.method.starts_with("de_")) des.push_back(&row);
  }
  if (!bfgs || des.size() != 8) return {false, "missing summary rows"};
  const bool a = bfgs->evals_min == bfgs->evals_max;
  bool b = true, c = true, d = false;
  double spread = 0.0;
  for (const auto* r : des) {
    b = b && bfgs->evals_mean < r->evals_mean;
    c = c && r->e_mean >= bfgs->e_mean - 1e-9;
    spread = std::max(spread, r->e_max - r->e_min);
  }
  d = spread > 1e-4;
  std::ostringstream os;
  os << "(a) bfgs evals " << bfgs->evals_min << ".." << bfgs->evals_max << (a ? " ok" : " FAIL")
     << "; (b) bfgs mean " << bfgs->evals_mean << " below all DE means" << (b ? " ok" : " FAIL")
     << "; (c) DE E_mean >= bfgs" << (c ? " ok" : " FAIL") << "; (d) max DE spread "
     << fmt("%.2e", spread) << (d ? " ok" : " FAIL");
  return {a && b && c && d, os.str()};
}

// 7: macro loop is monotone and stops on the energy tolerance.
Verdict macro_loop() {
  const auto r = vqe::run_sa_oo_vqe(h2(), vqe::default_ansatz(2, 2), vqe::EnsembleSpec{}, vqe::Bfgs{});
  bool monotone = true;
  for (std::size_t i = 1; i < r.macro_trace.size(); ++i) {
    monotone = monotone && r.macro_trace[i].e_sa_oo <= r.macro_trace[i - 1].e_sa_oo + 1e-10;
  }
  const std::size_t n = r.macro_trace.size();
  const double last_delta = n >= 2 ? std::abs(r.macro_trace[n - 1].e_sa_oo - r.macro_trace[n - 2].e_sa_oo) : 1.0;
  const bool ok = monotone && r.status == vqe::MacroStatus::converged && n <= 10 && last_delta < 1e-4;
  return {ok, std::to_string(n) + " macro iterations, status " + std::string(vqe::to_string(r.status)) +
                  (monotone ? ", non-increasing" : ", NOT monotone") + fmt(", last |dE| = %.2e", last_delta)};
}

// 8: crossover inheritance statistics.
Verdict crossover_stats() {
  const int trials = 100000;
  std::ostringstream os;
  bool ok = true;
  for (const auto& [cr, dim] : std::vector<std::pair<double, std::size_t>>{{0.3, 4}, {0.9, 10}}) {
    const std::vector<double> target(dim, 0.0), donor(dim, 1.0);
    CounterRng rng(static_cast<std::uint64_t>(dim));
    int inherited = 0;
    for (int t = 0; t < trials; ++t) inherited += de::crossover_binomial(target, donor, cr, rng)[0] == 1.0;
    const double p = cr + (1.0 - cr) / static_cast<double>(dim);
    const double sigma = std::sqrt(p * (1.0 - p) / trials);
    const double z = std::abs(inherited / double(trials) - p) / sigma;
    ok = ok && z < 3.0;
    os << "bin(" << cr << "," << dim << ") z=" << fmt("%.2f", z) << "; ";
  }
  for (double cr : {0.5, 0.9}) {
    const std::size_t dim = 10;
    const std::vector<double> target(dim, 0.0), donor(dim, 1.0);
    CounterRng rng(99);
    int long_runs = 0;
    for (int t = 0; t < trials; ++t) {
      const auto u = de::crossover_exponential(target, donor, cr, rng);
      long_runs += std::count(u.begin(), u.end(), 1.0) >= 2;
    }
    const double sigma = std::sqrt(cr * (1.0 - cr) / trials);
    const double z = std::abs(long_runs / double(trials) - cr) / sigma;
    ok = ok && z < 3.0;
    os << "exp P(L>=2) cr=" << cr << " z=" << fmt("%.2f", z) << "; ";
  }
  return {ok, os.str() + "(tol 3 sigma)"};
}

// 9: orbital optimization never raises the scan energies.
Verdict scan_comparison() {
  const fs::path out = fs::temp_directory_path() / "qopt_acceptance_scan";
  fs::remove_all(out);
  const fs::path cfg_path = out / "scan.cfg";
  fs::create_directories(out);
  std::ofstream(cfg_path) << "molecule = " << oracle::data_path("fcidump/h2_stretch") << "\noptimizer = bfgs\nseeds = 0\n";
  bench::CommandOptions opts;
  opts.config = cfg_path;
  opts.out = out;
  opts.mode = "both";
  std::ostringstream log;
  bench::cmd_scan(opts, log);
  std::ifstream in(out / "scan.csv");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto rows = bench::parse_csv(ss.str());
  std::map<std::string, std::map<std::string, std::pair<double, double>>> by_point;  // label -> mode -> (E0, E_SA)
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][5] == "failed") return {false, "scan point " + rows[i][0] + " failed"};
    by_point[rows[i][0]][rows[i][4]] = {std::stod(rows[i][1]), std::stod(rows[i][3])};
  }
  bool ok = by_point.size() == 3;
  double worst = -1e300;
  for (const auto& [label, modes] : by_point) {
    if (!modes.contains("saoo") || !modes.contains("savqe")) return {false, "missing mode at " + label};
    const auto [e0_oo, esa_oo] = modes.at("saoo");
    const auto [e0_fx, esa_fx] = modes.at("savqe");
    worst = std::max({worst, e0_oo - e0_fx, esa_oo - esa_fx});
    ok = ok && e0_oo <= e0_fx + 1e-8 && esa_oo <= esa_fx + 1e-8;
  }
  return {ok, std::to_string(by_point.size()) + " points, max (saoo - savqe) = " + fmt("%.2e", worst) +
                  " over E0 and E_SA (tol 1e-8)"};
}

// 10: each stopping rule fires alone on a trace built for it.
Verdict termination_units() {
  de::TerminationCriteria c;
  c.max_evals = 10000;
  c.max_generations = 1000;
  c.abs_tol = de::AbsoluteTolerance{1e-6, 5};
  c.rel_tol = de::RelativeTolerance{1e-4, 5, 1e-12};
  c.running_mean = de::RunningMeanTolerance{1e-6, 8, 3};
  c.best_worst = de::BestWorstTolerance{1e-8, 3};

  using Rec = de::GenerationRecord;
  auto trace = [](std::vector<double> best, double gap) {
    std::vector<Rec> h;
    for (std::size_t k = 0; k < best.size(); ++k) h.push_back({k, 20 * (k + 1), best[k], best[k] + gap});
    return h;
  };
  std::map<de::StopReason, std::vector<Rec>> cases;
  {
    auto h = trace({3, 2, 1}, 1.0);
    h.back().evaluations = 10000;
    cases[de::StopReason::max_evals] = h;
  }
  {
    auto h = trace({3, 2, 1}, 1.0);
    for (std::size_t k = 0; k < 3; ++k) h[k].generation = 998 + k;
    cases[de::StopReason::max_generations] = h;
  }
  // large early gains, then tiny absolute steps near zero (relative steps stay large)
  cases[de::StopReason::abs_tol] = trace({5, 4, 3, 2, 1, 0, -1e-7, -2e-7, -3e-7, -4e-7, -5e-7}, 1.0);
  // unit steps far from zero
  cases[de::StopReason::rel_tol] = trace({1e6, 1e6 - 1, 1e6 - 2, 1e6 - 3, 1e6 - 4, 1e6 - 5}, 1.0);
  {
    std::vector<double> b(12, 5e-6);
    b.back() = 1e-6;  // one bump keeps the absolute test open; the mean stays small
    cases[de::StopReason::running_mean] = trace(b, 1.0);
  }
  cases[de::StopReason::best_worst] = trace({10, 9, 8, 7}, 1e-9);

  const de::StopReason all[] = {de::StopReason::max_evals, de::StopReason::max_generations, de::StopReason::abs_tol,
                                de::StopReason::rel_tol, de::StopReason::running_mean, de::StopReason::best_worst};
  bool ok = true;
  std::ostringstream os;
  for (const auto& [which, h] : cases) {
    bool alone = de::should_terminate(h, c) == which;
    for (auto other : all) alone = alone && de::criterion_satisfied(other, h, c) == (other == which);
    ok = ok && alone;
    os << de::to_string(which) << (alone ? " ok" : " FAIL") << "; ";
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "JW spectrum", 1.0, jw_spectrum},
      {2, "SA-VQE exactness", 10.0, sa_vqe_exact},
      {3, "orbital-rotation invariance", 10.0, rotation_invariance},
      {4, "energy-path consistency", 60.0, energy_paths},
      {5, "DE capability", 30.0, de_sphere},
      {6, "optimizer comparison trend", 600.0, compare_trend},
      {7, "macro-loop behavior", 60.0, macro_loop},
      {8, "crossover statistics", 60.0, crossover_stats},
      {9, "scan comparison", 60.0, scan_comparison},
      {10, "termination units", 10.0, termination_units},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = v.pass && in_time;
    failures += !pass;
    std::printf("criterion %2d %-28s %s  %s  [%.2fs, limit %.0fs%s]\n", c.id, c.name, pass ? "PASS" : "FAIL",
                v.detail.c_str(), secs, c.limit_s, in_time ? "" : ", TOO SLOW");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
