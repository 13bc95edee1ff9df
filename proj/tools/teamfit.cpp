// Command-line harness: single solves, lambda sweeps, required-skill sweeps,
// trade-off curves, runtime benchmarks and synthetic instance generation.
// All tabular output is CSV; exit codes are 0 (ok), 2 (usage), 3 (infeasible
// or bad data), 4 (oracle size guard).

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "teamfit/costs.hpp"
#include "teamfit/dataio.hpp"
#include "teamfit/errors.hpp"
#include "teamfit/lp.hpp"
#include "teamfit/required.hpp"
#include "teamfit/solve.hpp"

namespace {

using namespace teamfit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitSizeGuard = 4;

constexpr int kSlowPairThreshold = 10000;  // expert-task pairs

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15g", value);
  return buffer;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct CsvRow {
  std::string algorithm;
  double lambda = 0.0;
  std::optional<double> ps;
  int load = 0;
  double incompleteness = 0.0;
  double combined = 0.0;
  long runtime_ms = 0;
  std::optional<std::uint64_t> seed;
};

void write_rows(std::ostream& out, const std::vector<CsvRow>& rows) {
  out << "algorithm,lambda,ps,load,incompleteness,B,runtime_ms,seed\n";
  for (const CsvRow& row : rows) {
    out << csv_escape(row.algorithm) << ',' << fmt(row.lambda) << ',';
    if (row.ps) out << fmt(*row.ps);
    out << ',' << row.load << ',' << fmt(row.incompleteness) << ',' << fmt(row.combined)
        << ',' << row.runtime_ms << ',';
    if (row.seed) out << *row.seed;
    out << '\n';
  }
}

CsvRow row_of(const SolveReport& report, double lambda, std::optional<double> ps) {
  CsvRow row;
  row.algorithm = report.algorithm;
  row.lambda = lambda;
  row.ps = ps;
  row.load = report.cost.load;
  row.incompleteness = report.cost.incompleteness;
  row.combined = report.cost.combined;
  row.runtime_ms = std::lround(report.wall_time.count());
  row.seed = report.seed;
  return row;
}

// Fans cells out over workers; TEAMFIT_THREADS caps the worker count. Results
// keep the cell order no matter which worker finishes first.
std::vector<CsvRow> run_cells(const std::vector<std::function<CsvRow()>>& cells) {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TEAMFIT_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) threads = std::min<std::size_t>(threads, static_cast<std::size_t>(cap));
  }
  threads = std::min(threads, cells.size());

  std::vector<CsvRow> rows(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) rows[i] = cells[i]();
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cells.size()) return;
        try {
          rows[i] = cells[i]();
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

void emit(const std::string& out_path, const std::vector<CsvRow>& rows) {
  if (out_path.empty()) {
    write_rows(std::cout, rows);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open output file " + out_path);
  write_rows(out, rows);
}

struct CommonOptions {
  std::string experts_file;
  std::string tasks_file;
  int ell_max = 80;
  double delta = 0.1;
  std::uint64_t seed = 0;
  std::string out;
  bool allow_slow = false;

  void attach(CLI::App* cmd, bool with_out = true) {
    cmd->add_option("--experts", experts_file, "experts file")->required();
    cmd->add_option("--tasks", tasks_file, "tasks file")->required();
    cmd->add_option("--lmax", ell_max, "cap on the maximum-load sweep")->capture_default_str();
    cmd->add_option("--delta", delta, "rounding failure budget")->capture_default_str();
    cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    if (with_out) cmd->add_option("--out", out, "output file (default stdout)");
    cmd->add_flag("--allow-slow", allow_slow, "permit pair-greedy on any size");
  }

  Instance load_instance() const { return parse_instance(experts_file, tasks_file); }

  SolveConfig config(double lambda) const {
    SolveConfig cfg;
    cfg.lambda = lambda;
    cfg.ell_max = ell_max;
    cfg.delta = delta;
    cfg.seed = seed;
    return cfg;
  }
};

std::vector<Algorithm> parse_algorithms(const std::vector<std::string>& names,
                                        bool allow_slow, const Instance& instance) {
  std::vector<Algorithm> algorithms;
  for (const std::string& name : names) {
    const auto algorithm = algorithm_from_name(name);
    if (!algorithm) throw std::invalid_argument("unknown algorithm '" + name + "'");
    if (*algorithm == Algorithm::PairGreedy) {
      if (!allow_slow)
        throw std::invalid_argument(
            "pair-greedy is quadratic per step; pass --allow-slow to run it");
      const long pairs = static_cast<long>(instance.num_experts()) * instance.num_tasks();
      if (pairs > kSlowPairThreshold)
        std::cerr << "warning: pair-greedy on " << pairs
                  << " expert-task pairs may take a long time\n";
    }
    algorithms.push_back(*algorithm);
  }
  return algorithms;
}

void print_report(const SolveReport& report, std::optional<double> ps) {
  std::cout << "algorithm=" << report.algorithm << " lambda=" << fmt(report.cost.lambda);
  if (ps) std::cout << " ps=" << fmt(*ps);
  std::cout << " load=" << report.cost.load
            << " incompleteness=" << fmt(report.cost.incompleteness)
            << " B=" << fmt(report.cost.combined);
  if (report.chosen_ell) std::cout << " ell=" << *report.chosen_ell;
  if (report.rounds_used) std::cout << " rounds=" << *report.rounds_used;
  if (report.seed) std::cout << " seed=" << *report.seed;
  std::cout << " runtime_ms=" << std::lround(report.wall_time.count()) << '\n';
}

void write_assignment(const std::string& path, const SolveReport& report,
                      const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file " + path);
  out << "task,expert\n";
  for (int j = 0; j < report.assignment.num_tasks(); ++j)
    for (int e : report.assignment.team(j))
      out << csv_escape(instance.task_name(j)) << ',' << csv_escape(instance.expert_name(e))
          << '\n';
}

int run_solve(const CommonOptions& common, const std::string& algo_name, double lambda,
              std::optional<double> ps, const std::string& inner_name,
              const std::string& dump_lp) {
  const Instance instance = common.load_instance();
  std::vector<std::string> names{algo_name};
  if (!inner_name.empty()) names.push_back(inner_name);
  const std::vector<Algorithm> algos = parse_algorithms(names, common.allow_slow, instance);
  const Algorithm algorithm = algos.front();
  const SolveConfig cfg = common.config(lambda);

  if (!dump_lp.empty()) {
    if (ps || (algorithm != Algorithm::Load && algorithm != Algorithm::BestLoad))
      throw std::invalid_argument("--dump-lp applies to load/best-load without --ps");
    std::ofstream out(dump_lp);
    if (!out) throw Error("cannot open output file " + dump_lp);
    const CoveringLP lp = build_lp(instance);
    write_lp_format(lp, out);
    std::cout << "lp_load=" << fmt(solve_lp(lp).lp_load) << '\n';
  }

  bool file_has_required = false;
  for (const Task& t : instance.tasks()) file_has_required |= t.required.any();

  SolveReport report;
  const Algorithm inner = inner_name.empty() ? algorithm : algos.back();
  if (ps) {
    const Instance marked = mark_required(instance, {*ps, common.seed});
    report = r_balanced_solve(marked, cfg, inner);
  } else if (file_has_required) {
    // '!' marks in the tasks file imply the hard-coverage pipeline.
    report = r_balanced_solve(instance, cfg, inner);
  } else {
    if (!inner_name.empty())
      throw std::invalid_argument("--inner needs --ps or a tasks file with '!' marks");
    report = solve(instance, cfg, algorithm);
  }
  print_report(report, ps);
  if (!common.out.empty()) write_assignment(common.out, report, instance);
  return kExitOk;
}

int run_sweep_lambda(const CommonOptions& common, const std::vector<std::string>& algo_names,
                     std::vector<double> lambdas, bool np_hard_grid) {
  const Instance instance = common.load_instance();
  const std::vector<Algorithm> algorithms =
      parse_algorithms(algo_names, common.allow_slow, instance);
  if (np_hard_grid) {
    // Points strictly inside (0, 1/(k*N)), the provably hard range.
    const double bound =
        1.0 / (static_cast<double>(instance.num_tasks()) * instance.max_task_size());
    std::vector<double> grid;
    for (double f : {0.2, 0.4, 0.6, 0.8}) grid.push_back(f * bound);
    grid.insert(grid.end(), lambdas.begin(), lambdas.end());
    lambdas = std::move(grid);
  }

  std::vector<std::function<CsvRow()>> cells;
  for (Algorithm algorithm : algorithms)
    for (double lambda : lambdas)
      cells.emplace_back([&, algorithm, lambda] {
        return row_of(solve(instance, common.config(lambda), algorithm), lambda, std::nullopt);
      });
  emit(common.out, run_cells(cells));
  return kExitOk;
}

int run_sweep_ps(const CommonOptions& common, const std::vector<std::string>& algo_names,
                 const std::vector<double>& ps_list, double lambda) {
  const Instance instance = common.load_instance();
  const std::vector<Algorithm> algorithms =
      parse_algorithms(algo_names, common.allow_slow, instance);

  std::vector<Instance> marked;
  marked.reserve(ps_list.size());
  for (double ps : ps_list) marked.push_back(mark_required(instance, {ps, common.seed}));

  std::vector<std::function<CsvRow()>> cells;
  for (Algorithm algorithm : algorithms)
    for (std::size_t i = 0; i < ps_list.size(); ++i)
      cells.emplace_back([&, algorithm, i] {
        return row_of(r_balanced_solve(marked[i], common.config(lambda), algorithm), lambda,
                      ps_list[i]);
      });
  emit(common.out, run_cells(cells));
  return kExitOk;
}

int run_tradeoff(const CommonOptions& common, const std::vector<std::string>& algo_names,
                 const std::vector<double>& lambdas) {
  const Instance instance = common.load_instance();
  const std::vector<Algorithm> algorithms =
      parse_algorithms(algo_names, common.allow_slow, instance);
  std::vector<std::function<CsvRow()>> cells;
  for (Algorithm algorithm : algorithms)
    for (double lambda : lambdas)
      cells.emplace_back([&, algorithm, lambda] {
        return row_of(solve(instance, common.config(lambda), algorithm), lambda, std::nullopt);
      });
  emit(common.out, run_cells(cells));
  return kExitOk;
}

int run_bench(const CommonOptions& common, const std::vector<std::string>& algo_names,
              double lambda, int repeats) {
  if (repeats < 1) throw std::invalid_argument("--repeats must be at least 1");
  const Instance instance = common.load_instance();
  const std::vector<Algorithm> algorithms =
      parse_algorithms(algo_names, common.allow_slow, instance);

  struct BenchRow {
    std::string algorithm;
    double mean_ms = 0.0;
    double stddev_ms = 0.0;
  };
  std::vector<BenchRow> rows;
  for (Algorithm algorithm : algorithms) {
    std::vector<double> times;
    for (int r = 0; r < repeats; ++r)
      times.push_back(solve(instance, common.config(lambda), algorithm).wall_time.count());
    double mean = 0.0;
    for (double t : times) mean += t;
    mean /= repeats;
    double var = 0.0;
    for (double t : times) var += (t - mean) * (t - mean);
    const double stddev = repeats > 1 ? std::sqrt(var / (repeats - 1)) : 0.0;
    rows.push_back({std::string(algorithm_name(algorithm)), mean, stddev});
  }
  std::sort(rows.begin(), rows.end(),
            [](const BenchRow& a, const BenchRow& b) { return a.mean_ms < b.mean_ms; });

  std::ostringstream csv;
  csv << "algorithm,lambda,repeats,mean_ms,stddev_ms\n";
  for (const BenchRow& row : rows)
    csv << csv_escape(row.algorithm) << ',' << fmt(lambda) << ',' << repeats << ','
        << fmt(row.mean_ms) << ',' << fmt(row.stddev_ms) << '\n';
  if (common.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(common.out);
    if (!out) throw Error("cannot open output file " + common.out);
    out << csv.str();
  }
  return kExitOk;
}

int run_gen(const std::string& source_experts, const SynthConfig& cfg,
            const std::string& out_prefix) {
  const Instance instance = synth_generate(std::filesystem::path(source_experts), cfg);
  const std::string experts_path = out_prefix + ".experts";
  const std::string tasks_path = out_prefix + ".tasks";
  std::ofstream experts_out(experts_path);
  std::ofstream tasks_out(tasks_path);
  if (!experts_out || !tasks_out)
    throw Error("cannot open output files with prefix " + out_prefix);
  serialize_instance(instance, experts_out, tasks_out);
  std::cout << "wrote " << experts_path << " and " << tasks_path << '\n';
  std::cout << format_stats(instance_stats(instance));
  return kExitOk;
}

int run_stats(const CommonOptions& common) {
  std::cout << format_stats(instance_stats(common.load_instance()));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Team assignment benchmark harness"};
  app.require_subcommand(1);

  const std::vector<std::string> default_algos = {"expert-greedy", "task-greedy", "best-load",
                                                  "set-cover", "best-cost-greedy"};
  const std::vector<std::string> tradeoff_algos = {"expert-greedy", "task-greedy", "best-load"};
  const std::vector<std::string> bench_algos = {"expert-greedy", "task-greedy", "best-load",
                                                "load", "set-cover", "best-cost-greedy"};

  // solve
  CommonOptions solve_common;
  std::string solve_algo;
  double solve_lambda = 0.0;
  double solve_ps = 0.0;
  std::string solve_inner, solve_dump_lp;
  CLI::App* solve_cmd = app.add_subcommand("solve", "run one algorithm once");
  solve_common.attach(solve_cmd);
  solve_cmd->add_option("--algo", solve_algo, "algorithm name")->required();
  solve_cmd->add_option("--lambda", solve_lambda, "trade-off weight")->required();
  CLI::Option* ps_opt =
      solve_cmd->add_option("--ps", solve_ps, "required-skill probability (enables the "
                                              "hard-coverage pipeline)");
  solve_cmd->add_option("--inner", solve_inner, "post-preprocessing algorithm (with --ps)");
  solve_cmd->add_option("--dump-lp", solve_dump_lp, "write the covering LP in LP-format text");

  // sweep-lambda
  CommonOptions sweep_common;
  std::vector<std::string> sweep_algos = default_algos;
  std::vector<double> sweep_lambdas = {0, 2, 4, 6, 8, 10};
  bool np_hard_grid = false;
  CLI::App* sweep_cmd = app.add_subcommand("sweep-lambda", "cost vs lambda, CSV");
  sweep_common.attach(sweep_cmd);
  sweep_cmd->add_option("--algos", sweep_algos, "algorithms")->delimiter(',')->capture_default_str();
  sweep_cmd->add_option("--lambdas", sweep_lambdas, "lambda grid")->delimiter(',')->capture_default_str();
  sweep_cmd->add_flag("--np-hard-grid", np_hard_grid, "add points inside (0, 1/(k*N))");

  // sweep-ps
  CommonOptions ps_common;
  std::vector<std::string> ps_algos = default_algos;
  std::vector<double> ps_list = {0, 0.25, 0.5, 0.75, 1};
  double ps_lambda = 4.0;
  CLI::App* ps_cmd = app.add_subcommand("sweep-ps", "cost vs required-skill probability, CSV");
  ps_common.attach(ps_cmd);
  ps_cmd->add_option("--algos", ps_algos, "algorithms")->delimiter(',')->capture_default_str();
  ps_cmd->add_option("--ps-list", ps_list, "required-skill probabilities")->delimiter(',')->capture_default_str();
  ps_cmd->add_option("--lambda", ps_lambda, "trade-off weight")->capture_default_str();

  // tradeoff
  CommonOptions tradeoff_common;
  std::vector<std::string> tradeoff_algo_names = tradeoff_algos;
  std::vector<double> tradeoff_lambdas = {0, 2, 4, 6, 8, 10};
  CLI::App* tradeoff_cmd = app.add_subcommand("tradeoff", "load vs incompleteness curve, CSV");
  tradeoff_common.attach(tradeoff_cmd);
  tradeoff_cmd->add_option("--algos", tradeoff_algo_names, "algorithms")->delimiter(',')->capture_default_str();
  tradeoff_cmd->add_option("--lambdas", tradeoff_lambdas, "lambda grid")->delimiter(',')->capture_default_str();

  // bench
  CommonOptions bench_common;
  std::vector<std::string> bench_algo_names = bench_algos;
  double bench_lambda = 4.0;
  int repeats = 5;
  CLI::App* bench_cmd = app.add_subcommand("bench", "mean/stddev runtime per algorithm, CSV");
  bench_common.attach(bench_cmd);
  bench_cmd->add_option("--algos", bench_algo_names, "algorithms")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--lambda", bench_lambda, "trade-off weight")->capture_default_str();
  bench_cmd->add_option("--repeats", repeats, "runs per algorithm")->capture_default_str();

  // gen
  std::string gen_source, gen_prefix;
  SynthConfig gen_cfg;
  gen_cfg.max_task_skills = 10;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a synthetic instance");
  gen_cmd->add_option("--source-experts", gen_source, "experts file to sample from")->required();
  gen_cmd->add_option("--k", gen_cfg.num_tasks, "number of tasks")->required();
  gen_cmd->add_option("--q", gen_cfg.removal_fraction, "fraction of experts to remove")->capture_default_str();
  gen_cmd->add_option("--min-skills", gen_cfg.min_task_skills, "minimum task size")->capture_default_str();
  gen_cmd->add_option("--max-skills", gen_cfg.max_task_skills, "maximum task size")->capture_default_str();
  gen_cmd->add_option("--seed", gen_cfg.seed, "random seed")->capture_default_str();
  gen_cmd->add_option("--out-prefix", gen_prefix, "output path prefix")->required();

  // stats
  CommonOptions stats_common;
  CLI::App* stats_cmd = app.add_subcommand("stats", "print instance statistics");
  stats_common.attach(stats_cmd, /*with_out=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed())
      return run_solve(solve_common, solve_algo, solve_lambda,
                       *ps_opt ? std::optional<double>(solve_ps) : std::nullopt, solve_inner,
                       solve_dump_lp);
    if (sweep_cmd->parsed())
      return run_sweep_lambda(sweep_common, sweep_algos, sweep_lambdas, np_hard_grid);
    if (ps_cmd->parsed()) return run_sweep_ps(ps_common, ps_algos, ps_list, ps_lambda);
    if (tradeoff_cmd->parsed())
      return run_tradeoff(tradeoff_common, tradeoff_algo_names, tradeoff_lambdas);
    if (bench_cmd->parsed())
      return run_bench(bench_common, bench_algo_names, bench_lambda, repeats);
    if (gen_cmd->parsed()) return run_gen(gen_source, gen_cfg, gen_prefix);
    if (stats_cmd->parsed()) return run_stats(stats_common);
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSizeGuard;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const GenerationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
