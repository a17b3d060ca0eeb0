#include "knapsack_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <random>

#include "knapsack/knapsack.hpp"

namespace knapsack::cli {
namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kAlgos[] = {"auto", "proximity", "bellman", "brute"};

struct Failure {
  int code;
  std::string message;
};

SolveOptions solve_options(const std::optional<double>& delta_constant, SolveStats* stats) {
  SolveOptions opts;
  if (delta_constant) opts.partition.delta_constant = static_cast<long double>(*delta_constant);
  opts.stats = stats;
  return opts;
}

// Dispatches one algorithm on a parsed file. Throws Failure for requests
// the algorithm cannot serve.
ExtProfit run_algo(const std::string& algo, const InstanceFile& file, const SolveOptions& opts) {
  if (algo == "auto") return solve_bounded(file.instance, opts);
  if (algo == "bellman") return bellman_bounded(file.instance);
  if (!is_01(file.instance)) {
    throw Failure{kUsage, "--algo " + algo + " needs a 0-1 instance (all multiplicities 1); use auto or bellman"};
  }
  if (algo == "proximity") return solve_01_perturbed(to_01(file.instance), opts);
  return brute_force_01(to_01(file.instance));
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kBudget;
  }
}

double millis(Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); }

// ---- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string path;
  std::string algo = "auto";
  bool stats = false;
  std::optional<double> delta_constant;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const InstanceFile file = read_instance_file(a.path);
    SolveStats stats;
    const auto start = Clock::now();
    const ExtProfit value = run_algo(a.algo, file, solve_options(a.delta_constant, &stats));
    const double total_ms = millis(Clock::now() - start);
    out << "OPT " << to_string(value) << "\n";
    if (a.stats) {
      out << "parts " << stats.parts << "\n"
          << "delta_sum " << to_string(stats.delta_sum) << "\n"
          << "convolutions " << stats.convolutions << "\n"
          << "smawk_evals " << stats.smawk_evals << "\n"
          << std::fixed << std::setprecision(3) << "partition_ms " << stats.partition_seconds * 1e3 << "\n"
          << "combine_ms " << stats.combine_seconds * 1e3 << "\n"
          << "total_ms " << total_ms << "\n";
    }
    return int{kOk};
  });
}

// ---- gen --------------------------------------------------------------------

struct GenArgs {
  GenSpec spec;
  std::optional<double> fraction;
  std::optional<std::int64_t> capacity;
  std::string output;
};

int cmd_gen(GenArgs a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    a.spec.capacity = a.capacity;
    a.spec.fraction = a.capacity ? std::nullopt : std::optional<double>(a.fraction.value_or(0.5));
    const InstanceFile file = generate(a.spec);
    if (a.output.empty()) {
      out << emit_instance(file);
    } else {
      write_instance_file(a.output, file);
    }
    return int{kOk};
  });
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t n_max = 30;
  std::int64_t w_max = 30;
  std::int64_t p_max = 100;
  std::int64_t u_max = 20;
  std::optional<double> delta_constant;
  std::string out_dir = ".";
};

// Instance of trial t: n and w_max drawn from a stream seeded by the trial
// seed, items from generate() with the same seed.
GenSpec trial_spec(const VerifyArgs& a, std::size_t t) {
  static constexpr double kFractions[] = {0.25, 0.5, 0.9, 1.0};
  GenSpec spec;
  spec.seed = a.seed + t;
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  spec.n = std::uniform_int_distribution<std::size_t>(1, a.n_max)(rng);
  spec.w_max = std::uniform_int_distribution<std::int64_t>(1, a.w_max)(rng);
  spec.p_max = a.p_max;
  spec.u_max = a.u_max;
  spec.fraction = kFractions[t % 4];
  return spec;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SolveOptions opts = solve_options(a.delta_constant, nullptr);
    for (std::size_t t = 0; t < a.trials; ++t) {
      const GenSpec spec = trial_spec(a, t);
      const InstanceFile file = generate(spec);
      const ExtProfit got = solve_bounded(file.instance, opts);
      const ExtProfit want = bellman_bounded(file.instance);
      if (got != want) {
        const auto path = std::filesystem::path(a.out_dir) / ("counterexample-" + std::to_string(spec.seed) + ".txt");
        write_instance_file(path.string(), file);
        err << "mismatch on trial " << t << " (seed " << spec.seed << "): proximity " << to_string(got)
            << ", oracle " << to_string(want) << "; instance written to " << path.string() << "\n";
        out << "FAIL " << t << "/" << a.trials << "\n";
        return int{kMismatch};
      }
    }
    out << "OK " << a.trials << "/" << a.trials << "\n";
    return int{kOk};
  });
}

// ---- bench ------------------------------------------------------------------

struct BenchArgs {
  std::vector<std::uint64_t> seeds{1};
  std::vector<std::size_t> sizes{1000};
  std::vector<std::int64_t> w_maxes{100};
  std::vector<std::string> algos{"auto"};
  std::int64_t p_max = 1000;
  std::int64_t u_max = 1;
  double fraction = 0.5;
  std::optional<double> delta_constant;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SolveOptions opts = solve_options(a.delta_constant, nullptr);
    int status = kOk;
    out << "seed,n,w_max,algo,micros,value\n";
    for (std::uint64_t seed : a.seeds) {
      for (std::size_t n : a.sizes) {
        for (std::int64_t w : a.w_maxes) {
          GenSpec spec;
          spec.seed = seed;
          spec.n = n;
          spec.w_max = w;
          spec.p_max = a.p_max;
          spec.u_max = a.u_max;
          spec.fraction = a.fraction;
          const InstanceFile file = generate(spec);
          for (const auto& algo : a.algos) {
            try {
              const auto start = Clock::now();
              const ExtProfit value = run_algo(algo, file, opts);
              const auto micros =
                  std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
              out << seed << "," << n << "," << w << "," << algo << "," << micros << "," << to_string(value)
                  << "\n";
            } catch (const BudgetExceeded& e) {
              err << "skipped seed=" << seed << " n=" << n << " w_max=" << w << " algo=" << algo << ": "
                  << e.what() << "\n";
              status = kBudget;
            }
          }
        }
      }
    }
    return status;
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact 0-1 and bounded knapsack solver"};
  app.name("knapsack");
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve an instance file and print OPT <value>");
  s->add_option("file", solve.path, "Instance file")->required();
  s->add_option("--algo", solve.algo, "auto | proximity | bellman | brute")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kAlgos), std::end(kAlgos))));
  s->add_flag("--stats", solve.stats, "Print part count, delta sum and timings");
  s->add_option("--delta-constant", solve.delta_constant,
                "Replace the proximity constant (heuristic; cross-check with verify)")
      ->check(CLI::PositiveNumber);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write a seeded random instance");
  g->add_option("--seed", gen.spec.seed, "PRNG seed (mt19937_64)");
  g->add_option("--n", gen.spec.n, "Number of items")->required();
  g->add_option("--w-max", gen.spec.w_max, "Largest weight")->required();
  g->add_option("--p-max", gen.spec.p_max, "Largest profit")->required();
  g->add_option("--u-max", gen.spec.u_max, "Largest multiplicity (1 for 0-1 instances)");
  auto* frac = g->add_option("--fraction", gen.fraction, "W = floor(f * sum u_i w_i), default 0.5");
  g->add_option("--capacity", gen.capacity, "Explicit W")->excludes(frac);
  g->add_option("-o,--output", gen.output, "Output file (default: standard output)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Compare the proximity pipeline against the Bellman table");
  v->add_option("--trials", verify.trials, "Number of random instances");
  v->add_option("--seed", verify.seed, "Seed of trial 0; trial t uses seed + t");
  v->add_option("--n-max", verify.n_max, "Largest item count")->check(CLI::PositiveNumber);
  v->add_option("--w-max", verify.w_max, "Largest weight")->check(CLI::PositiveNumber);
  v->add_option("--p-max", verify.p_max, "Largest profit")->check(CLI::PositiveNumber);
  v->add_option("--u-max", verify.u_max, "Largest multiplicity")->check(CLI::PositiveNumber);
  v->add_option("--delta-constant", verify.delta_constant, "Replace the proximity constant")
      ->check(CLI::PositiveNumber);
  v->add_option("--out-dir", verify.out_dir, "Where to write a counterexample");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time solvers on a grid of generated instances; CSV on stdout");
  b->add_option("--seeds", bench.seeds, "Seeds")->delimiter(',');
  b->add_option("--n", bench.sizes, "Item counts")->delimiter(',');
  b->add_option("--w-max", bench.w_maxes, "Largest weights")->delimiter(',');
  b->add_option("--algo", bench.algos, "Algorithms")
      ->delimiter(',')
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kAlgos), std::end(kAlgos))));
  b->add_option("--p-max", bench.p_max, "Largest profit");
  b->add_option("--u-max", bench.u_max, "Largest multiplicity");
  b->add_option("--fraction", bench.fraction, "Capacity fraction");
  b->add_option("--delta-constant", bench.delta_constant, "Replace the proximity constant")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kUsage};
  }

  if (s->parsed()) return cmd_solve(solve, out, err);
  if (g->parsed()) return cmd_gen(gen, out, err);
  if (v->parsed()) return cmd_verify(verify, out, err);
  return cmd_bench(bench, out, err);
}

}  // namespace knapsack::cli
