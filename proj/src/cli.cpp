#include "robbo/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "robbo/algorithms.hpp"
#include "robbo/bench.hpp"
#include "robbo/error.hpp"
#include "robbo/estimator.hpp"
#include "robbo/io.hpp"
#include "robbo/planner.hpp"
#include "robbo/plugin.hpp"
#include "robbo/sampler.hpp"

namespace robbo::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The error line has already been written.
struct Reported {};

template <typename F>
auto as_usage(F&& parse) {
  try {
    return parse();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<double> parse_list(const std::string& text, std::size_t n, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not a number");
    }
  }
  if (out.size() != n) throw UsageError(flag + " expects " + std::to_string(n) + " comma-separated values");
  return out;
}

double parse_front(const std::string& text) {
  std::string value = text;
  if (value.rfind("p=", 0) == 0) value = value.substr(2);
  return parse_list(value, 1, "--front")[0];
}

struct BackendFlags {
  std::string front;
  std::string plugin;

  void add(CLI::App* app) {
    auto* f = app->add_option("--front", front, "analytical test front, p=<exponent>");
    auto* p = app->add_option("--plugin", plugin, "external sampler command");
    f->excludes(p);
  }

  [[nodiscard]] bool given() const { return !front.empty() || !plugin.empty(); }

  [[nodiscard]] std::shared_ptr<const Backend> make() const {
    if (!front.empty()) return make_front_problem(parse_front(front), {1.0, 1.0}).backend;
    if (!plugin.empty()) return std::make_shared<PluginBackend>(plugin);
    throw UsageError("a sampler is required: pass --front or --plugin");
  }
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  f << text << '\n';
}

template <typename Writer>
void emit_with(const std::string& path, std::ostream& out, Writer&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  write(f);
}

void error_line(std::ostream& err, const std::string& what, const std::string& kind,
                const std::optional<std::string>& partial = std::nullopt) {
  json doc{{"error", what}, {"kind", kind}};
  if (partial) doc["partial"] = json::parse(*partial);
  err << doc.dump() << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pareto front estimation with guaranteed per-objective tolerances", "robbo"};
  app.require_subcommand(1);

  // plan
  auto* plan = app.add_subcommand("plan", "sample-count and budget formulas");
  std::string plan_ranges;
  std::string plan_delta;
  std::size_t plan_budget = 0;
  double plan_alpha = 1.0;
  plan->add_option("--ranges", plan_ranges, "objective ranges R1,R2")->required();
  plan->add_option("--delta", plan_delta, "tolerances d1,d2");
  plan->add_option("--budget", plan_budget, "sample budget n_B");
  plan->add_option("--alpha", plan_alpha, "wanted delta1/delta2 in budget mode");

  // estimate
  auto* est = app.add_subcommand("estimate", "run the iterative front estimation");
  BackendFlags est_backend;
  est_backend.add(est);
  std::string est_delta;
  std::string est_pct;
  std::string est_strategy = "central-uniform";
  std::size_t est_budget = 0;
  double est_alpha = 1.0;
  std::string est_out;
  std::string est_curve;
  std::size_t est_curve_points = 512;
  auto* d_opt = est->add_option("--delta", est_delta, "tolerances d1,d2");
  auto* pct_opt = est->add_option("--delta-pct", est_pct, "tolerances in percent of the anchor ranges");
  d_opt->excludes(pct_opt);
  est->add_option("--strategy", est_strategy,
                  "central-uniform | central-bisection | linear-uniform | linear-bisection | "
                  "linear-max-uncertainty");
  auto* b_opt = est->add_option("--budget", est_budget, "fixed sample budget; tolerances follow from it");
  est->add_option("--alpha", est_alpha, "wanted delta1/delta2 in budget mode")->needs(b_opt);
  b_opt->excludes(d_opt)->excludes(pct_opt);
  est->add_option("--out", est_out, "report JSON path (default stdout)");
  est->add_option("--curve", est_curve, "estimate curve CSV path");
  est->add_option("--curve-points", est_curve_points, "rows in the curve CSV")->check(CLI::Range(2, 1 << 24));

  // realize
  auto* real = app.add_subcommand("realize", "map an estimate point to an actual front point");
  BackendFlags real_backend;
  real_backend.add(real);
  std::string real_dataset;
  std::optional<double> real_v;
  std::optional<double> real_f1;
  std::string real_kind = "central";
  real->add_option("--dataset", real_dataset, "dataset or report JSON");
  auto* v_opt = real->add_option("--v", real_v, "candidate v-coordinate");
  auto* f1_opt = real->add_option("--f1", real_f1, "candidate f1 value on the estimate");
  v_opt->excludes(f1_opt);
  real->add_option("--estimate", real_kind, "central | linear");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "export the optimal bounds on a v-grid");
  std::string bnd_dataset;
  std::size_t bnd_grid = 512;
  std::string bnd_out;
  bnd->add_option("--dataset", bnd_dataset, "dataset or report JSON")->required();
  bnd->add_option("--grid", bnd_grid, "grid size")->check(CLI::Range(2, 1 << 24));
  bnd->add_option("--out", bnd_out, "CSV path (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "sample-count sweep over the test front family");
  std::string bench_mode = "equal";
  std::size_t bench_grid = 40;
  std::string bench_out;
  std::size_t bench_workers = 0;
  std::vector<std::string> bench_strategies;
  bench->add_option("--mode", bench_mode, "equal | skew")->check(CLI::IsMember({"equal", "skew"}));
  bench->add_option("--p-grid", bench_grid, "number of log-spaced p values")->check(CLI::Range(2, 100000));
  bench->add_option("--out", bench_out, "output directory")->required();
  bench->add_option("--workers", bench_workers, "worker threads (0 = all cores)");
  bench->add_option("--strategies", bench_strategies, "subset of strategies")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    error_line(err, e.what(), "usage");
    return kExitUsage;
  }

  try {
    if (plan->parsed()) {
      const auto r = parse_list(plan_ranges, 2, "--ranges");
      PlanInput in{{r[0], r[1]}, std::nullopt, std::nullopt};
      if (!plan_delta.empty()) {
        const auto d = parse_list(plan_delta, 2, "--delta");
        in.delta = ToleranceVec{d[0], d[1]};
      }
      if (plan->count("--budget") > 0) in.budget = BudgetSpec{plan_budget, plan_alpha};
      if (!in.delta && !in.budget) throw UsageError("plan needs --delta or --budget");
      out << plan_json(in) << '\n';
      return kExitOk;
    }

    if (est->parsed()) {
      const auto backend = est_backend.make();
      StrategySpec spec = as_usage([&] { return parse_strategy(est_strategy); });
      Problem problem{{1.0, 1.0}, backend};
      if (est->count("--budget") > 0) {
        spec.termination = Termination::FixedBudget;
        spec.budget = {est_budget, est_alpha};
      } else if (!est_delta.empty()) {
        const auto d = parse_list(est_delta, 2, "--delta");
        problem.delta = {d[0], d[1]};
      } else if (!est_pct.empty()) {
        const auto p = parse_list(est_pct, 2, "--delta-pct");
        problem.delta = resolve_percent_tolerances(*backend, p[0] / 100.0, p[1] / 100.0);
      } else {
        throw UsageError("estimate needs --delta, --delta-pct or --budget");
      }
      RunReport rep = [&] {
        try {
          return run_variant(problem, spec);
        } catch (const RunAborted& e) {
          error_line(err, e.what(), std::string(to_string(e.kind())), report_json(e.partial()));
          throw Reported{};
        }
      }();
      emit(est_out, report_json(rep), out);
      if (!est_curve.empty()) {
        const Estimate e(rep.dataset, spec.estimate);
        emit_with(est_curve, out, [&](std::ostream& os) { write_curve_csv(os, estimate_curve(e, est_curve_points)); });
      }
      return kExitOk;
    }

    if (real->parsed()) {
      if (real_dataset.empty()) throw UsageError("realize needs --dataset");
      if (!real_backend.given()) throw UsageError("realization needs a sampler: pass --front or --plugin");
      if (!real_v && !real_f1) throw UsageError("realize needs --v or --f1");
      const Dataset d = read_dataset_file(real_dataset);
      const Problem problem{d.delta(), real_backend.make()};
      const Estimate e(d, as_usage([&] { return parse_estimate_kind(real_kind); }));
      const double v = real_v ? *real_v : v_at_f1(e, *real_f1);
      out << realization_json(realize(problem, e, v)) << '\n';
      return kExitOk;
    }

    if (bnd->parsed()) {
      const Dataset d = read_dataset_file(bnd_dataset);
      emit_with(bnd_out, out, [&](std::ostream& os) { write_bounds_csv(os, d, bnd_grid); });
      return kExitOk;
    }

    if (bench->parsed()) {
      SweepSpec spec;
      spec.mode = parse_tolerance_mode(bench_mode);
      spec.p_values = default_p_grid(bench_grid);
      if (!bench_strategies.empty()) {
        spec.strategies.clear();
        for (const auto& s : bench_strategies) {
          spec.strategies.push_back(as_usage([&] { return parse_bench_strategy(s); }));
        }
      }
      const auto rows = run_sweep(spec, bench_workers);
      std::filesystem::create_directories(bench_out);
      const std::filesystem::path dir(bench_out);
      emit_with((dir / "sweep.csv").string(), out, [&](std::ostream& os) { write_sweep_csv(os, rows); });
      emit((dir / "sweep.spec.json").string(), sweep_spec_json(spec), out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << app.help() << '\n';
    error_line(err, e.what(), "usage");
    return kExitUsage;
  } catch (const Error& e) {
    error_line(err, e.what(), std::string(to_string(e.kind())));
    return kExitDomain;
  } catch (const Reported&) {
    return kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    error_line(err, e.what(), "io");
    return kExitDomain;
  }
  return kExitUsage;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, out, err);
}

}  // namespace robbo::cli
