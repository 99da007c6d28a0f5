#include "robbo/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "robbo/baselines.hpp"
#include "robbo/error.hpp"
#include "robbo/planner.hpp"

namespace robbo {

std::string_view to_string(ToleranceMode m) { return m == ToleranceMode::Equal ? "equal" : "skew"; }

ToleranceMode parse_tolerance_mode(std::string_view name) {
  if (name == "equal") return ToleranceMode::Equal;
  if (name == "skew") return ToleranceMode::Skew;
  throw Error(ErrorKind::InvalidArgument, "unknown tolerance mode '" + std::string(name) + "'");
}

std::pair<double, double> mode_percentages(ToleranceMode m) {
  return m == ToleranceMode::Equal ? std::pair{0.015, 0.015} : std::pair{0.01, 0.03};
}

std::string strategy_name(const BenchStrategy& s) {
  switch (s.kind) {
    case BenchStrategy::Kind::EpsilonConstraint: return "ec";
    case BenchStrategy::Kind::Nbi: return "nbi";
    case BenchStrategy::Kind::Iterative: break;
  }
  return strategy_name(s.spec);
}

BenchStrategy parse_bench_strategy(std::string_view name) {
  if (name == "ec") return {BenchStrategy::Kind::EpsilonConstraint, {}};
  if (name == "nbi") return {BenchStrategy::Kind::Nbi, {}};
  return {BenchStrategy::Kind::Iterative, parse_strategy(name)};
}

std::vector<BenchStrategy> default_bench_strategies() {
  std::vector<BenchStrategy> out;
  for (const auto& s : iterative_strategies()) out.push_back({BenchStrategy::Kind::Iterative, s});
  out.push_back({BenchStrategy::Kind::EpsilonConstraint, {}});
  out.push_back({BenchStrategy::Kind::Nbi, {}});
  return out;
}

std::vector<double> default_p_grid(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "p grid needs at least 2 points");
  const double lo = std::log(0.01);
  const double hi = std::log(7.0);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  out.front() = 0.01;
  out.back() = 7.0;
  return out;
}

void validate(const SweepSpec& spec) {
  if (spec.p_values.empty()) throw Error(ErrorKind::InvalidArgument, "sweep needs at least one p value");
  if (spec.strategies.empty()) throw Error(ErrorKind::InvalidArgument, "sweep needs at least one strategy");
  for (double p : spec.p_values) {
    if (!(std::isfinite(p) && p > 0.0)) throw Error(ErrorKind::InvalidArgument, "p values must be positive");
  }
  for (const auto& s : spec.strategies) {
    if (s.kind == BenchStrategy::Kind::Iterative) validate(s.spec);
  }
}

SweepRow run_bench_cell(double p, ToleranceMode mode, const BenchStrategy& strategy) {
  SweepRow row;
  row.p = p;
  row.strategy = strategy_name(strategy);
  try {
    const auto [pct1, pct2] = mode_percentages(mode);
    Problem problem = make_front_problem(p, {1.0, 1.0});
    problem.delta = resolve_percent_tolerances(*problem.backend, pct1, pct2);
    const ObjectivePoint a1 = sample_anchor(problem, AnchorWhich::A1);
    const ObjectivePoint a2 = sample_anchor(problem, AnchorWhich::A2);
    const RangeSpec ranges{a2.z1 - a1.z1, a1.z2 - a2.z2};
    switch (strategy.kind) {
      case BenchStrategy::Kind::EpsilonConstraint:
        row.sample_count = run_ec(problem).count();
        row.planner_bound = samples_ec(problem.delta, ranges);
        break;
      case BenchStrategy::Kind::Nbi:
        row.sample_count = run_nbi(problem).count();
        row.planner_bound = samples_nbi(problem.delta, ranges);
        break;
      case BenchStrategy::Kind::Iterative: {
        try {
          const RunReport rep = run_variant(problem, strategy.spec);
          row.sample_count = rep.total_samples;
          row.planner_bound = rep.planner_bound;
          row.final_lambda = rep.final_lambda;
          row.terminated_by = to_string(rep.terminated_by);
        } catch (const RunAborted& e) {
          row.sample_count = e.partial().total_samples;
          row.planner_bound = e.partial().planner_bound;
          row.final_lambda = e.partial().final_lambda;
          throw;
        }
        break;
      }
    }
  } catch (const Error& e) {
    row.error = std::string(to_string(e.kind())) + ": " + e.what();
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::size_t workers) {
  validate(spec);
  std::vector<double> ps = spec.p_values;
  std::sort(ps.begin(), ps.end());
  const std::size_t ns = spec.strategies.size();
  std::vector<SweepRow> rows(ps.size() * ns);

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t job = next++; job < rows.size(); job = next++) {
      rows[job] = run_bench_cell(ps[job / ns], spec.mode, spec.strategies[job % ns]);
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, rows.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace robbo
