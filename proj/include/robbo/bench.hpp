#ifndef ROBBO_BENCH_HPP
#define ROBBO_BENCH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "robbo/algorithms.hpp"

namespace robbo {

enum class ToleranceMode { Equal, Skew };

std::string_view to_string(ToleranceMode m);
ToleranceMode parse_tolerance_mode(std::string_view name);
/// Tolerances as fractions of the anchor ranges: (1.5%, 1.5%) or (1%, 3%).
std::pair<double, double> mode_percentages(ToleranceMode m);

struct BenchStrategy {
  enum class Kind { Iterative, EpsilonConstraint, Nbi };
  Kind kind = Kind::Iterative;
  StrategySpec spec;
};

std::string strategy_name(const BenchStrategy& s);
BenchStrategy parse_bench_strategy(std::string_view name);
/// The five iterative strategies followed by ec and nbi.
std::vector<BenchStrategy> default_bench_strategies();

/// n log-spaced exponents from 0.01 to 7, both included.
std::vector<double> default_p_grid(std::size_t n = 40);

struct SweepSpec {
  std::vector<double> p_values = default_p_grid();
  ToleranceMode mode = ToleranceMode::Equal;
  std::vector<BenchStrategy> strategies = default_bench_strategies();
};

void validate(const SweepSpec& spec);

struct SweepRow {
  double p = 0.0;
  std::string strategy;
  std::optional<std::size_t> sample_count;
  std::optional<std::size_t> planner_bound;
  std::optional<double> final_lambda;
  std::string terminated_by;
  std::string error;
};

/// One row per (p, strategy), ordered by p then by strategy order.
/// A failing run fills the row's error and the sweep goes on.
/// `workers` = 0 picks the hardware concurrency.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::size_t workers = 0);

SweepRow run_bench_cell(double p, ToleranceMode mode, const BenchStrategy& strategy);

}  // namespace robbo

#endif  // ROBBO_BENCH_HPP
