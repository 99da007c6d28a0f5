#include "robbo/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "robbo/error.hpp"

namespace robbo {

namespace {

constexpr double kAlphaGammaTolerance = 1e-12;

void validate_ranges(const RangeSpec& r) {
  if (!(std::isfinite(r.range1) && std::isfinite(r.range2) && r.range1 >= 0.0 && r.range2 >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "objective ranges must be finite and non-negative");
  }
}

bool degenerate(const RangeSpec& r) { return r.range1 == 0.0 || r.range2 == 0.0; }

double normalized_sum(const ToleranceVec& delta, const RangeSpec& r) {
  validate_tolerance(delta);
  validate_ranges(r);
  return r.range1 / delta.delta1 + r.range2 / delta.delta2;
}

std::size_t count_from(double x) {
  return std::max<std::size_t>(2, static_cast<std::size_t>(guarded_ceil(x)) + 1);
}

}  // namespace

double guarded_ceil(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return r;
  return std::ceil(x);
}

RangeSpec ranges_of(const Dataset& d) { return {d.range1(), d.range2()}; }

double v_span(const ToleranceVec& delta, const RangeSpec& ranges) {
  return std::numbers::sqrt2 / 2.0 * normalized_sum(delta, ranges);
}

std::size_t min_samples_robust(const ToleranceVec& delta, const RangeSpec& ranges) {
  const double s = normalized_sum(delta, ranges);
  if (degenerate(ranges)) return 2;
  return count_from(s / 2.0);
}

std::size_t min_samples_central(const ToleranceVec& delta, const RangeSpec& ranges) {
  const double s = normalized_sum(delta, ranges);
  if (degenerate(ranges)) return 2;
  return count_from(s / 4.0);
}

std::size_t greedy_epochs(double span) {
  const double ratio = span / (2.0 * std::numbers::sqrt2);
  if (!(ratio > 1.0) || std::abs(ratio - 1.0) <= 1e-9) return 0;
  return static_cast<std::size_t>(guarded_ceil(std::log2(ratio)));
}

std::size_t max_samples_greedy(const ToleranceVec& delta, const RangeSpec& ranges) {
  const double span = v_span(delta, ranges);
  if (degenerate(ranges)) return 2;
  const std::size_t epochs = greedy_epochs(span);
  // 2 + sum_{i=1..n} 2^(i-1) = 2^n + 1
  return (std::size_t{1} << epochs) + 1;
}

std::size_t samples_ec(const ToleranceVec& delta, const RangeSpec& ranges) {
  const double s = normalized_sum(delta, ranges);
  if (degenerate(ranges)) return 2;
  return count_from(s);
}

std::size_t samples_nbi(const ToleranceVec& delta, const RangeSpec& ranges) {
  normalized_sum(delta, ranges);
  if (degenerate(ranges)) return 2;
  const double alpha = delta.delta1 / delta.delta2;
  const double gamma = ranges.range1 / ranges.range2;
  const double ag = alpha * gamma;
  const double a = ranges.range1 / delta.delta1;
  const double b = ranges.range2 / delta.delta2;
  if (std::abs(ag - 1.0) <= kAlphaGammaTolerance) return count_from(a + b);
  if (ag > 1.0) return count_from(a * ag + b);
  return count_from(a + b / ag);
}

ToleranceVec budget_tolerances(const BudgetSpec& budget, const RangeSpec& ranges) {
  if (budget.n_budget < 2) throw Error(ErrorKind::InvalidArgument, "budget must be at least 2 samples");
  if (!(std::isfinite(budget.alpha) && budget.alpha > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
  }
  validate_ranges(ranges);
  const double d1 = (ranges.range1 + budget.alpha * ranges.range2) /
                    (4.0 * static_cast<double>(budget.n_budget - 1));
  return {d1, d1 / budget.alpha};
}

double q0_offset(double pct1, double pct2) {
  if (!(pct1 > 0.0 && pct2 > 0.0)) throw Error(ErrorKind::InvalidTolerance, "percentages must be positive");
  return std::numbers::sqrt2 / 2.0 * (1.0 / pct1 - 1.0 / pct2);
}

}  // namespace robbo
