#ifndef ROBBO_PLANNER_HPP
#define ROBBO_PLANNER_HPP

#include <cstddef>

#include "robbo/transform.hpp"

namespace robbo {

/// Objective ranges spanned by the anchors.
struct RangeSpec {
  double range1 = 0.0;  // z1(a2) - z1(a1)
  double range2 = 0.0;  // z2(a1) - z2(a2)
};

struct BudgetSpec {
  std::size_t n_budget = 2;
  double alpha = 1.0;  // wanted delta1 / delta2
};

RangeSpec ranges_of(const Dataset& d);

/// Anchor distance on the v-axis: (sqrt(2)/2) (range1/delta1 + range2/delta2).
double v_span(const ToleranceVec& delta, const RangeSpec& ranges);

// Every count below includes the two anchors and is at least 2.

/// Samples needed so that every front in the feasible set is within tolerance
/// (uniform spacing of at most sqrt(2) in v).
std::size_t min_samples_robust(const ToleranceVec& delta, const RangeSpec& ranges);

/// Same for the central estimate (spacing of at most 2 sqrt(2)); the
/// worst-case length of the main algorithm.
std::size_t min_samples_central(const ToleranceVec& delta, const RangeSpec& ranges);

/// Epochs of greedy bisection needed on a flat rotated front of v-length `span`.
std::size_t greedy_epochs(double span);
std::size_t max_samples_greedy(const ToleranceVec& delta, const RangeSpec& ranges);

/// Worst case for epsilon-constraint sweeps in both objectives.
std::size_t samples_ec(const ToleranceVec& delta, const RangeSpec& ranges);

/// Worst case for normal boundary intersection, by the sign of
/// alpha*gamma - 1 with alpha = delta1/delta2 and gamma = range1/range2.
std::size_t samples_nbi(const ToleranceVec& delta, const RangeSpec& ranges);

/// Tolerances with ratio alpha guaranteed by a budget of n samples.
ToleranceVec budget_tolerances(const BudgetSpec& budget, const RangeSpec& ranges);

/// q-offset between the anchors of the test front family for tolerances
/// given as fractions of the ranges.
double q0_offset(double pct1, double pct2);

/// ceil() that snaps values within 1e-9 (relative) of an integer onto it.
double guarded_ceil(double x);

}  // namespace robbo

#endif  // ROBBO_PLANNER_HPP
