#ifndef ROBBO_BASELINES_HPP
#define ROBBO_BASELINES_HPP

#include <cstddef>
#include <vector>

#include "robbo/sampler.hpp"
#include "robbo/transform.hpp"

namespace robbo {

/// Point set produced by a baseline, sorted by f1 and free of duplicates.
///
/// Not a Dataset: close to the axes of strongly convex fronts, neighbouring
/// points can agree in one objective after rounding.
struct BaselineResult {
  std::vector<ObjectivePoint> points;
  [[nodiscard]] std::size_t count() const noexcept { return points.size(); }
};

/// Epsilon-constraint sweeps with step delta1 on f1 and step delta2 on f2, merged.
BaselineResult run_ec(const Problem& problem);

/// Normal boundary intersection: front points whose projections on the
/// anchor segment are evenly spaced by at most min(delta1 cos b, delta2 sin b),
/// b = atan(range2 / range1).
BaselineResult run_nbi(const Problem& problem);

/// argmin of beta f1 + (1 - beta) f2 over the front for n evenly spaced beta in [0, 1].
BaselineResult run_convex_combination(const Problem& problem, std::size_t n_budget);

/// True iff every consecutive pair differs by at most delta1 in f1 and delta2 in f2.
bool verify_nn_condition(const std::vector<ObjectivePoint>& points, const ToleranceVec& delta);
bool verify_nn_condition(const Dataset& d, const ToleranceVec& delta);

}  // namespace robbo

#endif  // ROBBO_BASELINES_HPP
