#ifndef ROBBO_ESTIMATOR_HPP
#define ROBBO_ESTIMATOR_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "robbo/bounds.hpp"
#include "robbo/sampler.hpp"
#include "robbo/transform.hpp"

namespace robbo {

enum class EstimateKind { Central, Linear };

std::string_view to_string(EstimateKind kind);
EstimateKind parse_estimate_kind(std::string_view name);

/// A queryable front approximation over a dataset's anchor span.
///
/// Central: midpoint of the optimal bounds, which minimizes the worst-case
/// error (half the local error). Linear: straight lines between samples.
class Estimate {
 public:
  Estimate(Dataset dataset, EstimateKind kind) : dataset_(std::move(dataset)), kind_(kind) {}

  [[nodiscard]] const Dataset& dataset() const noexcept { return dataset_; }
  [[nodiscard]] EstimateKind kind() const noexcept { return kind_; }

  [[nodiscard]] double q_at(double v) const;

 private:
  Dataset dataset_;
  EstimateKind kind_;
};

RotatedPoint estimate_at(const Estimate& e, double v);

/// v at which the estimate reaches the given f1 (f1 is non-decreasing in v
/// along either estimate). Throws Error(OutOfDomain) outside the anchors' f1 range.
double v_at_f1(const Estimate& e, double f1);

struct CurveRow {
  double v = 0.0;
  double q = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double lambda = 0.0;
};

/// Estimate and local error on n uniformly spaced v values, anchors included.
std::vector<CurveRow> estimate_curve(const Estimate& e, std::size_t n);

/// Worst pointwise error of the estimate over one interval:
/// central (V-|Q|)/2, linear (V-|Q|)/2 * (1 + |Q|/V).
double worst_case_interval_error(const Interval& i, EstimateKind kind);

struct RealizationReport {
  ObjectivePoint candidate;
  /// W^-1 [candidate v, h(candidate v)], with h read off the sampled point.
  ObjectivePoint realized;
  /// The sampler's raw answer and decision vector.
  ObjectivePoint sampled;
  std::vector<double> x;
  /// candidate - realized.
  double eps1 = 0.0;
  double eps2 = 0.0;
  /// |eps1|/|eps2|; empty when the candidate is on the front.
  std::optional<double> ratio;
};

/// Realizes a candidate (given in rotated coordinates) at its own v. The
/// realized point must lie within the dataset's bounds, else
/// Error(InconsistentSample).
RealizationReport realize(const Problem& problem, const Dataset& d, RotatedPoint candidate);

/// Realizes the estimate's point at v.
RealizationReport realize(const Problem& problem, const Estimate& e, double v);

/// Worst-case per-objective bands from the local error:
/// delta_i * (sqrt(2)/2) * local_error(v).
std::pair<double, double> error_bands(const Dataset& d, double v);

/// Bands guaranteed for the central estimate (half of error_bands).
std::pair<double, double> central_error_bands(const Dataset& d, double v);

}  // namespace robbo

#endif  // ROBBO_ESTIMATOR_HPP
