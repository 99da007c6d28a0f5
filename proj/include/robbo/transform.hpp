#ifndef ROBBO_TRANSFORM_HPP
#define ROBBO_TRANSFORM_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace robbo {

/// Per-objective error tolerances requested by the decision maker.
struct ToleranceVec {
  double delta1 = 1.0;
  double delta2 = 1.0;
};

/// A point in criterion space (f1, f2).
struct ObjectivePoint {
  double z1 = 0.0;
  double z2 = 0.0;
};

/// A point in the tolerance-scaled, rotated frame (v, q).
struct RotatedPoint {
  double v = 0.0;
  double q = 0.0;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Scaling by 1/delta followed by a clockwise rotation of pi/4:
///
///   [v q]^T = (sqrt(2)/2) [[1, -1], [1, 1]] diag(1/delta1, 1/delta2) [z1 z2]^T
///
/// Along a Pareto front v grows with z1, and the front becomes a function
/// q = h(v) whose slope magnitude stays below one.
class Transform {
 public:
  explicit Transform(ToleranceVec delta);

  [[nodiscard]] const ToleranceVec& delta() const noexcept { return delta_; }
  [[nodiscard]] const Matrix2& forward() const noexcept { return forward_; }
  [[nodiscard]] const Matrix2& inverse() const noexcept { return inverse_; }

  [[nodiscard]] RotatedPoint to_vq(ObjectivePoint p) const;
  [[nodiscard]] ObjectivePoint from_vq(RotatedPoint r) const;

 private:
  ToleranceVec delta_;
  Matrix2 forward_{};
  Matrix2 inverse_{};
};

/// Throws Error(InvalidTolerance) unless both entries are finite and positive.
void validate_tolerance(const ToleranceVec& delta);

Transform make_transform(ToleranceVec delta);
RotatedPoint to_vq(const Transform& t, ObjectivePoint p);
ObjectivePoint from_vq(const Transform& t, RotatedPoint r);

/// One Pareto sample, held in both coordinate systems. `x` is an optional
/// decision vector passed through from the sampler.
struct Sample {
  ObjectivePoint z;
  RotatedPoint r;
  std::vector<double> x;
};

/// Relative (to the anchor v-span) distance under which two samples are the same.
inline constexpr double kDuplicateTolerance = 1e-9;
/// Relative slack beyond the anchors within which a v query is clamped.
inline constexpr double kDomainSlack = 1e-12;

/// Ordered set of mutually non-dominated Pareto samples. The first and last
/// entries are the anchors. Immutable once built; `with_sample` returns a copy.
class Dataset {
 public:
  [[nodiscard]] const ToleranceVec& delta() const noexcept { return transform_.delta(); }
  [[nodiscard]] const Transform& transform() const noexcept { return transform_; }
  [[nodiscard]] std::span<const Sample> samples() const noexcept { return samples_; }
  [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
  [[nodiscard]] const Sample& operator[](std::size_t i) const { return samples_[i]; }

  [[nodiscard]] const Sample& anchor1() const { return samples_.front(); }
  [[nodiscard]] const Sample& anchor2() const { return samples_.back(); }
  [[nodiscard]] double v_min() const { return samples_.front().r.v; }
  [[nodiscard]] double v_max() const { return samples_.back().r.v; }
  [[nodiscard]] double span() const { return v_max() - v_min(); }

  /// Objective ranges spanned by the anchors.
  [[nodiscard]] double range1() const { return anchor2().z.z1 - anchor1().z.z1; }
  [[nodiscard]] double range2() const { return anchor1().z.z2 - anchor2().z.z2; }

  /// Maps v into [v_min, v_max] when within kDomainSlack*span of it,
  /// otherwise throws Error(OutOfDomain).
  [[nodiscard]] double clamp_to_domain(double v) const;

  /// Index of the first sample whose v is >= the (clamped) query v.
  [[nodiscard]] std::size_t upper_index(double v) const;

  /// Index of a sample within the duplicate tolerance of v, or size().
  [[nodiscard]] std::size_t find_duplicate(double v) const;

  /// Inserts a new interior sample. The caller should validate first;
  /// invariant violations throw.
  [[nodiscard]] Dataset with_sample(Sample s) const;

  /// Builds from criterion-space points (any order). Throws
  /// InsufficientData, DuplicateSample or NonParetoDataset.
  static Dataset build(const ToleranceVec& delta, std::vector<Sample> samples);

 private:
  Dataset(Transform t, std::vector<Sample> samples)
      : transform_(std::move(t)), samples_(std::move(samples)) {}

  Transform transform_;
  std::vector<Sample> samples_;
};

Dataset build_dataset(const ToleranceVec& delta, const std::vector<ObjectivePoint>& points);

/// Builds a dataset directly from rotated coordinates; criterion-space values
/// come from the inverse transform.
Dataset build_dataset_rotated(const ToleranceVec& delta, const std::vector<RotatedPoint>& points);

/// Strict Pareto dominance for minimization.
[[nodiscard]] bool dominates(ObjectivePoint a, ObjectivePoint b);

}  // namespace robbo

#endif  // ROBBO_TRANSFORM_HPP
