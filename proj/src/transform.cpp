#include "robbo/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "robbo/error.hpp"

namespace robbo {

namespace {

constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;

void require_finite(double a, double b, const char* what) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::InvalidArgument, std::string("non-finite ") + what);
  }
}

std::string describe(ObjectivePoint p) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << p.z1 << ", " << p.z2 << ")";
  return os.str();
}

}  // namespace

void validate_tolerance(const ToleranceVec& delta) {
  if (!(std::isfinite(delta.delta1) && std::isfinite(delta.delta2) && delta.delta1 > 0.0 &&
        delta.delta2 > 0.0)) {
    std::ostringstream os;
    os << "tolerances must be finite and positive, got (" << delta.delta1 << ", " << delta.delta2
       << ")";
    throw Error(ErrorKind::InvalidTolerance, os.str());
  }
}

Transform::Transform(ToleranceVec delta) : delta_(delta) {
  validate_tolerance(delta);
  const double a = 1.0 / delta.delta1;
  const double b = 1.0 / delta.delta2;
  forward_ = {{{kHalfSqrt2 * a, -kHalfSqrt2 * b}, {kHalfSqrt2 * a, kHalfSqrt2 * b}}};
  const double c = delta.delta1 / std::numbers::sqrt2;
  const double d = delta.delta2 / std::numbers::sqrt2;
  inverse_ = {{{c, c}, {-d, d}}};
}

RotatedPoint Transform::to_vq(ObjectivePoint p) const {
  require_finite(p.z1, p.z2, "objective point");
  return {forward_[0][0] * p.z1 + forward_[0][1] * p.z2,
          forward_[1][0] * p.z1 + forward_[1][1] * p.z2};
}

ObjectivePoint Transform::from_vq(RotatedPoint r) const {
  require_finite(r.v, r.q, "rotated point");
  return {inverse_[0][0] * r.v + inverse_[0][1] * r.q,
          inverse_[1][0] * r.v + inverse_[1][1] * r.q};
}

Transform make_transform(ToleranceVec delta) { return Transform(delta); }
RotatedPoint to_vq(const Transform& t, ObjectivePoint p) { return t.to_vq(p); }
ObjectivePoint from_vq(const Transform& t, RotatedPoint r) { return t.from_vq(r); }

bool dominates(ObjectivePoint a, ObjectivePoint b) {
  return a.z1 <= b.z1 && a.z2 <= b.z2 && (a.z1 < b.z1 || a.z2 < b.z2);
}

double Dataset::clamp_to_domain(double v) const {
  const double slack = kDomainSlack * span();
  if (!std::isfinite(v) || v < v_min() - slack || v > v_max() + slack) {
    std::ostringstream os;
    os.precision(17);
    os << "v=" << v << " outside anchor span [" << v_min() << ", " << v_max() << "]";
    throw Error(ErrorKind::OutOfDomain, os.str());
  }
  return std::clamp(v, v_min(), v_max());
}

std::size_t Dataset::upper_index(double v) const {
  const double vc = clamp_to_domain(v);
  const auto it = std::lower_bound(samples_.begin(), samples_.end(), vc,
                                   [](const Sample& s, double x) { return s.r.v < x; });
  return static_cast<std::size_t>(it - samples_.begin());
}

std::size_t Dataset::find_duplicate(double v) const {
  const double tol = kDuplicateTolerance * span();
  const auto it = std::lower_bound(samples_.begin(), samples_.end(), v,
                                   [](const Sample& s, double x) { return s.r.v < x; });
  const auto idx = static_cast<std::size_t>(it - samples_.begin());
  if (idx < samples_.size() && std::abs(samples_[idx].r.v - v) <= tol) return idx;
  if (idx > 0 && std::abs(samples_[idx - 1].r.v - v) <= tol) return idx - 1;
  return samples_.size();
}

Dataset Dataset::with_sample(Sample s) const {
  s.r = transform_.to_vq(s.z);
  if (!(s.r.v > v_min() && s.r.v < v_max())) {
    throw Error(ErrorKind::OutOfDomain, "new sample must lie strictly inside the anchor span");
  }
  if (find_duplicate(s.r.v) != samples_.size()) {
    throw Error(ErrorKind::DuplicateSample, "sample " + describe(s.z) + " duplicates an existing one");
  }
  const std::size_t pos = upper_index(s.r.v);
  const Sample& left = samples_[pos - 1];
  const Sample& right = samples_[pos];
  if (!(left.z.z1 < s.z.z1 && s.z.z1 < right.z.z1 && left.z.z2 > s.z.z2 && s.z.z2 > right.z.z2)) {
    throw Error(ErrorKind::NonParetoDataset,
                "sample " + describe(s.z) + " is not mutually non-dominated with its neighbours");
  }
  std::vector<Sample> out;
  out.reserve(samples_.size() + 1);
  out.insert(out.end(), samples_.begin(), samples_.begin() + static_cast<std::ptrdiff_t>(pos));
  out.push_back(std::move(s));
  out.insert(out.end(), samples_.begin() + static_cast<std::ptrdiff_t>(pos), samples_.end());
  return Dataset(transform_, std::move(out));
}

Dataset Dataset::build(const ToleranceVec& delta, std::vector<Sample> samples) {
  Transform t(delta);
  if (samples.size() < 2) {
    throw Error(ErrorKind::InsufficientData, "a dataset needs at least the two anchor points");
  }
  for (auto& s : samples) s.r = t.to_vq(s.z);
  std::stable_sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) {
    return a.z.z1 < b.z.z1 || (a.z.z1 == b.z.z1 && a.z.z2 > b.z.z2);
  });
  const double span = samples.back().r.v - samples.front().r.v;
  const double tol = kDuplicateTolerance * span;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const Sample& a = samples[i - 1];
    const Sample& b = samples[i];
    const double dv = std::abs(b.r.v - a.r.v);
    if (dv < tol || (a.z.z1 == b.z.z1 && a.z.z2 == b.z.z2)) {
      throw Error(ErrorKind::DuplicateSample,
                  "samples " + describe(a.z) + " and " + describe(b.z) + " coincide");
    }
    if (!(a.z.z1 < b.z.z1 && a.z.z2 > b.z.z2)) {
      throw Error(ErrorKind::NonParetoDataset,
                  "samples " + describe(a.z) + " and " + describe(b.z) + " are not mutually non-dominated");
    }
  }
  return Dataset(std::move(t), std::move(samples));
}

Dataset build_dataset(const ToleranceVec& delta, const std::vector<ObjectivePoint>& points) {
  std::vector<Sample> samples;
  samples.reserve(points.size());
  for (const auto& p : points) samples.push_back({p, {}, {}});
  return Dataset::build(delta, std::move(samples));
}

Dataset build_dataset_rotated(const ToleranceVec& delta, const std::vector<RotatedPoint>& points) {
  const Transform t(delta);
  std::vector<ObjectivePoint> z;
  z.reserve(points.size());
  for (const auto& r : points) z.push_back(t.from_vq(r));
  return build_dataset(delta, z);
}

}  // namespace robbo
