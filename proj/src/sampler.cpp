#include "robbo/sampler.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "robbo/bounds.hpp"
#include "robbo/error.hpp"

namespace robbo {

FrontFamily::FrontFamily(double p, double scale) : p_(p), scale_(scale) {
  if (!(std::isfinite(p) && p > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "front exponent p must be positive");
  }
  if (!(std::isfinite(scale) && scale > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "front scale must be positive");
  }
}

ObjectivePoint FrontFamily::at(double t) const {
  if (t <= 0.0) return {0.0, scale_};
  if (t >= 1.0) return {scale_, 0.0};
  const double half_pi = std::numbers::pi / 2.0;
  const double e = 2.0 / p_;
  return {scale_ * std::pow(std::sin(t * half_pi), e),
          scale_ * std::pow(std::sin((1.0 - t) * half_pi), e)};
}

double FrontFamily::f2_of_f1(double f1) const {
  if (!(f1 >= 0.0 && f1 <= scale_)) {
    std::ostringstream os;
    os << "f1=" << f1 << " outside [0, " << scale_ << "]";
    throw Error(ErrorKind::OutOfDomain, os.str());
  }
  if (f1 == 0.0) return scale_;
  if (f1 == scale_) return 0.0;
  // Normalized form keeps large p from overflowing.
  const double ratio = std::pow(f1 / scale_, p_);
  return scale_ * std::pow(std::max(0.0, 1.0 - ratio), 1.0 / p_);
}

std::string FrontFamily::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "front p=" << p_;
  return os.str();
}

double front_value(const FrontFamily& fam, double f1) { return fam.f2_of_f1(f1); }

FunctionFront::FunctionFront(double f1_min, double f1_max, std::function<double(double)> g,
                             std::string name)
    : f1_min_(f1_min), f1_max_(f1_max), g_(std::move(g)), name_(std::move(name)) {
  if (!(f1_min < f1_max)) {
    throw Error(ErrorKind::InvalidArgument, "function front needs f1_min < f1_max");
  }
}

ObjectivePoint FunctionFront::at(double t) const {
  double f1 = f1_min_;
  if (t >= 1.0) {
    f1 = f1_max_;
  } else if (t > 0.0) {
    f1 = f1_min_ + t * (f1_max_ - f1_min_);
  }
  return {f1, g_(f1)};
}

double FunctionFront::f2_of_f1(double f1) const {
  if (!(f1 >= f1_min_ && f1 <= f1_max_)) {
    throw Error(ErrorKind::OutOfDomain, "f1 outside the function front's domain");
  }
  return g_(f1);
}

ObjectivePoint solve_on_front(const AnalyticalFront& front,
                              const std::function<double(ObjectivePoint)>& phi, double target) {
  double lo = 0.0;
  double hi = 1.0;
  const ObjectivePoint p_lo = front.at(lo);
  const ObjectivePoint p_hi = front.at(hi);
  if (target <= phi(p_lo)) return p_lo;
  if (target >= phi(p_hi)) return p_hi;
  double f_lo = phi(p_lo) - target;
  double f_hi = phi(p_hi) - target;
  for (int it = 0; it < kBisectionMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = phi(front.at(mid)) - target;
    if (f_mid == 0.0) return front.at(mid);
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  return std::abs(f_lo) <= std::abs(f_hi) ? front.at(lo) : front.at(hi);
}

AnalyticalBackend::AnalyticalBackend(std::shared_ptr<const AnalyticalFront> front)
    : front_(std::move(front)) {
  if (!front_) throw Error(ErrorKind::InvalidArgument, "null analytical front");
}

SampleResult AnalyticalBackend::anchor(AnchorWhich which) const {
  return {front_->at(which == AnchorWhich::A1 ? 0.0 : 1.0), {}};
}

SampleResult AnalyticalBackend::sample(const SampleRequest& request) const {
  const Transform t(request.delta);
  const auto v_of = [&t](ObjectivePoint z) { return t.to_vq(z).v; };
  const double v_lo = v_of(front_->at(0.0));
  const double v_hi = v_of(front_->at(1.0));
  const double span = v_hi - v_lo;
  const double slack = kDomainSlack * span;
  if (!(request.tilde_v >= v_lo - slack && request.tilde_v <= v_hi + slack)) {
    throw Error(ErrorKind::OutOfDomain, "requested v outside the anchor span");
  }
  const ObjectivePoint z = solve_on_front(*front_, v_of, request.tilde_v);
  if (std::abs(v_of(z) - request.tilde_v) > kBisectionTolerance * span) {
    std::ostringstream os;
    os.precision(17);
    os << "bisection did not bracket v=" << request.tilde_v << " on " << front_->describe();
    throw Error(ErrorKind::InconsistentSample, os.str());
  }
  return {z, {}};
}

Problem make_front_problem(double p, ToleranceVec delta) {
  validate_tolerance(delta);
  return {delta, std::make_shared<AnalyticalBackend>(std::make_shared<FrontFamily>(p))};
}

ObjectivePoint sample_anchor(const Problem& problem, AnchorWhich which) {
  return problem.backend->anchor(which).z;
}

SampleResult sample_at(const Problem& problem, double tilde_v, double v_span) {
  SampleResult res = problem.backend->sample({tilde_v, problem.delta});
  const Transform t(problem.delta);
  const double v = t.to_vq(res.z).v;
  if (!(std::abs(v - tilde_v) <= kSampleMatchTolerance * v_span)) {
    std::ostringstream os;
    os.precision(17);
    os << "sampler returned v=" << v << " for requested v=" << tilde_v;
    throw Error(ErrorKind::InconsistentSample, os.str());
  }
  return res;
}

ToleranceVec resolve_percent_tolerances(const Backend& backend, double pct1, double pct2) {
  const ObjectivePoint a1 = backend.anchor(AnchorWhich::A1).z;
  const ObjectivePoint a2 = backend.anchor(AnchorWhich::A2).z;
  const ToleranceVec delta{pct1 * (a2.z1 - a1.z1), pct2 * (a1.z2 - a2.z2)};
  validate_tolerance(delta);
  return delta;
}

Validation validate_sample(const Dataset& d, const SampleResult& s) {
  using Status = Validation::Status;
  const RotatedPoint r = d.transform().to_vq(s.z);
  const double slack = kDuplicateTolerance * d.span();
  if (r.v < d.v_min() - kDomainSlack * d.span() || r.v > d.v_max() + kDomainSlack * d.span()) {
    return {Status::Rejected, d.size(), "sample lies outside the anchor span"};
  }
  const std::size_t dup = d.find_duplicate(r.v);
  if (dup != d.size() && std::abs(d[dup].r.q - r.q) <= slack) {
    return {Status::Merged, dup, "duplicate of an existing sample"};
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (dominates(s.z, d[i].z)) return {Status::Rejected, i, "sample dominates an existing sample"};
    if (dominates(d[i].z, s.z)) return {Status::Rejected, i, "sample is dominated by an existing sample"};
  }
  const BoundPair b = bounds_at(d, r.v);
  if (r.q < b.lower - slack || r.q > b.upper + slack) {
    return {Status::Rejected, d.size(), "sample lies outside the optimal bounds"};
  }
  return {Status::Accepted, d.size(), {}};
}

}  // namespace robbo
