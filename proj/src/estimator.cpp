#include "robbo/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "robbo/error.hpp"

namespace robbo {

std::string_view to_string(EstimateKind kind) {
  return kind == EstimateKind::Central ? "central" : "linear";
}

EstimateKind parse_estimate_kind(std::string_view name) {
  if (name == "central") return EstimateKind::Central;
  if (name == "linear") return EstimateKind::Linear;
  throw Error(ErrorKind::InvalidArgument, "unknown estimate kind '" + std::string(name) + "'");
}

double Estimate::q_at(double v) const {
  const double vc = dataset_.clamp_to_domain(v);
  if (kind_ == EstimateKind::Central) {
    const BoundPair b = bounds_at(dataset_, vc);
    return 0.5 * (b.upper + b.lower);
  }
  const std::size_t j = dataset_.upper_index(vc);
  const RotatedPoint hi = dataset_[j].r;
  if (hi.v == vc) return hi.q;
  const RotatedPoint lo = dataset_[j - 1].r;
  return lo.q + (hi.q - lo.q) / (hi.v - lo.v) * (vc - lo.v);
}

RotatedPoint estimate_at(const Estimate& e, double v) {
  const double vc = e.dataset().clamp_to_domain(v);
  return {vc, e.q_at(vc)};
}

double v_at_f1(const Estimate& e, double f1) {
  const Dataset& d = e.dataset();
  const Transform& t = d.transform();
  const auto f1_at = [&](double v) { return t.from_vq({v, e.q_at(v)}).z1; };
  double lo = d.v_min();
  double hi = d.v_max();
  const double f_lo = d.anchor1().z.z1;
  const double f_hi = d.anchor2().z.z1;
  const double slack = kDomainSlack * std::max(1.0, std::abs(f_hi - f_lo));
  if (!(f1 >= f_lo - slack && f1 <= f_hi + slack)) {
    throw Error(ErrorKind::OutOfDomain, "f1 lies outside the anchors' range");
  }
  if (f1 <= f_lo) return lo;
  if (f1 >= f_hi) return hi;
  for (int it = 0; it < kBisectionMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f1_at(mid) < f1 ? lo : hi) = mid;
  }
  return std::abs(f1_at(lo) - f1) <= std::abs(f1_at(hi) - f1) ? lo : hi;
}

std::vector<CurveRow> estimate_curve(const Estimate& e, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "curve needs at least 2 points");
  const Dataset& d = e.dataset();
  const Transform& t = d.transform();
  std::vector<CurveRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = i + 1 == n ? d.v_max()
                                : d.v_min() + d.span() * static_cast<double>(i) /
                                                  static_cast<double>(n - 1);
    const double q = e.q_at(v);
    const ObjectivePoint z = t.from_vq({v, q});
    rows.push_back({v, q, z.z1, z.z2, local_error(d, v)});
  }
  return rows;
}

double worst_case_interval_error(const Interval& i, EstimateKind kind) {
  const double w = i.width();
  const double rise = std::abs(i.rise());
  const double central = 0.5 * (w - rise);
  return kind == EstimateKind::Central ? central : central * (1.0 + rise / w);
}

RealizationReport realize(const Problem& problem, const Dataset& d, RotatedPoint candidate) {
  const Transform& t = d.transform();
  const ToleranceVec& dd = d.delta();
  if (dd.delta1 != problem.delta.delta1 || dd.delta2 != problem.delta.delta2) {
    throw Error(ErrorKind::InvalidArgument, "problem and dataset use different tolerances");
  }
  const double v = d.clamp_to_domain(candidate.v);
  const SampleResult s = sample_at(problem, v, d.span());
  const double h = t.to_vq(s.z).q;
  const BoundPair b = bounds_at(d, v);
  const double slack = kDuplicateTolerance * d.span();
  if (h < b.lower - slack || h > b.upper + slack) {
    std::ostringstream os;
    os.precision(17);
    os << "realized q=" << h << " at v=" << v << " violates the bounds [" << b.lower << ", "
       << b.upper << "]";
    throw Error(ErrorKind::InconsistentSample, os.str());
  }
  RealizationReport rep;
  rep.candidate = t.from_vq({v, candidate.q});
  rep.realized = t.from_vq({v, h});
  rep.sampled = s.z;
  rep.x = s.x;
  // The error has no v component, so it maps through the second column of W^-1.
  const double dq = candidate.q - h;
  rep.eps1 = t.inverse()[0][1] * dq;
  rep.eps2 = t.inverse()[1][1] * dq;
  if (rep.eps2 != 0.0) rep.ratio = std::abs(rep.eps1) / std::abs(rep.eps2);
  return rep;
}

RealizationReport realize(const Problem& problem, const Estimate& e, double v) {
  return realize(problem, e.dataset(), estimate_at(e, v));
}

std::pair<double, double> error_bands(const Dataset& d, double v) {
  const double lam = local_error(d, v) * (std::numbers::sqrt2 / 2.0);
  return {d.delta().delta1 * lam, d.delta().delta2 * lam};
}

std::pair<double, double> central_error_bands(const Dataset& d, double v) {
  const auto [b1, b2] = error_bands(d, v);
  return {0.5 * b1, 0.5 * b2};
}

}  // namespace robbo
