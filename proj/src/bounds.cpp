#include "robbo/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace robbo {

BoundPair bounds_at(const Dataset& d, double v) {
  const double vc = d.clamp_to_domain(v);
  const std::size_t j = d.upper_index(vc);
  const RotatedPoint hi = d[j].r;
  if (hi.v == vc) return {hi.q, hi.q};
  // j > 0 because vc >= v_min and the first sample sits at v_min.
  const RotatedPoint lo = d[j - 1].r;
  const double dl = vc - lo.v;
  const double dr = hi.v - vc;
  return {std::max(lo.q - dl, hi.q - dr), std::min(lo.q + dl, hi.q + dr)};
}

double local_error(const Dataset& d, double v) {
  const BoundPair b = bounds_at(d, v);
  return b.upper - b.lower;
}

std::vector<Interval> intervals(const Dataset& d) {
  std::vector<Interval> out;
  out.reserve(d.size() - 1);
  for (std::size_t i = 1; i < d.size(); ++i) out.push_back({d[i - 1].r, d[i].r});
  return out;
}

double global_error(const Dataset& d) {
  double best = 0.0;
  for (std::size_t i = 1; i < d.size(); ++i) {
    const double w = d[i].r.v - d[i - 1].r.v;
    const double rise = d[i].r.q - d[i - 1].r.q;
    best = std::max(best, w - std::abs(rise));
  }
  return best;
}

WorstSegment worst_segment(const Interval& i) {
  const double mid = 0.5 * (i.left.v + i.right.v);
  const double rise = i.rise();
  return {mid + 0.5 * rise, mid - 0.5 * rise, i.width() - std::abs(rise)};
}

}  // namespace robbo
