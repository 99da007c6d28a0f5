#ifndef ROBBO_BOUNDS_HPP
#define ROBBO_BOUNDS_HPP

#include <vector>

#include "robbo/transform.hpp"

namespace robbo {

/// Tightest envelope, at one v, of every front compatible with the data.
struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
};

/// Gap between two consecutive samples on the v-axis.
struct Interval {
  RotatedPoint left;
  RotatedPoint right;

  [[nodiscard]] double width() const { return right.v - left.v; }  // V
  [[nodiscard]] double rise() const { return right.q - left.q; }   // Q
};

/// Where the bound cones of an interval's end samples cross.
///
/// `v_upper` is where the two upper cones meet, `v_lower` where the two lower
/// cones meet. The local error equals `lambda_max` on the whole segment between them.
struct WorstSegment {
  double v_upper = 0.0;
  double v_lower = 0.0;
  double lambda_max = 0.0;

  [[nodiscard]] double lo() const { return v_upper < v_lower ? v_upper : v_lower; }
  [[nodiscard]] double hi() const { return v_upper < v_lower ? v_lower : v_upper; }
};

BoundPair bounds_at(const Dataset& d, double v);
double local_error(const Dataset& d, double v);

/// Max over v of local_error, in closed form: max over intervals of V - |Q|.
double global_error(const Dataset& d);

std::vector<Interval> intervals(const Dataset& d);
WorstSegment worst_segment(const Interval& i);

}  // namespace robbo

#endif  // ROBBO_BOUNDS_HPP
