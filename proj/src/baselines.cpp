#include "robbo/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "robbo/error.hpp"
#include "robbo/planner.hpp"

namespace robbo {

namespace {

constexpr double kMergeTolerance = 1e-9;
constexpr std::size_t kScanPoints = 4001;
// Relative slack on the nearest-neighbour gap test, for rounding in the front solves.
constexpr double kGapSlack = 1e-9;

const AnalyticalFront& require_front(const Problem& problem) {
  if (!problem.backend) throw Error(ErrorKind::InvalidArgument, "problem has no sampler");
  const AnalyticalFront* front = problem.backend->analytical();
  if (front == nullptr) {
    throw Error(ErrorKind::UnsupportedBaseline, "baselines need a front known in closed form");
  }
  return *front;
}

BaselineResult finalize(std::vector<ObjectivePoint> pts, ObjectivePoint a1, ObjectivePoint a2) {
  std::sort(pts.begin(), pts.end(), [](ObjectivePoint a, ObjectivePoint b) {
    return a.z1 < b.z1 || (a.z1 == b.z1 && a.z2 > b.z2);
  });
  const double tol1 = kMergeTolerance * std::abs(a2.z1 - a1.z1);
  const double tol2 = kMergeTolerance * std::abs(a1.z2 - a2.z2);
  BaselineResult out;
  for (const auto& p : pts) {
    if (!out.points.empty() && std::abs(p.z1 - out.points.back().z1) <= tol1 &&
        std::abs(p.z2 - out.points.back().z2) <= tol2) {
      continue;
    }
    out.points.push_back(p);
  }
  return out;
}

/// Sweep positions from lo to hi with the given step, both ends included.
std::vector<double> sweep(double lo, double hi, double step) {
  std::vector<double> out;
  const double n = guarded_ceil((hi - lo) / step);
  const auto count = static_cast<std::size_t>(std::max(0.0, n));
  for (std::size_t k = 0; k < count; ++k) out.push_back(lo + step * static_cast<double>(k));
  out.push_back(hi);
  return out;
}

}  // namespace

BaselineResult run_ec(const Problem& problem) {
  const AnalyticalFront& front = require_front(problem);
  validate_tolerance(problem.delta);
  const ObjectivePoint a1 = front.at(0.0);
  const ObjectivePoint a2 = front.at(1.0);
  std::vector<ObjectivePoint> pts;
  // min f2 s.t. f1 <= c
  for (double c : sweep(a1.z1, a2.z1, problem.delta.delta1)) {
    pts.push_back(solve_on_front(front, [](ObjectivePoint z) { return z.z1; }, c));
  }
  // min f1 s.t. f2 <= c
  for (double c : sweep(a2.z2, a1.z2, problem.delta.delta2)) {
    pts.push_back(solve_on_front(front, [](ObjectivePoint z) { return -z.z2; }, -c));
  }
  return finalize(std::move(pts), a1, a2);
}

BaselineResult run_nbi(const Problem& problem) {
  const AnalyticalFront& front = require_front(problem);
  validate_tolerance(problem.delta);
  const ObjectivePoint a1 = front.at(0.0);
  const ObjectivePoint a2 = front.at(1.0);
  const double r1 = a2.z1 - a1.z1;
  const double r2 = a1.z2 - a2.z2;
  const double length = std::hypot(r1, r2);
  if (length == 0.0) return finalize({a1}, a1, a2);
  const double beta = std::atan2(r2, r1);
  const double spacing = std::min(problem.delta.delta1 * std::cos(beta), problem.delta.delta2 * std::sin(beta));
  const double u1 = r1 / length;
  const double u2 = -r2 / length;
  const auto projection = [&](ObjectivePoint z) { return (z.z1 - a1.z1) * u1 + (z.z2 - a1.z2) * u2; };
  const auto segments = static_cast<std::size_t>(std::max(1.0, guarded_ceil(length / spacing)));
  std::vector<ObjectivePoint> pts{a1};
  for (std::size_t k = 1; k < segments; ++k) {
    const double s = length * static_cast<double>(k) / static_cast<double>(segments);
    pts.push_back(solve_on_front(front, projection, s));
  }
  pts.push_back(a2);
  return finalize(std::move(pts), a1, a2);
}

BaselineResult run_convex_combination(const Problem& problem, std::size_t n_budget) {
  const AnalyticalFront& front = require_front(problem);
  if (n_budget < 2) throw Error(ErrorKind::InvalidArgument, "budget must be at least 2 samples");
  const ObjectivePoint a1 = front.at(0.0);
  const ObjectivePoint a2 = front.at(1.0);

  std::vector<ObjectivePoint> scan(kScanPoints);
  for (std::size_t i = 0; i < kScanPoints; ++i) {
    scan[i] = front.at(static_cast<double>(i) / static_cast<double>(kScanPoints - 1));
  }

  std::vector<ObjectivePoint> pts;
  for (std::size_t k = 0; k < n_budget; ++k) {
    const double beta = static_cast<double>(k) / static_cast<double>(n_budget - 1);
    const auto cost = [beta](ObjectivePoint z) { return beta * z.z1 + (1.0 - beta) * z.z2; };
    std::size_t best = 0;
    for (std::size_t i = 1; i < kScanPoints; ++i) {
      if (cost(scan[i]) < cost(scan[best])) best = i;
    }
    ObjectivePoint winner = scan[best];
    if (best != 0 && best != kScanPoints - 1) {
      // golden-section refinement inside the bracketing scan cells
      const double step = 1.0 / static_cast<double>(kScanPoints - 1);
      double lo = step * static_cast<double>(best - 1);
      double hi = step * static_cast<double>(best + 1);
      const double g = (std::sqrt(5.0) - 1.0) / 2.0;
      double x1 = hi - g * (hi - lo);
      double x2 = lo + g * (hi - lo);
      double c1 = cost(front.at(x1));
      double c2 = cost(front.at(x2));
      for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
        if (c1 <= c2) {
          hi = x2;
          x2 = x1;
          c2 = c1;
          x1 = hi - g * (hi - lo);
          c1 = cost(front.at(x1));
        } else {
          lo = x1;
          x1 = x2;
          c1 = c2;
          x2 = lo + g * (hi - lo);
          c2 = cost(front.at(x2));
        }
      }
      const ObjectivePoint refined = front.at(0.5 * (lo + hi));
      if (cost(refined) < cost(winner)) winner = refined;
    }
    pts.push_back(winner);
  }
  return finalize(std::move(pts), a1, a2);
}

bool verify_nn_condition(const std::vector<ObjectivePoint>& points, const ToleranceVec& delta) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (std::abs(points[i].z1 - points[i - 1].z1) > delta.delta1 * (1.0 + kGapSlack)) return false;
    if (std::abs(points[i].z2 - points[i - 1].z2) > delta.delta2 * (1.0 + kGapSlack)) return false;
  }
  return true;
}

bool verify_nn_condition(const Dataset& d, const ToleranceVec& delta) {
  std::vector<ObjectivePoint> pts;
  pts.reserve(d.size());
  for (const auto& s : d.samples()) pts.push_back(s.z);
  return verify_nn_condition(pts, delta);
}

}  // namespace robbo
