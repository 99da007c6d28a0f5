// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "robbo/algorithms.hpp"
#include "robbo/baselines.hpp"
#include "robbo/bench.hpp"
#include "robbo/bounds.hpp"
#include "robbo/estimator.hpp"
#include "robbo/planner.hpp"
#include "robbo/sampler.hpp"

using namespace robbo;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
// Relative slack for comparisons that hold with equality in exact arithmetic.
constexpr double kRoundoff = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && failures_++ < 5) msgs_ << (msgs_.tellp() > 0 ? "; " : "") << what;
  }
  [[nodiscard]] Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s): " + msgs_.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream msgs_;
};

Problem front(double p, std::pair<double, double> pct) {
  Problem problem = make_front_problem(p, {1.0, 1.0});
  problem.delta = resolve_percent_tolerances(*problem.backend, pct.first, pct.second);
  return problem;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// 1
Outcome anchors() {
  Check c;
  for (double p : default_p_grid(40)) {
    const Problem problem = make_front_problem(p, {1.0, 1.0});
    const ObjectivePoint a1 = sample_anchor(problem, AnchorWhich::A1);
    const ObjectivePoint a2 = sample_anchor(problem, AnchorWhich::A2);
    c.expect(a1.z1 == 0.0 && a1.z2 == 10.0 && a2.z1 == 10.0 && a2.z2 == 0.0, "anchor mismatch at p=" + fmt(p));
  }
  return c.outcome("40 exponents, anchors exact");
}

// 2
Outcome bounds_oracle() {
  Check c;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(3, 50);
  std::uniform_real_distribution<double> width(0.05, 3.0);
  std::uniform_real_distribution<double> slope(-0.95, 0.95);
  std::uniform_real_distribution<double> tol(0.2, 3.0);
  constexpr int kGrid = 10000;
  double worst_gap = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RotatedPoint> pts{{0.0, 0.0}};
    const int n = size(rng);
    for (int i = 1; i < n; ++i) {
      const double w = width(rng);
      pts.push_back({pts.back().v + w, pts.back().q + slope(rng) * w});
    }
    const Dataset d = build_dataset_rotated({tol(rng), tol(rng)}, pts);
    const double h = d.span() / (kGrid - 1);
    double dense = 0.0;
    BoundPair prev{};
    for (int i = 0; i < kGrid; ++i) {
      const double v = i + 1 == kGrid ? d.v_max() : d.v_min() + h * i;
      const BoundPair b = bounds_at(d, v);
      dense = std::max(dense, b.upper - b.lower);
      if (i > 0) {
        c.expect(std::abs(b.upper - prev.upper) <= h * (1 + kRoundoff), "upper bound not 1-Lipschitz");
        c.expect(std::abs(b.lower - prev.lower) <= h * (1 + kRoundoff), "lower bound not 1-Lipschitz");
      }
      prev = b;
    }
    const double gap = std::abs(global_error(d) - dense);
    worst_gap = std::max(worst_gap, gap / h);
    c.expect(gap <= 2 * h, "closed form differs from grid max by " + fmt(gap));
  }
  return c.outcome("200 datasets, max |closed form - grid| = " + fmt(worst_gap) + " grid steps");
}

// 3
Outcome guarantee_suite() {
  Check c;
  std::size_t runs = 0;
  std::size_t realizations = 0;
  for (auto mode : {ToleranceMode::Equal, ToleranceMode::Skew}) {
    for (double p : default_p_grid(40)) {
      const Problem problem = front(p, mode_percentages(mode));
      const RunReport r = run_robbo(problem);
      ++runs;
      const std::string at = " (p=" + fmt(p) + ", " + std::string(to_string(mode)) + ")";
      c.expect(r.final_lambda <= kGuaranteeThreshold * (1 + kGuaranteeSlack), "lambda above threshold" + at);
      c.expect(r.planner_bound && r.total_samples <= *r.planner_bound, "more samples than the bound" + at);
      const Estimate e(r.dataset, EstimateKind::Central);
      const double alpha = problem.delta.delta1 / problem.delta.delta2;
      for (int k = 0; k < 500; ++k) {
        const double v = r.dataset.v_min() + r.dataset.span() * k / 499.0;
        const RealizationReport rr = realize(problem, e, v);
        ++realizations;
        c.expect(std::abs(rr.eps1) <= problem.delta.delta1 * (1 + kGuaranteeSlack), "eps1 above delta1" + at);
        c.expect(std::abs(rr.eps2) <= problem.delta.delta2 * (1 + kGuaranteeSlack), "eps2 above delta2" + at);
        if (rr.ratio) c.expect(std::abs(*rr.ratio - alpha) <= 1e-9 * alpha, "unbalanced error" + at);
      }
    }
  }
  return c.outcome(std::to_string(runs) + " runs, " + std::to_string(realizations) + " realizations within tolerance");
}

// 4
Outcome worst_case_exactness() {
  Check c;
  const Problem problem = front(1.0, {0.015, 0.015});
  const RunReport central = run_robbo(problem);
  const RunReport greedy =
      run_variant(problem, {EstimateKind::Central, Selection::GreedyBisection, Termination::ToleranceGuarantee, {}});
  c.expect(central.total_samples == 35, "central-uniform used " + std::to_string(central.total_samples));
  c.expect(greedy.total_samples == 65, "greedy bisection used " + std::to_string(greedy.total_samples));
  c.expect(std::abs(v_span(problem.delta, {10, 10}) - 94.28) < 0.01, "unexpected v-span");
  return c.outcome("central-uniform " + std::to_string(central.total_samples) + ", greedy bisection " +
                   std::to_string(greedy.total_samples));
}

// 5
Outcome strategy_ordering() {
  Check c;
  std::size_t cells = 0;
  for (auto mode : {ToleranceMode::Equal, ToleranceMode::Skew}) {
    SweepSpec spec;
    spec.mode = mode;
    spec.strategies.clear();
    for (const auto& s : iterative_strategies()) spec.strategies.push_back({BenchStrategy::Kind::Iterative, s});
    const auto rows = run_sweep(spec);
    const std::size_t ns = spec.strategies.size();
    for (std::size_t i = 0; i < rows.size(); i += ns) {
      const SweepRow& central = rows[i];
      const std::string at = " (p=" + fmt(central.p) + ", " + std::string(to_string(mode)) + ")";
      c.expect(central.strategy == "central-uniform" && central.error.empty(), "central-uniform row missing" + at);
      for (std::size_t j = i + 1; j < i + ns; ++j) {
        ++cells;
        c.expect(rows[j].error.empty(), rows[j].strategy + " failed" + at);
        if (rows[j].strategy.rfind("linear", 0) != 0 || !rows[j].sample_count || !central.sample_count) continue;
        c.expect(*central.sample_count <= *rows[j].sample_count,
                 "central-uniform " + std::to_string(*central.sample_count) + " > " + rows[j].strategy + " " +
                     std::to_string(*rows[j].sample_count) + at);
      }
    }
    if (mode == ToleranceMode::Equal) {
      // nearest grid exponents to p = 1 on both sides
      for (std::size_t i = 0; i < rows.size(); i += ns) {
        if (rows[i].p < 0.8 || rows[i].p > 1.25) continue;
        const long a = static_cast<long>(rows[i].sample_count.value_or(0));
        const long b = static_cast<long>(rows[i + 2].sample_count.value_or(0));
        c.expect(std::abs(a - b) <= 1, "central/linear uniform differ by " + std::to_string(std::abs(a - b)) +
                                            " at p=" + fmt(rows[i].p));
      }
    }
  }
  return c.outcome("80 exponents x 4 linear variants compared (" + std::to_string(cells) + " cells)");
}

// 6
Outcome planner_cross_check() {
  Check c;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> range(1.0, 100.0);
  std::uniform_real_distribution<double> ratio(20.0, 500.0);
  double lo = INFINITY;
  double hi = 0.0;
  for (int i = 0; i < 100; ++i) {
    const RangeSpec r{range(rng), range(rng)};
    const ToleranceVec d{r.range1 / ratio(rng), r.range2 / ratio(rng)};
    const double x = static_cast<double>(samples_ec(d, r)) / static_cast<double>(min_samples_central(d, r));
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    c.expect(x >= 3.5 && x <= 4.5, "EC/central ratio " + fmt(x));
  }
  for (double alpha : {0.05, 0.2, 0.5, 0.9, 1.0, 1.1, 2.0, 5.0, 20.0}) {
    for (double gamma : {0.05, 0.2, 0.5, 0.9, 1.0, 1.1, 2.0, 5.0, 20.0}) {
      const RangeSpec r{10.0 * gamma, 10.0};
      const ToleranceVec d{0.1 * alpha, 0.1};
      c.expect(samples_nbi(d, r) >= samples_ec(d, r), "NBI below EC at alpha=" + fmt(alpha) + " gamma=" + fmt(gamma));
    }
  }
  return c.outcome("EC/central in [" + fmt(lo) + ", " + fmt(hi) + "], NBI >= EC on 81 (alpha, gamma) pairs");
}

// 7
Outcome budget_mode() {
  Check c;
  const ToleranceVec paper = budget_tolerances({30, 3.0 / 7.0}, {10.0, 10.0});
  c.expect(std::abs(paper.delta1 / paper.delta2 - 3.0 / 7.0) <= 1e-12, "ratio off");
  c.expect(std::abs(1.0284 / 2.3997 - 3.0 / 7.0) <= 1e-3, "reported instance ratio off");
  std::size_t runs = 0;
  for (double alpha : {3.0 / 7.0, 0.25, 1.0, 4.0}) {
    for (std::size_t n : {2, 3, 5, 10, 25, 60}) {
      for (double p : {0.05, 0.5, 1.0, 2.0, 7.0}) {
        const Problem problem = make_front_problem(p, {1.0, 1.0});
        const RunReport r = run_robbo_budget(problem, n, alpha);
        const ToleranceVec t = budget_tolerances({n, alpha}, {10.0, 10.0});
        ++runs;
        const std::string at = " (alpha=" + fmt(alpha) + ", n=" + std::to_string(n) + ", p=" + fmt(p) + ")";
        c.expect(std::abs(r.delta.delta1 / r.delta.delta2 - alpha) <= 1e-12 * alpha, "ratio" + at);
        c.expect(r.band1 <= t.delta1 * (1 + kRoundoff), "band1 " + fmt(r.band1) + " > " + fmt(t.delta1) + at);
        c.expect(r.band2 <= t.delta2 * (1 + kRoundoff), "band2 " + fmt(r.band2) + " > " + fmt(t.delta2) + at);
        c.expect(r.total_samples <= n, "budget exceeded" + at);
      }
    }
  }
  return c.outcome(std::to_string(runs) + " budget runs, bands within the budget tolerances");
}

// 8
Outcome baseline_contrast() {
  Check c;
  const Problem problem = make_front_problem(1.0, {1.0, 1.0});
  const BaselineResult cc = run_convex_combination(problem, 10);
  const RunReport r = run_robbo_budget(problem, 10, 1.0);
  const double va = r.dataset.span();
  c.expect(cc.count() <= 2, "convex combination produced " + std::to_string(cc.count()) + " points");
  c.expect(std::abs(r.final_lambda - va / 9) <= kRoundoff * va, "lambda " + fmt(r.final_lambda) + " vs " + fmt(va / 9));
  return c.outcome("convex combination " + std::to_string(cc.count()) + " distinct points; budget run lambda = V_a/9 = " +
                   fmt(r.final_lambda));
}

// 9

/// Continuous front through given rotated samples: the min (upper) or max
/// (lower) of cones with slope kappa < 1 around them.
struct Witness {
  std::vector<RotatedPoint> pts;
  double kappa;
  bool upper;
  [[nodiscard]] double operator()(double v) const {
    double best = upper ? INFINITY : -INFINITY;
    for (const auto& p : pts) {
      const double c = upper ? p.q + kappa * std::abs(v - p.v) : p.q - kappa * std::abs(v - p.v);
      best = upper ? std::min(best, c) : std::max(best, c);
    }
    return best;
  }
};

class WitnessFront final : public AnalyticalFront {
 public:
  WitnessFront(Witness h, Transform t) : h_(std::move(h)), t_(std::move(t)) {}
  [[nodiscard]] ObjectivePoint at(double s) const override {
    const double v = h_.pts.front().v + s * (h_.pts.back().v - h_.pts.front().v);
    return t_.from_vq({v, h_(v)});
  }
  [[nodiscard]] double f2_of_f1(double f1) const override {
    return solve_on_front(*this, [](ObjectivePoint z) { return z.z1; }, f1).z2;
  }
  [[nodiscard]] std::string describe() const override { return "witness"; }

 private:
  Witness h_;
  Transform t_;
};

double max_pair_slope(const std::vector<RotatedPoint>& pts) {
  double s = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      s = std::max(s, std::abs(pts[j].q - pts[i].q) / std::abs(pts[j].v - pts[i].v));
    }
  }
  return s;
}

Outcome theorem_condition() {
  Check c;
  const ToleranceVec delta{0.7, 1.9};
  const Transform t(delta);
  const auto dataset_with = [&](double lambda) {
    const double v = 2.0;
    return std::vector<RotatedPoint>{{0.0, 0.0}, {v, v - lambda}, {3.5, v - lambda - 0.4}, {5.0, v - lambda + 0.2}};
  };

  // above: lambda = sqrt(2) + 0.02
  {
    const auto pts = dataset_with(kSqrt2 + 0.02);
    const Dataset d = build_dataset_rotated(delta, pts);
    c.expect(global_error(d) > kSqrt2 && global_error(d) < kSqrt2 + 0.03, "above-threshold dataset mis-built");
    constexpr double kappa = 1.0 - 1e-3;
    c.expect(max_pair_slope(pts) < kappa, "cone slope does not dominate the data");
    const Witness hi{pts, kappa, true};
    const Witness lo{pts, kappa, false};
    for (const auto& p : pts) c.expect(hi(p.v) == p.q && lo(p.v) == p.q, "witness misses a sample");
    // the point where the witnesses are farthest apart
    double v_star = d.v_min();
    for (int k = 0; k <= 100000; ++k) {
      const double v = d.v_min() + d.span() * k / 100000.0;
      if (hi(v) - lo(v) > hi(v_star) - lo(v_star)) v_star = v;
    }
    c.expect(hi(v_star) - lo(v_star) > kSqrt2, "witness gap not above sqrt(2)");
    // estimate = upper witness, true front = lower witness: any realization
    // on the true front violates one tolerance
    const ObjectivePoint est = t.from_vq({v_star, hi(v_star)});
    for (int k = 0; k <= 20000; ++k) {
      const double v = d.v_min() + d.span() * k / 20000.0;
      const ObjectivePoint real = t.from_vq({v, lo(v)});
      const bool ok = std::abs(est.z1 - real.z1) < delta.delta1 && std::abs(est.z2 - real.z2) < delta.delta2;
      c.expect(!ok, "realization at v=" + fmt(v) + " meets the tolerances above the threshold");
    }
  }

  // below: lambda = sqrt(2) - 0.02; realization with fixed v on every witness
  {
    const auto pts = dataset_with(kSqrt2 - 0.02);
    const Dataset d = build_dataset_rotated(delta, pts);
    c.expect(global_error(d) < kSqrt2, "below-threshold dataset mis-built");
    std::vector<RotatedPoint> rp;
    for (const auto& s : d.samples()) rp.push_back(s.r);
    constexpr double kappa = 1.0 - 1e-3;
    c.expect(max_pair_slope(rp) < kappa, "cone slope does not dominate the data");
    for (bool upper : {true, false}) {
      const Witness h{rp, kappa, upper};
      auto fr = std::make_shared<WitnessFront>(h, t);
      const Problem problem{delta, std::make_shared<AnalyticalBackend>(fr)};
      for (int k = 0; k <= 400; ++k) {
        const double v = d.v_min() + d.span() * k / 400.0;
        const BoundPair b = bounds_at(d, v);
        for (int j = 1; j < 20; ++j) {
          const double q = b.lower + (b.upper - b.lower) * j / 20.0;
          const RealizationReport r = realize(problem, d, {v, q});
          c.expect(std::abs(r.eps1) < delta.delta1 && std::abs(r.eps2) < delta.delta2,
                   "realization at v=" + fmt(v) + " violates the tolerances below the threshold");
        }
      }
    }
  }
  return c.outcome("above sqrt(2): every realization fails; below: all fixed-v realizations pass");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 anchor reproduction", anchors},
      {"2 bounds oracle", bounds_oracle},
      {"3 guarantee suite", guarantee_suite},
      {"4 worst-case exactness", worst_case_exactness},
      {"5 strategy ordering", strategy_ordering},
      {"6 planner cross-check", planner_cross_check},
      {"7 budget mode", budget_mode},
      {"8 baseline contrast", baseline_contrast},
      {"9 robustness condition", theorem_condition},
  };
  const double limits[] = {1, 30, 120, 10, 180, 5, 10, 5, 10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limits[i]) {
      o.pass = false;
      o.detail += " [over time limit " + fmt(limits[i]) + " s]";
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
