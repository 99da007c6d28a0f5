#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include "doctest.h"
#include "robbo/algorithms.hpp"
#include "robbo/error.hpp"
#include "robbo/estimator.hpp"
#include "support.hpp"

using namespace robbo;
using doctest::Approx;

namespace {

Dataset rotated(std::vector<RotatedPoint> pts, ToleranceVec delta = {1.0, 1.0}) {
  return build_dataset_rotated(delta, pts);
}

/// Front whose rotated image is q = 0 for unit tolerances: f2 = -f1.
Problem flat_problem() {
  auto front = std::make_shared<FunctionFront>(-5.0, 5.0, [](double f1) { return -f1; }, "flat");
  return {{1.0, 1.0}, std::make_shared<AnalyticalBackend>(front)};
}

}  // namespace

TEST_CASE("central and linear estimates at the middle of a rising pair") {
  const Dataset d = rotated({{0, 0}, {4, 2}});
  CHECK(estimate_at(Estimate(d, EstimateKind::Central), 2.0).q == Approx(1.0));
  CHECK(estimate_at(Estimate(d, EstimateKind::Linear), 2.0).q == Approx(1.0));
  CHECK(estimate_at(Estimate(d, EstimateKind::Central), 3.0).q == Approx(2.0));
  CHECK(estimate_at(Estimate(d, EstimateKind::Linear), 1.0).q == Approx(0.5));
}

TEST_CASE("estimates interpolate the data exactly") {
  std::mt19937_64 rng(1);
  const Dataset d = build_dataset_rotated({0.5, 2.0}, test::random_rotated(rng, 12));
  for (auto kind : {EstimateKind::Central, EstimateKind::Linear}) {
    const Estimate e(d, kind);
    for (const auto& s : d.samples()) CHECK(e.q_at(s.r.v) == s.r.q);
  }
  CHECK_THROWS_AS((void)Estimate(d, EstimateKind::Central).q_at(d.v_max() + 1.0), Error);
}

TEST_CASE("estimate curve") {
  const Dataset d = rotated({{0, 0}, {4, 2}});
  const Estimate e(d, EstimateKind::Central);
  auto rows = estimate_curve(e, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].lambda == 0.0);
  CHECK(rows[1].lambda == 0.0);
  CHECK(rows[1].v == d.v_max());

  rows = estimate_curve(e, 3);
  CHECK(rows[1].v == Approx(2.0));
  CHECK(rows[1].q == Approx(1.0));
  CHECK(rows[1].lambda == Approx(2.0));
  const ObjectivePoint z = d.transform().from_vq({2.0, 1.0});
  CHECK(rows[1].f1 == Approx(z.z1));
  CHECK(rows[1].f2 == Approx(z.z2));
  CHECK_THROWS_AS((void)estimate_curve(e, 1), Error);
}

TEST_CASE("central estimate curve is monotone in criterion space on flat data") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> w(0.2, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RotatedPoint> pts{{0.0, 0.0}};
    for (int i = 0; i < 8; ++i) pts.push_back({pts.back().v + w(rng), 0.0});
    const Dataset d = rotated(pts, test::random_delta(rng));
    const auto rows = estimate_curve(Estimate(d, EstimateKind::Central), 2000);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].f1 > rows[i - 1].f1);
      CHECK(rows[i].f2 < rows[i - 1].f2);
    }
  }
}

TEST_CASE("central estimate curve is weakly monotone in general") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Dataset d = build_dataset_rotated(test::random_delta(rng), test::random_rotated(rng, 10));
    const auto rows = estimate_curve(Estimate(d, EstimateKind::Central), 2000);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].f1 >= rows[i - 1].f1 - 1e-12);
      CHECK(rows[i].f2 <= rows[i - 1].f2 + 1e-12);
    }
  }
}

TEST_CASE("per-interval worst cases") {
  const Interval flat{{0, 0}, {4, 0}};
  CHECK(worst_case_interval_error(flat, EstimateKind::Central) == Approx(2.0));
  CHECK(worst_case_interval_error(flat, EstimateKind::Linear) == Approx(2.0));
  const Interval rising{{0, 0}, {4, 2}};
  CHECK(worst_case_interval_error(rising, EstimateKind::Central) == Approx(1.0));
  CHECK(worst_case_interval_error(rising, EstimateKind::Linear) == Approx(1.5));
  const Interval steep{{0, 0}, {4, 4 - 1e-12}};
  CHECK(worst_case_interval_error(steep, EstimateKind::Central) < 1e-11);
  CHECK(worst_case_interval_error(steep, EstimateKind::Linear) < 1e-11);
}

TEST_CASE("central worst case never exceeds linear, equal only when flat") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> w(0.1, 10.0);
  std::uniform_real_distribution<double> s(-0.99, 0.99);
  for (int i = 0; i < 2000; ++i) {
    const double v = w(rng);
    const Interval iv{{0, 0}, {v, v * s(rng)}};
    const double c = worst_case_interval_error(iv, EstimateKind::Central);
    const double l = worst_case_interval_error(iv, EstimateKind::Linear);
    CHECK(c <= l);
    if (iv.rise() != 0.0) CHECK(c < l);
  }
}

TEST_CASE("linear worst case matches a brute-force search over the feasible set") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> s(-0.9, 0.9);
  for (int i = 0; i < 200; ++i) {
    const double v = 4.0;
    const Dataset d = rotated({{0, 0}, {v, v * s(rng)}});
    const Estimate lin(d, EstimateKind::Linear);
    double worst = 0.0;
    for (int k = 0; k <= 20000; ++k) {
      const double x = v * k / 20000.0;
      const BoundPair b = bounds_at(d, x);
      worst = std::max({worst, std::abs(lin.q_at(x) - b.upper), std::abs(lin.q_at(x) - b.lower)});
    }
    CHECK(worst == Approx(worst_case_interval_error(intervals(d)[0], EstimateKind::Linear)).epsilon(1e-3));
  }
}

TEST_CASE("central estimate is within half the local error of the true front") {
  const Problem problem = make_front_problem(2.0, {0.5, 0.5});
  const RunReport rep = run_robbo(problem);
  const Estimate e(rep.dataset, EstimateKind::Central);
  const Dataset& d = rep.dataset;
  for (int k = 0; k <= 1000; ++k) {
    const double v = d.v_min() + d.span() * k / 1000.0;
    const double h = d.transform().to_vq(sample_at(problem, d.clamp_to_domain(v), d.span()).z).q;
    CHECK(std::abs(e.q_at(v) - h) <= 0.5 * local_error(d, v) + 1e-9);
  }
}

TEST_CASE("realization of an off-front candidate on a flat front") {
  const Problem problem = flat_problem();
  const Dataset d = build_dataset(problem.delta, {{-5.0, 5.0}, {5.0, -5.0}});
  const RealizationReport r = realize(problem, d, {0.0, 1.0});
  CHECK(std::abs(r.realized.z1) < 1e-9);
  CHECK(std::abs(r.realized.z2) < 1e-9);
  CHECK(r.eps1 == Approx(1.0 / std::numbers::sqrt2));
  CHECK(r.eps2 == Approx(1.0 / std::numbers::sqrt2));
  REQUIRE(r.ratio.has_value());
  CHECK(*r.ratio == Approx(1.0));
}

TEST_CASE("candidate on the front has zero error and no ratio") {
  const Problem problem = flat_problem();
  const Dataset d = build_dataset(problem.delta, {{-5.0, 5.0}, {5.0, -5.0}});
  const RealizationReport r = realize(problem, d, {1.5, 0.0});
  CHECK(r.eps1 == 0.0);
  CHECK(r.eps2 == 0.0);
  CHECK_FALSE(r.ratio.has_value());
}

TEST_CASE("realization errors are balanced and satisfy the l1 condition") {
  const Problem problem = make_front_problem(3.0, {0.2, 0.7});
  const RunReport rep = run_robbo(problem);
  REQUIRE(rep.final_lambda <= kGuaranteeThreshold * (1 + kGuaranteeSlack));
  const Estimate e(rep.dataset, EstimateKind::Central);
  const Dataset& d = rep.dataset;
  const double alpha = problem.delta.delta1 / problem.delta.delta2;
  for (int k = 0; k <= 300; ++k) {
    const double v = d.v_min() + d.span() * k / 300.0;
    const RealizationReport r = realize(problem, e, v);
    if (r.ratio) CHECK(test::rel_diff(*r.ratio, alpha) < 1e-9);
    const Transform& t = d.transform();
    const RotatedPoint evq = t.to_vq({r.eps1, r.eps2});
    CHECK(std::abs(evq.v) + std::abs(evq.q) <= std::numbers::sqrt2 * (1 + 1e-9));
    CHECK(std::abs(r.eps1) <= problem.delta.delta1 * (1 + 1e-9));
    CHECK(std::abs(r.eps2) <= problem.delta.delta2 * (1 + 1e-9));
  }
}

TEST_CASE("realization rejects inconsistent answers") {
  const Problem problem = flat_problem();
  // the data claim a front above q = 0 everywhere
  const Dataset d = build_dataset_rotated(problem.delta, {{-7.0710678118654755, 0.0}, {0.0, 5.0}, {7.0710678118654755, 0.0}});
  CHECK_THROWS_WITH_AS((void)realize(problem, d, {-0.1, 1.0}), doctest::Contains("bound"), Error);
}

TEST_CASE("error bands") {
  const Dataset d = rotated({{0, 0}, {4, 2}}, {1.0, 2.0});
  const auto [b1, b2] = error_bands(d, 2.0);
  CHECK(b1 == Approx(1.4142).epsilon(1e-4));
  CHECK(b2 == Approx(2.8284).epsilon(1e-4));
  const auto [c1, c2] = central_error_bands(d, 2.0);
  CHECK(c1 == Approx(b1 / 2));
  CHECK(c2 == Approx(b2 / 2));
  const auto [z1, z2] = error_bands(d, d.v_min());
  CHECK(z1 == 0.0);
  CHECK(z2 == 0.0);
}

TEST_CASE("v_at_f1 inverts the estimate's f1") {
  const Problem problem = make_front_problem(2.0, {0.5, 0.5});
  const RunReport rep = run_robbo(problem);
  for (auto kind : {EstimateKind::Central, EstimateKind::Linear}) {
    const Estimate e(rep.dataset, kind);
    for (double f1 : {0.0, 1.0, 3.3, 7.5, 10.0}) {
      const double v = v_at_f1(e, f1);
      const ObjectivePoint z = rep.dataset.transform().from_vq({v, e.q_at(v)});
      CHECK(z.z1 == Approx(f1).epsilon(1e-9));
    }
    CHECK_THROWS_AS((void)v_at_f1(e, 11.0), Error);
  }
}

TEST_CASE("estimate kind names") {
  CHECK(parse_estimate_kind("central") == EstimateKind::Central);
  CHECK(parse_estimate_kind("linear") == EstimateKind::Linear);
  CHECK(to_string(EstimateKind::Linear) == "linear");
  CHECK_THROWS_AS((void)parse_estimate_kind("cubic"), Error);
}
