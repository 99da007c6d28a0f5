#ifndef ROBBO_SAMPLER_HPP
#define ROBBO_SAMPLER_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "robbo/transform.hpp"

namespace robbo {

enum class AnchorWhich { A1, A2 };

struct SampleRequest {
  double tilde_v = 0.0;
  ToleranceVec delta;
};

struct SampleResult {
  ObjectivePoint z;
  std::vector<double> x;
};

/// A continuous Pareto front with a monotone parametrization t in [0, 1]:
/// t = 0 is the anchor minimizing f1, t = 1 the one minimizing f2, and f1
/// increases (f2 decreases) strictly with t.
class AnalyticalFront {
 public:
  virtual ~AnalyticalFront() = default;
  [[nodiscard]] virtual ObjectivePoint at(double t) const = 0;
  /// f2 on the front as a function of f1.
  [[nodiscard]] virtual double f2_of_f1(double f1) const = 0;
  [[nodiscard]] virtual std::string describe() const = 0;
};

/// Fronts of  min [x1, x2]  s.t.  ||x||_p >= scale, x >= 0,
/// i.e. f2 = (scale^p - f1^p)^(1/p). Convex for p < 1, linear at p = 1,
/// concave above.
class FrontFamily final : public AnalyticalFront {
 public:
  explicit FrontFamily(double p, double scale = 10.0);

  [[nodiscard]] double p() const noexcept { return p_; }
  [[nodiscard]] double scale() const noexcept { return scale_; }

  /// Superellipse parametrization: f1 = s*sin(t*pi/2)^(2/p), f2 = s*sin((1-t)*pi/2)^(2/p).
  /// Stays resolvable close to the axes for tiny p, where an f1 parametrization underflows.
  [[nodiscard]] ObjectivePoint at(double t) const override;
  [[nodiscard]] double f2_of_f1(double f1) const override;
  [[nodiscard]] std::string describe() const override;

 private:
  double p_;
  double scale_;
};

double front_value(const FrontFamily& fam, double f1);

/// Front given as a strictly decreasing function f2 = g(f1) on [f1_min, f1_max].
class FunctionFront final : public AnalyticalFront {
 public:
  FunctionFront(double f1_min, double f1_max, std::function<double(double)> g,
                std::string name = "function");

  [[nodiscard]] ObjectivePoint at(double t) const override;
  [[nodiscard]] double f2_of_f1(double f1) const override;
  [[nodiscard]] std::string describe() const override { return name_; }

 private:
  double f1_min_;
  double f1_max_;
  std::function<double(double)> g_;
  std::string name_;
};

/// Finds the front point where `phi` (strictly increasing along t) equals
/// `target`, by bisection on t. Targets outside the range return the
/// corresponding endpoint.
ObjectivePoint solve_on_front(const AnalyticalFront& front,
                              const std::function<double(ObjectivePoint)>& phi, double target);

/// Answers anchor and sample-at-v requests.
class Backend {
 public:
  virtual ~Backend() = default;
  [[nodiscard]] virtual SampleResult anchor(AnchorWhich which) const = 0;
  [[nodiscard]] virtual SampleResult sample(const SampleRequest& request) const = 0;
  /// Non-null when the front is known in closed form (required by baselines).
  [[nodiscard]] virtual const AnalyticalFront* analytical() const { return nullptr; }
  [[nodiscard]] virtual std::string describe() const = 0;
};

class AnalyticalBackend final : public Backend {
 public:
  explicit AnalyticalBackend(std::shared_ptr<const AnalyticalFront> front);

  [[nodiscard]] SampleResult anchor(AnchorWhich which) const override;
  /// Solves the v-constrained scalarization exactly by bisection along the front.
  [[nodiscard]] SampleResult sample(const SampleRequest& request) const override;
  [[nodiscard]] const AnalyticalFront* analytical() const override { return front_.get(); }
  [[nodiscard]] std::string describe() const override { return front_->describe(); }

 private:
  std::shared_ptr<const AnalyticalFront> front_;
};

/// Relative (to the anchor v-span) bisection target for analytical sampling.
inline constexpr double kBisectionTolerance = 1e-10;
/// Relative v-mismatch above which a sampler result is rejected.
inline constexpr double kSampleMatchTolerance = 1e-8;
inline constexpr int kBisectionMaxIterations = 200;

/// A bi-objective problem seen only through its sampler, plus tolerances.
struct Problem {
  ToleranceVec delta;
  std::shared_ptr<const Backend> backend;
};

Problem make_front_problem(double p, ToleranceVec delta);

ObjectivePoint sample_anchor(const Problem& problem, AnchorWhich which);

/// Pareto point whose v-coordinate is tilde_v. `v_span` (the anchor v-span)
/// scales the match tolerance; a mismatch throws Error(InconsistentSample).
SampleResult sample_at(const Problem& problem, double tilde_v, double v_span);

/// Tolerances given as fractions of the anchor ranges.
ToleranceVec resolve_percent_tolerances(const Backend& backend, double pct1, double pct2);

struct Validation {
  enum class Status { Accepted, Merged, Rejected };
  Status status = Status::Accepted;
  /// For Merged: the matching sample. For dominance rejections: the offending sample.
  std::size_t index = 0;
  std::string reason;

  [[nodiscard]] bool accepted() const { return status != Status::Rejected; }
};

Validation validate_sample(const Dataset& d, const SampleResult& s);

}  // namespace robbo

#endif  // ROBBO_SAMPLER_HPP
