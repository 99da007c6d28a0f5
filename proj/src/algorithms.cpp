#include "robbo/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "robbo/bounds.hpp"

namespace robbo {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kGridMatchTolerance = 1e-12;

double interval_criterion(const Interval& i, EstimateKind kind) {
  return 2.0 * worst_case_interval_error(i, kind);
}

/// Distance from v to the nearest sample.
double clearance(const Dataset& d, double v) {
  const std::size_t j = d.upper_index(v);
  double best = std::abs(d[j].r.v - v);
  if (j > 0) best = std::min(best, std::abs(v - d[j - 1].r.v));
  return best;
}

class UniformGrid {
 public:
  UniformGrid(const Dataset& d, std::size_t total_points) {
    if (total_points < 3) return;
    const double step = d.span() / static_cast<double>(total_points - 1);
    for (std::size_t i = 1; i + 1 < total_points; ++i) {
      values_.push_back(d.v_min() + step * static_cast<double>(i));
    }
    used_.assign(values_.size(), false);
    mark(d);
  }

  void mark(const Dataset& d) {
    const double tol = kGridMatchTolerance * d.span();
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!used_[i] && clearance(d, values_[i]) <= tol) used_[i] = true;
    }
  }

  /// Unused grid value with the largest bound gap; ties go to the value
  /// farthest from the samples, then to the smallest.
  std::optional<std::size_t> pick(const Dataset& d) const {
    const double tol = kTieTolerance * d.span();
    std::optional<std::size_t> best;
    double best_gap = 0.0;
    double best_clear = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (used_[i]) continue;
      const double gap = local_error(d, values_[i]);
      const double clear = clearance(d, values_[i]);
      if (!best || gap > best_gap + tol ||
          (std::abs(gap - best_gap) <= tol && clear > best_clear + tol)) {
        best = i;
        best_gap = gap;
        best_clear = clear;
      }
    }
    return best;
  }

  [[nodiscard]] double value(std::size_t i) const { return values_[i]; }
  void use(std::size_t i) { used_[i] = true; }

 private:
  std::vector<double> values_;
  std::vector<bool> used_;
};

/// Next v for the greedy selections: inside the interval with the largest
/// criterion (first one on ties).
double greedy_pick(const Dataset& d, const StrategySpec& spec) {
  const auto ivs = intervals(d);
  const double tol = kTieTolerance * d.span();
  std::size_t best = 0;
  double best_c = -1.0;
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    const double c = interval_criterion(ivs[i], spec.estimate);
    if (c > best_c + tol) {
      best = i;
      best_c = c;
    }
  }
  const Interval& iv = ivs[best];
  if (spec.selection == Selection::GreedyBisection) return 0.5 * (iv.left.v + iv.right.v);
  const WorstSegment ws = worst_segment(iv);
  const auto room = [&](double v) { return std::min(v - iv.left.v, iv.right.v - v); };
  const double a = ws.lo();
  const double b = ws.hi();
  return room(b) > room(a) + tol ? b : a;
}

std::optional<std::size_t> planner_bound(const StrategySpec& spec, const ToleranceVec& delta,
                                         const RangeSpec& ranges) {
  if (spec.termination == Termination::FixedBudget) return spec.budget.n_budget;
  switch (spec.selection) {
    case Selection::UniformGrid:
      return min_samples_central(delta, ranges);
    case Selection::GreedyBisection:
      return max_samples_greedy(delta, ranges);
    case Selection::GreedyMaxUncertainty:
      return std::nullopt;
  }
  return std::nullopt;
}

void finish(RunReport& rep) {
  rep.total_samples = rep.dataset.size();
  rep.final_lambda = global_error(rep.dataset);
  rep.final_criterion = termination_criterion(rep.dataset, rep.strategy.estimate);
  rep.band1 = rep.delta.delta1 * rep.final_criterion / kGuaranteeThreshold;
  rep.band2 = rep.delta.delta2 * rep.final_criterion / kGuaranteeThreshold;
}

[[noreturn]] void abort_run(RunReport& rep, ErrorKind kind, const std::string& what) {
  finish(rep);
  throw RunAborted(kind, what, rep);
}

}  // namespace

std::string_view to_string(Selection s) {
  switch (s) {
    case Selection::UniformGrid: return "uniform";
    case Selection::GreedyBisection: return "bisection";
    case Selection::GreedyMaxUncertainty: return "max-uncertainty";
  }
  return "?";
}

std::string_view to_string(Termination t) {
  return t == Termination::ToleranceGuarantee ? "tolerance-guarantee" : "fixed-budget";
}

std::string_view to_string(TerminatedBy t) {
  switch (t) {
    case TerminatedBy::Guarantee: return "guarantee";
    case TerminatedBy::Budget: return "budget";
    case TerminatedBy::GridExhausted: return "grid-exhausted";
  }
  return "?";
}

void validate(const StrategySpec& spec) {
  if (spec.selection == Selection::GreedyMaxUncertainty && spec.estimate != EstimateKind::Linear) {
    throw Error(ErrorKind::InvalidArgument, "max-uncertainty selection requires the linear estimate");
  }
  if (spec.termination == Termination::FixedBudget) {
    if (spec.budget.n_budget < 2) throw Error(ErrorKind::InvalidArgument, "budget must be at least 2 samples");
    if (!(std::isfinite(spec.budget.alpha) && spec.budget.alpha > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
    }
  }
}

std::string strategy_name(const StrategySpec& spec) {
  return std::string(to_string(spec.estimate)) + "-" + std::string(to_string(spec.selection));
}

StrategySpec parse_strategy(std::string_view name) {
  for (const auto& s : iterative_strategies()) {
    if (strategy_name(s) == name) return s;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown strategy '" + std::string(name) + "'");
}

std::vector<StrategySpec> iterative_strategies() {
  using K = EstimateKind;
  using S = Selection;
  return {
      {K::Central, S::UniformGrid, Termination::ToleranceGuarantee, {}},
      {K::Central, S::GreedyBisection, Termination::ToleranceGuarantee, {}},
      {K::Linear, S::UniformGrid, Termination::ToleranceGuarantee, {}},
      {K::Linear, S::GreedyBisection, Termination::ToleranceGuarantee, {}},
      {K::Linear, S::GreedyMaxUncertainty, Termination::ToleranceGuarantee, {}},
  };
}

double termination_criterion(const Dataset& d, EstimateKind kind) {
  if (kind == EstimateKind::Central) return global_error(d);
  double worst = 0.0;
  for (const auto& iv : intervals(d)) worst = std::max(worst, interval_criterion(iv, kind));
  return worst;
}

bool certifies(double criterion) { return criterion <= kGuaranteeThreshold * (1.0 + kGuaranteeSlack); }

RunReport run_variant(const Problem& problem, const StrategySpec& spec) {
  validate(spec);
  if (!problem.backend) throw Error(ErrorKind::InvalidArgument, "problem has no sampler");
  const bool budget_mode = spec.termination == Termination::FixedBudget;
  if (!budget_mode) validate_tolerance(problem.delta);

  SampleResult a1 = problem.backend->anchor(AnchorWhich::A1);
  SampleResult a2 = problem.backend->anchor(AnchorWhich::A2);
  const RangeSpec ranges{a2.z.z1 - a1.z.z1, a1.z.z2 - a2.z.z2};
  const ToleranceVec delta = budget_mode ? budget_tolerances(spec.budget, ranges) : problem.delta;
  const Problem run_problem{delta, problem.backend};

  std::vector<Sample> anchors;
  anchors.push_back({a1.z, {}, std::move(a1.x)});
  anchors.push_back({a2.z, {}, std::move(a2.x)});
  RunReport rep{Dataset::build(delta, std::move(anchors)), spec, delta};
  rep.planner_bound = planner_bound(spec, delta, ranges);
  rep.lambda_trace.emplace_back(rep.dataset.size(), global_error(rep.dataset));

  std::optional<UniformGrid> grid;
  if (spec.selection == Selection::UniformGrid) {
    grid.emplace(rep.dataset, budget_mode ? spec.budget.n_budget : min_samples_central(delta, ranges));
  }
  const std::size_t cap = budget_mode ? spec.budget.n_budget
                                      : std::max<std::size_t>(64, 8 * samples_ec(delta, ranges));

  while (true) {
    const double crit = termination_criterion(rep.dataset, spec.estimate);
    if (certifies(crit)) {
      if (!rep.early_guarantee) rep.early_guarantee = rep.dataset.size();
      if (!budget_mode) {
        rep.terminated_by = TerminatedBy::Guarantee;
        break;
      }
    }
    if (budget_mode && rep.dataset.size() >= spec.budget.n_budget) {
      rep.terminated_by = TerminatedBy::Budget;
      break;
    }

    double v = 0.0;
    std::optional<std::size_t> slot;
    if (grid) {
      slot = grid->pick(rep.dataset);
      if (!slot) {
        rep.terminated_by = TerminatedBy::GridExhausted;
        break;
      }
      v = grid->value(*slot);
    } else {
      v = greedy_pick(rep.dataset, spec);
    }
    if (rep.iterations >= cap) abort_run(rep, ErrorKind::IterationCap, "iteration cap reached");

    SampleResult s;
    try {
      s = sample_at(run_problem, v, rep.dataset.span());
    } catch (const Error& e) {
      abort_run(rep, e.kind(), e.what());
    } catch (const std::exception& e) {
      abort_run(rep, ErrorKind::SamplerFailure, e.what());
    }
    const Validation check = validate_sample(rep.dataset, s);
    if (!check.accepted()) {
      abort_run(rep, ErrorKind::InconsistentSample, "sample rejected: " + check.reason);
    }
    if (check.status == Validation::Status::Accepted) {
      try {
        rep.dataset = rep.dataset.with_sample({s.z, {}, std::move(s.x)});
      } catch (const Error& e) {
        abort_run(rep, ErrorKind::InconsistentSample, e.what());
      }
    }
    if (grid) {
      grid->use(*slot);
      grid->mark(rep.dataset);
    }
    ++rep.iterations;
    rep.lambda_trace.emplace_back(rep.dataset.size(), global_error(rep.dataset));
  }
  finish(rep);
  return rep;
}

RunReport run_robbo(const Problem& problem) { return run_variant(problem, StrategySpec{}); }

RunReport run_robbo_budget(const Problem& problem, std::size_t n_budget, double alpha) {
  StrategySpec spec;
  spec.termination = Termination::FixedBudget;
  spec.budget = {n_budget, alpha};
  return run_variant(problem, spec);
}

}  // namespace robbo
