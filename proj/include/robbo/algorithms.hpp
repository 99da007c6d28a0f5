#ifndef ROBBO_ALGORITHMS_HPP
#define ROBBO_ALGORITHMS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "robbo/error.hpp"
#include "robbo/estimator.hpp"
#include "robbo/planner.hpp"
#include "robbo/sampler.hpp"
#include "robbo/transform.hpp"

namespace robbo {

enum class Selection { UniformGrid, GreedyBisection, GreedyMaxUncertainty };
enum class Termination { ToleranceGuarantee, FixedBudget };
enum class TerminatedBy { Guarantee, Budget, GridExhausted };

std::string_view to_string(Selection s);
std::string_view to_string(Termination t);
std::string_view to_string(TerminatedBy t);

struct StrategySpec {
  EstimateKind estimate = EstimateKind::Central;
  Selection selection = Selection::UniformGrid;
  Termination termination = Termination::ToleranceGuarantee;
  /// Used only with FixedBudget.
  BudgetSpec budget;
};

/// Throws InvalidArgument for combinations that have no meaning
/// (max-uncertainty picks are defined for the linear estimate only).
void validate(const StrategySpec& spec);

/// "central-uniform", "linear-max-uncertainty", ...
std::string strategy_name(const StrategySpec& spec);
/// Inverse of strategy_name for guarantee-mode strategies.
StrategySpec parse_strategy(std::string_view name);
/// The five iterative strategies compared in the sweep.
std::vector<StrategySpec> iterative_strategies();

/// Largest per-interval worst case that certifies the tolerances: 2*sqrt(2)
/// in units of the local error.
inline constexpr double kGuaranteeThreshold = 2.8284271247461900976;
/// Relative slack on the threshold comparison, absorbing rounding in sample spacing.
inline constexpr double kGuaranteeSlack = 1e-9;

/// Termination quantity of an estimate, in local-error units: max over
/// intervals of V-|Q| (central) or (V-|Q|)(1+|Q|/V) (linear). Both equal
/// twice the worst pointwise error of the estimate.
double termination_criterion(const Dataset& d, EstimateKind kind);
bool certifies(double criterion);

struct RunReport {
  Dataset dataset;
  StrategySpec strategy;
  /// Tolerances the run used (the budget-derived ones in budget mode).
  ToleranceVec delta;
  std::size_t iterations = 0;
  std::size_t total_samples = 0;
  /// (samples collected, global error) after the anchors and after every iteration.
  std::vector<std::pair<std::size_t, double>> lambda_trace{};
  TerminatedBy terminated_by = TerminatedBy::Guarantee;
  double final_lambda = 0.0;
  double final_criterion = 0.0;
  /// Worst-case per-objective bands of the final estimate.
  double band1 = 0.0;
  double band2 = 0.0;
  /// Budget mode: sample count at which the guarantee first held, if it did.
  std::optional<std::size_t> early_guarantee{};
  /// Worst-case sample count for the strategy, when one is known.
  std::optional<std::size_t> planner_bound{};
};

/// A run stopped by a failed or inconsistent sample, or by the iteration cap.
class RunAborted : public Error {
 public:
  RunAborted(ErrorKind kind, const std::string& what, RunReport partial)
      : Error(kind, what), partial_(std::move(partial)) {}
  [[nodiscard]] const RunReport& partial() const noexcept { return partial_; }

 private:
  RunReport partial_;
};

/// Central estimate, uniform grid, stop at the guarantee.
RunReport run_robbo(const Problem& problem);
/// Central estimate, uniform grid of n_budget points, tolerances from the budget.
RunReport run_robbo_budget(const Problem& problem, std::size_t n_budget, double alpha);
RunReport run_variant(const Problem& problem, const StrategySpec& spec);

}  // namespace robbo

#endif  // ROBBO_ALGORITHMS_HPP
