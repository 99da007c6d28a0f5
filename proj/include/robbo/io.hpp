#ifndef ROBBO_IO_HPP
#define ROBBO_IO_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "robbo/algorithms.hpp"
#include "robbo/bench.hpp"
#include "robbo/estimator.hpp"
#include "robbo/planner.hpp"

namespace robbo {

// Dataset schema: {"delta":[d1,d2],"points":[{"z":[z1,z2],"x":[...]}, ...]}.
// Points may come in any order and are written sorted. A run report is also
// accepted on input; its "dataset" member is read.

std::string dataset_json(const Dataset& d);
Dataset parse_dataset_json(std::string_view text);
Dataset read_dataset_file(const std::string& path);

std::string report_json(const RunReport& r);
std::string realization_json(const RealizationReport& r);

struct PlanInput {
  RangeSpec ranges;
  std::optional<ToleranceVec> delta;
  std::optional<BudgetSpec> budget;
};
std::string plan_json(const PlanInput& in);

std::string sweep_spec_json(const SweepSpec& spec);

/// CSV writers; every float uses 17 significant digits.
void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows);
/// Bounds, local error and the criterion-space images of both bounds on n
/// evenly spaced v values.
void write_bounds_csv(std::ostream& os, const Dataset& d, std::size_t n);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

std::string format_double(double x);

}  // namespace robbo

#endif  // ROBBO_IO_HPP
