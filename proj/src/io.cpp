#include "robbo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "robbo/bounds.hpp"
#include "robbo/error.hpp"

namespace robbo {

using nlohmann::json;

namespace {

json pair_json(double a, double b) { return json::array({a, b}); }

json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

double number_at(const json& arr, std::size_t i, const char* what) {
  if (!arr.is_array() || arr.size() != 2 || !arr[i].is_number()) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be an array of two numbers");
  }
  return arr[i].get<double>();
}

json dataset_to_json(const Dataset& d) {
  json pts = json::array();
  for (const auto& s : d.samples()) {
    json p{{"z", pair_json(s.z.z1, s.z.z2)}};
    if (!s.x.empty()) p["x"] = s.x;
    pts.push_back(std::move(p));
  }
  return json{{"delta", pair_json(d.delta().delta1, d.delta().delta2)}, {"points", std::move(pts)}};
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dataset_json(const Dataset& d) { return dataset_to_json(d).dump(); }

Dataset parse_dataset_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed dataset JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("dataset")) doc = json(doc["dataset"]);
  if (!doc.is_object() || !doc.contains("delta") || !doc.contains("points") || !doc["points"].is_array()) {
    throw Error(ErrorKind::InvalidArgument, "dataset JSON needs \"delta\" and \"points\"");
  }
  const ToleranceVec delta{number_at(doc["delta"], 0, "delta"), number_at(doc["delta"], 1, "delta")};
  std::vector<Sample> samples;
  for (const auto& p : doc["points"]) {
    if (!p.is_object() || !p.contains("z")) throw Error(ErrorKind::InvalidArgument, "each point needs \"z\"");
    Sample s{{number_at(p["z"], 0, "z"), number_at(p["z"], 1, "z")}, {}, {}};
    if (p.contains("x")) {
      if (!p["x"].is_array()) throw Error(ErrorKind::InvalidArgument, "\"x\" must be an array");
      for (const auto& xi : p["x"]) {
        if (!xi.is_number()) throw Error(ErrorKind::InvalidArgument, "\"x\" entries must be numbers");
        s.x.push_back(xi.get<double>());
      }
    }
    samples.push_back(std::move(s));
  }
  return Dataset::build(delta, std::move(samples));
}

Dataset read_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read dataset file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_dataset_json(ss.str());
}

std::string report_json(const RunReport& r) {
  json trace = json::array();
  for (const auto& [k, lambda] : r.lambda_trace) trace.push_back(json::array({k, lambda}));
  json doc{
      {"strategy", strategy_name(r.strategy)},
      {"estimate", to_string(r.strategy.estimate)},
      {"termination", to_string(r.strategy.termination)},
      {"delta", pair_json(r.delta.delta1, r.delta.delta2)},
      {"iterations", r.iterations},
      {"total_samples", r.total_samples},
      {"terminated_by", to_string(r.terminated_by)},
      {"final_lambda", r.final_lambda},
      {"final_criterion", r.final_criterion},
      {"bands", pair_json(r.band1, r.band2)},
      {"guarantee", certifies(r.final_criterion)},
      {"early_guarantee", optional_json(r.early_guarantee)},
      {"planner_bound", optional_json(r.planner_bound)},
      {"lambda_trace", std::move(trace)},
      {"dataset", dataset_to_json(r.dataset)},
  };
  if (r.strategy.termination == Termination::FixedBudget) {
    doc["budget"] = json{{"n_budget", r.strategy.budget.n_budget}, {"alpha", r.strategy.budget.alpha}};
  }
  return doc.dump();
}

std::string realization_json(const RealizationReport& r) {
  json doc{
      {"candidate", pair_json(r.candidate.z1, r.candidate.z2)},
      {"realized", pair_json(r.realized.z1, r.realized.z2)},
      {"sampled", pair_json(r.sampled.z1, r.sampled.z2)},
      {"error", pair_json(r.eps1, r.eps2)},
      {"ratio", r.ratio ? json(*r.ratio) : json(nullptr)},
  };
  if (!r.x.empty()) doc["x"] = r.x;
  return doc.dump();
}

std::string plan_json(const PlanInput& in) {
  json doc{{"ranges", pair_json(in.ranges.range1, in.ranges.range2)}};
  if (in.delta) {
    const ToleranceVec& d = *in.delta;
    doc["delta"] = pair_json(d.delta1, d.delta2);
    doc["v_span"] = v_span(d, in.ranges);
    doc["min_samples_robust"] = min_samples_robust(d, in.ranges);
    doc["min_samples_central"] = min_samples_central(d, in.ranges);
    doc["greedy_epochs"] = greedy_epochs(v_span(d, in.ranges));
    doc["max_samples_greedy"] = max_samples_greedy(d, in.ranges);
    doc["samples_ec"] = samples_ec(d, in.ranges);
    doc["samples_nbi"] = samples_nbi(d, in.ranges);
  }
  if (in.budget) {
    const ToleranceVec t = budget_tolerances(*in.budget, in.ranges);
    doc["budget"] = json{{"n_budget", in.budget->n_budget},
                         {"alpha", in.budget->alpha},
                         {"delta", pair_json(t.delta1, t.delta2)}};
  }
  return doc.dump();
}

std::string sweep_spec_json(const SweepSpec& spec) {
  const auto [pct1, pct2] = mode_percentages(spec.mode);
  json strategies = json::array();
  for (const auto& s : spec.strategies) strategies.push_back(strategy_name(s));
  return json{{"mode", to_string(spec.mode)},
              {"delta_pct", pair_json(pct1, pct2)},
              {"p_values", spec.p_values},
              {"strategies", std::move(strategies)}}
      .dump(2);
}

void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
  os << "v,q,f1,f2,lambda\n";
  for (const auto& r : rows) {
    os << format_double(r.v) << ',' << format_double(r.q) << ',' << format_double(r.f1) << ','
       << format_double(r.f2) << ',' << format_double(r.lambda) << '\n';
  }
}

void write_bounds_csv(std::ostream& os, const Dataset& d, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  const Transform& t = d.transform();
  os << "v,q_lower,q_upper,lambda,f1_lower,f2_lower,f1_upper,f2_upper\n";
  for (std::size_t i = 0; i < n; ++i) {
    const double v = i + 1 == n ? d.v_max()
                                : d.v_min() + d.span() * static_cast<double>(i) / static_cast<double>(n - 1);
    const BoundPair b = bounds_at(d, v);
    const ObjectivePoint lo = t.from_vq({v, b.lower});
    const ObjectivePoint hi = t.from_vq({v, b.upper});
    os << format_double(v) << ',' << format_double(b.lower) << ',' << format_double(b.upper) << ','
       << format_double(b.upper - b.lower) << ',' << format_double(lo.z1) << ',' << format_double(lo.z2)
       << ',' << format_double(hi.z1) << ',' << format_double(hi.z2) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "p,strategy,sample_count,planner_bound,final_lambda,terminated_by,error\n";
  for (const auto& r : rows) {
    std::string err = r.error;
    for (char& c : err) {
      if (c == ',' || c == '\n' || c == '"') c = ' ';
    }
    os << format_double(r.p) << ',' << r.strategy << ','
       << (r.sample_count ? std::to_string(*r.sample_count) : "") << ','
       << (r.planner_bound ? std::to_string(*r.planner_bound) : "") << ','
       << (r.final_lambda ? format_double(*r.final_lambda) : "") << ',' << r.terminated_by << ',' << err
       << '\n';
  }
}

}  // namespace robbo
