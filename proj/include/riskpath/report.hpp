#pragma once

#include <string>

#include <json.hpp>

#include "riskpath/accumulate.hpp"
#include "riskpath/graph.hpp"
#include "riskpath/simulate.hpp"
#include "riskpath/symbolic.hpp"

namespace riskpath {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so emitted JSON/CSV is stable.
double round12(double x);
std::string format12(double x);

Json accumulation_report(const Dag& dag, const Accumulation& acc);
std::string accumulation_table(const Dag& dag, const Accumulation& acc);

/// accumulation_report plus the planned attempt orders and the all-intact path.
Json route_report(const Dag& dag, const Accumulation& acc);
std::string route_table(const Dag& dag, const Accumulation& acc);

Json trial_report(const TrialSummary& s);

Json enumerate_report(const Dag& dag, const Accumulation& acc, const ExactResult& exact,
                      double tolerance = 1e-9);

/// Per-edge polynomial pieces. Coefficients that fit in 64 bits are emitted
/// as JSON integers; larger ones as decimal strings.
Json polynomial_report(const Dag& dag, const PiecewiseAccumulation& pw);

Json crossover_report(const Dag& dag, const std::vector<Crossover>& crossovers);

/// CSV with header alpha,<edge ids...>,chosen.
std::string sweep_csv(const Dag& dag, const SweepTable& table);

Json baseline_report(const Dag& dag, const StaticPath& path);

Json trace_json(const Dag& dag, const WalkTrace& trace);

}  // namespace riskpath
