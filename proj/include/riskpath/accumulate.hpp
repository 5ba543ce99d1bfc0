#pragma once

#include <string_view>
#include <vector>

#include "riskpath/graph.hpp"

namespace riskpath {

enum class Model { eagle, bat };

/// Sort key for an edge's attempt order. `accumulated` is the standard rule
/// (least accumulated risk first); `remainder` orders by the conditional
/// downstream risk instead, which can only lower the walk's failure
/// probability but is not the default behavior.
enum class OrderKey { accumulated, remainder };

/// Probabilistic OR: failure of at least one of two independent events.
inline double por(double a, double b) { return a + b - a * b; }

/// Backward risk accumulation over a Dag. All vectors are indexed by edge.
struct Accumulation {
    Model model = Model::bat;
    OrderKey order_key = OrderKey::accumulated;
    std::vector<double> risk;         // numeric risks the accumulation used
    std::vector<double> accumulated;  // R-hat per edge
    std::vector<double> remainder;    // A per edge (bat only; empty for eagle)
    std::vector<std::vector<EdgeIndex>> attempt_order;  // N(i) sorted, per edge
    std::vector<EdgeIndex> source_order;                // out(source) sorted
    double source_risk = 0.0;
};

/// Eagle-eye accumulation: R-hat = R v prod over N(i) of neighbor R-hat,
/// terminal edges keep their own risk, dead ends accumulate 1 (empty
/// product). Optimistic: treats all downstream alternatives as
/// simultaneously available.
Accumulation accumulate_eagle(const Dag& dag);

/// Bat-eye accumulation: accounts for the attempt order and the walker's
/// commitment to a chosen edge. Exact failure probability of the greedy
/// no-backtracking walk.
Accumulation accumulate_bat(const Dag& dag, OrderKey key = OrderKey::accumulated);

Accumulation accumulate(const Dag& dag, Model model, OrderKey key = OrderKey::accumulated);

/// C(i;j): probability that neighbor j is the first intact edge attempted
/// from i. Throws GraphError when j is not a neighbor of i.
double selection_probability(const Dag& dag, const Accumulation& acc, std::string_view i,
                             std::string_view j);

/// A(j): conditional downstream failure risk given edge j itself is intact.
/// Defined as 1 when risk(j) = 1 (the value is never weighted; C = 0).
double remainder_after(const Dag& dag, const Accumulation& acc, std::string_view j);

}  // namespace riskpath
