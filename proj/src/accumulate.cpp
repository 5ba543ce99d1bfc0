#include "riskpath/accumulate.hpp"

#include <algorithm>
#include <cassert>

namespace riskpath {

namespace {

std::vector<double> numeric_risks(const Dag& dag) {
    std::vector<double> r(static_cast<size_t>(dag.edge_count()));
    for (int i = 0; i < dag.edge_count(); ++i) r[static_cast<size_t>(i)] = dag.risk(i);
    return r;
}

// N sorted ascending by key value, ties by edge id. Edge lists arrive in id
// order, so a stable sort on the value alone preserves the tie-break.
std::vector<EdgeIndex> sorted_by(std::vector<EdgeIndex> list,
                                 const std::vector<double>& value) {
    std::stable_sort(list.begin(), list.end(), [&value](EdgeIndex a, EdgeIndex b) {
        return value[static_cast<size_t>(a)] < value[static_cast<size_t>(b)];
    });
    return list;
}

// Bracket of the bat-eye recursion for an already-ordered neighbor list:
// prod B_j  +  sum_j C(i;j) A(j). This is also the conditional failure A of
// the edge feeding these neighbors.
double bat_inner(const std::vector<EdgeIndex>& order, const std::vector<double>& risk,
                 const std::vector<double>& remainder) {
    double prefix = 1.0;  // prod of risks of neighbors attempted so far
    double sum = 0.0;
    for (EdgeIndex j : order) {
        double bj = risk[static_cast<size_t>(j)];
        sum += (1.0 - bj) * prefix * remainder[static_cast<size_t>(j)];
        prefix *= bj;
    }
    return prefix + sum;
}

}  // namespace

Accumulation accumulate_eagle(const Dag& dag) {
    Accumulation acc;
    acc.model = Model::eagle;
    acc.risk = numeric_risks(dag);
    const size_t n = static_cast<size_t>(dag.edge_count());
    acc.accumulated.assign(n, 0.0);
    acc.attempt_order.assign(n, {});

    for (EdgeIndex i : dag.reverse_topological_edge_order()) {
        const size_t si = static_cast<size_t>(i);
        if (dag.terminal(i)) {
            acc.accumulated[si] = acc.risk[si];
            continue;
        }
        double prod = 1.0;
        for (EdgeIndex j : dag.neighbors(i)) prod *= acc.accumulated[static_cast<size_t>(j)];
        acc.accumulated[si] = por(acc.risk[si], prod);
    }
    for (int i = 0; i < dag.edge_count(); ++i)
        acc.attempt_order[static_cast<size_t>(i)] =
            sorted_by(dag.neighbors(i), acc.accumulated);
    acc.source_order = sorted_by(dag.out_edges(dag.source()), acc.accumulated);

    double prod = 1.0;
    for (EdgeIndex j : dag.out_edges(dag.source())) prod *= acc.accumulated[static_cast<size_t>(j)];
    acc.source_risk = prod;
    return acc;
}

Accumulation accumulate_bat(const Dag& dag, OrderKey key) {
    Accumulation acc;
    acc.model = Model::bat;
    acc.order_key = key;
    acc.risk = numeric_risks(dag);
    const size_t n = static_cast<size_t>(dag.edge_count());
    acc.accumulated.assign(n, 0.0);
    acc.remainder.assign(n, 0.0);
    acc.attempt_order.assign(n, {});

    const std::vector<double>& sort_value =
        key == OrderKey::accumulated ? acc.accumulated : acc.remainder;

    for (EdgeIndex i : dag.reverse_topological_edge_order()) {
        const size_t si = static_cast<size_t>(i);
        const double b = acc.risk[si];
        if (dag.terminal(i)) {
            acc.accumulated[si] = b;
            acc.remainder[si] = 0.0;
            continue;
        }
        // Neighbors appear earlier in reverse topological order, so their
        // values are final by the time this edge is processed.
        std::vector<EdgeIndex> order = sorted_by(dag.neighbors(i), sort_value);
        double inner = bat_inner(order, acc.risk, acc.remainder);
        acc.attempt_order[si] = std::move(order);
        acc.accumulated[si] = por(b, inner);
        // A = (R-hat - R)/(1 - R) reduces to the inner bracket exactly;
        // computing it that way needs no division guard except risk 1.
        acc.remainder[si] = b == 1.0 ? 1.0 : inner;
    }

    acc.source_order = sorted_by(dag.out_edges(dag.source()), sort_value);
    acc.source_risk = bat_inner(acc.source_order, acc.risk, acc.remainder);
    return acc;
}

Accumulation accumulate(const Dag& dag, Model model, OrderKey key) {
    return model == Model::eagle ? accumulate_eagle(dag) : accumulate_bat(dag, key);
}

double selection_probability(const Dag& dag, const Accumulation& acc, std::string_view i,
                             std::string_view j) {
    EdgeIndex ei = dag.edge_index(i);
    EdgeIndex ej = dag.edge_index(j);
    const auto& order = acc.attempt_order[static_cast<size_t>(ei)];
    double prefix = 1.0;
    for (EdgeIndex k : order) {
        if (k == ej) return (1.0 - acc.risk[static_cast<size_t>(ej)]) * prefix;
        prefix *= acc.risk[static_cast<size_t>(k)];
    }
    throw GraphError("edge '" + std::string(j) + "' is not a neighbor of '" + std::string(i) + "'");
}

double remainder_after(const Dag& dag, const Accumulation& acc, std::string_view j) {
    if (acc.remainder.empty())
        throw GraphError("remainder is only defined for the bat model");
    return acc.remainder[static_cast<size_t>(dag.edge_index(j))];
}

}  // namespace riskpath
