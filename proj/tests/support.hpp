#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "riskpath/accumulate.hpp"
#include "riskpath/graph.hpp"
#include "riskpath/rng.hpp"
#include "riskpath/simulate.hpp"

namespace riskpath::testing {

// The 9-vertex, 12-edge campus network used throughout.
inline GraphSpec figure_spec() {
    GraphSpec s;
    auto add = [&s](const char* tail, const char* head) {
        s.edges.push_back({std::string(tail) + "->" + head, tail, head, std::nullopt});
    };
    add("1", "2");
    add("1", "3");
    add("2", "4");
    add("2", "5");
    add("3", "8");
    add("4", "6");
    add("4", "7");
    add("5", "6");
    add("5", "7");
    add("6", "9");
    add("7", "9");
    add("8", "9");
    s.source = "1";
    s.destination = "9";
    return s;
}

inline Dag figure1() {
    GraphSpec s = figure_spec();
    s.uniform_risk = 0.5;
    return Dag::validate(s);
}

inline Dag figure2() { return Dag::validate(figure_spec()); }

// s -> v1 -> ... -> t with the given risks.
inline Dag chain(const std::vector<double>& risks) {
    GraphSpec s;
    s.source = "s";
    s.destination = "t";
    std::string prev = "s";
    for (size_t k = 0; k < risks.size(); ++k) {
        std::string next = k + 1 == risks.size() ? "t" : "v" + std::to_string(k + 1);
        s.edges.push_back({prev + "->" + next, prev, next, risks[k]});
        prev = next;
    }
    return Dag::validate(s);
}

inline Dag double_path(double risk = 0.5) {
    GraphSpec s;
    s.source = "s";
    s.destination = "t";
    s.edges = {{"s->a", "s", "a", risk},
               {"s->b", "s", "b", risk},
               {"a->t", "a", "t", risk},
               {"b->t", "b", "t", risk}};
    return Dag::validate(s);
}

// Edge under test feeds n parallel branches v->u_k of risk fan_risk; each
// branch continues to the destination with risk tail_risk. Gives the edge
// s->v exactly n neighbors of equal risk and equal remainder.
inline Dag fan(int n, double lead_risk, double fan_risk, double tail_risk) {
    GraphSpec s;
    s.source = "s";
    s.destination = "t";
    s.edges.push_back({"s->v", "s", "v", lead_risk});
    for (int k = 0; k < n; ++k) {
        std::string u = "u" + std::string(k < 10 ? "0" : "") + std::to_string(k);
        s.edges.push_back({"v->" + u, "v", u, fan_risk});
        s.edges.push_back({u + "->t", u, "t", tail_risk});
    }
    return Dag::validate(s);
}

// Random DAG on 3..8 vertices in a fixed topological order, forward edges
// sampled independently, risks uniform with occasional exact 0 and 1.
// Dead ends and unreachable destinations are intentionally possible.
inline Dag random_dag(std::uint64_t seed, int max_edges = 16) {
    SplitMix64 rng(seed);
    int nv = 3 + static_cast<int>(rng.next() % 6);
    double p = 0.3 + 0.5 * rng.next_double();
    GraphSpec s;
    s.source = "v0";
    s.destination = "v" + std::to_string(nv - 1);
    s.vertices = std::vector<std::string>{};
    for (int v = 0; v < nv; ++v) s.vertices->push_back("v" + std::to_string(v));
    for (int a = 0; a < nv && static_cast<int>(s.edges.size()) < max_edges; ++a) {
        for (int b = a + 1; b < nv && static_cast<int>(s.edges.size()) < max_edges; ++b) {
            if (rng.next_double() >= p) continue;
            double risk = rng.next_double();
            std::uint64_t special = rng.next() % 20;
            if (special == 0) risk = 0.0;
            if (special == 1) risk = 1.0;
            std::string tail = "v" + std::to_string(a);
            std::string head = "v" + std::to_string(b);
            s.edges.push_back({tail + "->" + head, tail, head, risk});
        }
    }
    return Dag::validate(s);
}

// Failure probability summed over every one of the 2^|J| worlds, running
// the greedy walk in each. Slow but assumption-free.
inline double brute_force_failure(const Dag& dag, const Accumulation& acc) {
    const int n = dag.edge_count();
    double failure = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        World w;
        w.broken.resize(static_cast<size_t>(n));
        double prob = 1.0;
        for (int i = 0; i < n; ++i) {
            bool broken = (mask >> i) & 1;
            w.broken[static_cast<size_t>(i)] = broken ? 1 : 0;
            prob *= broken ? acc.risk[static_cast<size_t>(i)]
                           : 1.0 - acc.risk[static_cast<size_t>(i)];
        }
        if (prob == 0.0) continue;
        if (!greedy_walk(dag, acc, w).reached) failure += prob;
    }
    return failure;
}

}  // namespace riskpath::testing
