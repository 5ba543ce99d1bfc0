#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "riskpath/accumulate.hpp"
#include "riskpath/graph.hpp"
#include "riskpath/rng.hpp"

namespace riskpath {

/// One realized failure state per edge, indexed by edge.
struct World {
    std::vector<std::uint8_t> broken;
    bool is_broken(EdgeIndex i) const { return broken[static_cast<size_t>(i)] != 0; }
};

/// Each edge independently broken with its own risk probability.
World sample_world(const Dag& dag, SplitMix64& rng);
/// World of a given Monte Carlo trial: substream (seed, trial), edges drawn
/// in edge-id order.
World world_for_trial(const Dag& dag, std::uint64_t seed, std::uint64_t trial);

struct WalkStep {
    VertexIndex at = -1;
    std::vector<EdgeIndex> broken_out_edges;  // what the walker saw here
    std::optional<EdgeIndex> chosen;
};

struct WalkTrace {
    std::vector<WalkStep> steps;
    std::vector<EdgeIndex> path;  // edges traversed, in order
    bool reached = false;         // false: stuck with every out-edge broken or absent
};

/// Greedy episode: from the source, observe the out-edges of the current
/// vertex only, traverse the first intact edge in attempt order, never
/// backtrack. Stops on reaching the destination or getting stuck.
WalkTrace greedy_walk(const Dag& dag, const Accumulation& acc, const World& world);

/// Same episode, but after each observation the failed edges are removed
/// from the walker's knowledge and the accumulation is recomputed on the
/// remaining graph. On a DAG this provably picks the same edges as
/// greedy_walk; it exists to check that claim.
WalkTrace greedy_walk_with_reaccumulation(const Dag& dag, Model model, OrderKey key,
                                          const World& world);

struct TrialSummary {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double failure_rate = 0.0;
    double predicted = 0.0;  // the model's source risk
    std::optional<double> z_score;  // absent when the binomial sigma is 0 and rate != predicted
    std::uint64_t seed = 0;
};

TrialSummary monte_carlo(const Dag& dag, Model model, std::uint64_t trials, std::uint64_t seed,
                         OrderKey key = OrderKey::accumulated);

class EnumerationLimitError : public std::runtime_error {
public:
    explicit EnumerationLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ExactEdgeStat {
    double commit_probability = 0.0;   // P(walk traverses the edge intact)
    double conditional_failure = 0.0;  // P(mission fails | committed to it)
};

struct ExactResult {
    double failure = 0.0;  // exact probability that the greedy walk gets stuck
    std::vector<std::optional<ExactEdgeStat>> per_edge;  // nullopt: never committed
};

/// Exact failure probability of the greedy walk by enumerating edge-failure
/// worlds. Worlds are expanded lazily: only edges the walk actually observes
/// are branched on, the rest marginalize out. Guarded by max_edges (throws
/// EnumerationLimitError beyond it).
ExactResult enumerate_exact(const Dag& dag, const Accumulation& acc, int max_edges = 25);
ExactResult enumerate_exact(const Dag& dag, Model model, int max_edges = 25,
                            OrderKey key = OrderKey::accumulated);

struct StaticPath {
    std::vector<EdgeIndex> edges;
    double success = 0.0;
};

/// No-reroute baseline: the source-to-destination path maximizing the
/// product of edge success probabilities (shortest path under -log(1-R)
/// weights). Ties broken toward the lexicographically smallest edge-id
/// sequence. Throws GraphError when no path with positive success exists.
StaticPath static_most_reliable_path(const Dag& dag);

}  // namespace riskpath
