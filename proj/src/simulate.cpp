#include "riskpath/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace riskpath {

World sample_world(const Dag& dag, SplitMix64& rng) {
    World w;
    w.broken.resize(static_cast<size_t>(dag.edge_count()));
    for (int i = 0; i < dag.edge_count(); ++i)
        w.broken[static_cast<size_t>(i)] = rng.next_double() < dag.risk(i) ? 1 : 0;
    return w;
}

World world_for_trial(const Dag& dag, std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 rng = SplitMix64::stream(seed, trial);
    return sample_world(dag, rng);
}

namespace {

// Out-edges of a vertex in attempt order. N(i) depends only on head(i), so
// the order stored per edge is really a per-vertex order; the source order
// covers vertices with no incoming committed edge.
std::vector<EdgeIndex> vertex_order(const Dag& dag, const Accumulation& acc, VertexIndex v) {
    if (v == dag.source()) return acc.source_order;
    const auto& outs = dag.out_edges(v);
    for (EdgeIndex in : dag.in_edges(v))
        if (!acc.attempt_order[static_cast<size_t>(in)].empty() || outs.empty())
            return acc.attempt_order[static_cast<size_t>(in)];
    // vertex only reachable via edges that never stored an order (cannot
    // happen for walk-reachable vertices); fall back to a fresh sort
    std::vector<EdgeIndex> order = outs;
    const auto& value =
        acc.order_key == OrderKey::remainder && !acc.remainder.empty() ? acc.remainder
                                                                       : acc.accumulated;
    std::stable_sort(order.begin(), order.end(), [&value](EdgeIndex a, EdgeIndex b) {
        return value[static_cast<size_t>(a)] < value[static_cast<size_t>(b)];
    });
    return order;
}

}  // namespace

WalkTrace greedy_walk(const Dag& dag, const Accumulation& acc, const World& world) {
    WalkTrace trace;
    VertexIndex v = dag.source();
    while (v != dag.destination()) {
        WalkStep step;
        step.at = v;
        for (EdgeIndex e : dag.out_edges(v))
            if (world.is_broken(e)) step.broken_out_edges.push_back(e);
        for (EdgeIndex e : vertex_order(dag, acc, v)) {
            if (!world.is_broken(e)) {
                step.chosen = e;
                break;
            }
        }
        trace.steps.push_back(step);
        if (!step.chosen) {
            trace.reached = false;
            return trace;
        }
        trace.path.push_back(*step.chosen);
        v = dag.edge(*step.chosen).head;
    }
    trace.reached = true;
    return trace;
}

WalkTrace greedy_walk_with_reaccumulation(const Dag& dag, Model model, OrderKey key,
                                          const World& world) {
    WalkTrace trace;
    std::vector<EdgeIndex> removed;  // indices in the original dag
    Dag known = dag;
    Accumulation acc = accumulate(known, model, key);

    VertexIndex v = dag.source();
    while (v != dag.destination()) {
        WalkStep step;
        step.at = v;
        bool saw_broken = false;
        for (EdgeIndex e : dag.out_edges(v)) {
            if (world.is_broken(e)) {
                step.broken_out_edges.push_back(e);
                removed.push_back(e);
                saw_broken = true;
            }
        }
        if (saw_broken) {
            known = dag.without_edges(removed);
            acc = accumulate(known, model, key);
        }
        // pick the first out-edge in the re-accumulated order; every
        // candidate left in the known graph is intact at this vertex
        VertexIndex kv = known.vertex_index(dag.vertex_name(v));
        std::optional<EdgeIndex> chosen;
        for (EdgeIndex ke : vertex_order(known, acc, kv)) {
            chosen = dag.edge_index(known.edge_id(ke));
            break;
        }
        step.chosen = chosen;
        trace.steps.push_back(step);
        if (!chosen) {
            trace.reached = false;
            return trace;
        }
        trace.path.push_back(*chosen);
        v = dag.edge(*chosen).head;
    }
    trace.reached = true;
    return trace;
}

TrialSummary monte_carlo(const Dag& dag, Model model, std::uint64_t trials, std::uint64_t seed,
                         OrderKey key) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: trials must be >= 1");
    Accumulation acc = accumulate(dag, model, key);

    TrialSummary s;
    s.trials = trials;
    s.seed = seed;
    s.predicted = acc.source_risk;
    for (std::uint64_t t = 0; t < trials; ++t) {
        World w = world_for_trial(dag, seed, t);
        if (!greedy_walk(dag, acc, w).reached) s.failures++;
    }
    s.failure_rate = static_cast<double>(s.failures) / static_cast<double>(trials);
    double sigma = std::sqrt(s.predicted * (1.0 - s.predicted) / static_cast<double>(trials));
    if (sigma > 0.0)
        s.z_score = (s.failure_rate - s.predicted) / sigma;
    else if (s.failure_rate == s.predicted)
        s.z_score = 0.0;
    return s;
}

namespace {

struct Enumerator {
    const Dag& dag;
    const Accumulation& acc;
    double failure = 0.0;
    std::vector<double> commit;       // probability of traversing each edge
    std::vector<double> commit_fail;  // ... and then failing the mission
    std::vector<EdgeIndex> path;

    explicit Enumerator(const Dag& d, const Accumulation& a)
        : dag(d),
          acc(a),
          commit(static_cast<size_t>(d.edge_count()), 0.0),
          commit_fail(static_cast<size_t>(d.edge_count()), 0.0) {}

    void stuck(double prob) {
        failure += prob;
        for (EdgeIndex e : path) commit_fail[static_cast<size_t>(e)] += prob;
    }

    // Branch on the walk's observations only: trying edges in attempt
    // order, each is broken with probability R (walk moves to the next) or
    // intact with 1-R (walk commits). Unobserved edges contribute factor 1.
    void visit(VertexIndex v, double prob) {
        if (v == dag.destination()) return;
        double all_broken = prob;
        for (EdgeIndex e : vertex_order(dag, acc, v)) {
            double r = acc.risk[static_cast<size_t>(e)];
            double take = all_broken * (1.0 - r);
            if (take > 0.0) {
                commit[static_cast<size_t>(e)] += take;
                path.push_back(e);
                visit(dag.edge(e).head, take);
                path.pop_back();
            }
            all_broken *= r;
            if (all_broken == 0.0) return;
        }
        stuck(all_broken);
    }
};

}  // namespace

ExactResult enumerate_exact(const Dag& dag, const Accumulation& acc, int max_edges) {
    if (dag.edge_count() > max_edges)
        throw EnumerationLimitError("graph too large for enumeration: " +
                                    std::to_string(dag.edge_count()) + " edges (limit " +
                                    std::to_string(max_edges) + ")");
    Enumerator en(dag, acc);
    en.visit(dag.source(), 1.0);

    ExactResult out;
    out.failure = en.failure;
    out.per_edge.resize(static_cast<size_t>(dag.edge_count()));
    for (size_t i = 0; i < out.per_edge.size(); ++i) {
        if (en.commit[i] > 0.0)
            out.per_edge[i] = ExactEdgeStat{en.commit[i], en.commit_fail[i] / en.commit[i]};
    }
    return out;
}

ExactResult enumerate_exact(const Dag& dag, Model model, int max_edges, OrderKey key) {
    return enumerate_exact(dag, accumulate(dag, model, key), max_edges);
}

StaticPath static_most_reliable_path(const Dag& dag) {
    const double kInf = std::numeric_limits<double>::infinity();
    const size_t nv = static_cast<size_t>(dag.vertex_count());
    std::vector<double> cost(nv, kInf);  // sum of -log(1-R) to destination
    std::vector<EdgeIndex> via(nv, -1);

    cost[static_cast<size_t>(dag.destination())] = 0.0;
    const auto& topo = dag.topological_vertices();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        VertexIndex v = *it;
        if (v == dag.destination()) continue;
        for (EdgeIndex e : dag.out_edges(v)) {  // id order: ties keep the smaller id
            double r = dag.risk(e);
            if (r >= 1.0) continue;
            double c = -std::log1p(-r) + cost[static_cast<size_t>(dag.edge(e).head)];
            if (c < cost[static_cast<size_t>(v)]) {
                cost[static_cast<size_t>(v)] = c;
                via[static_cast<size_t>(v)] = e;
            }
        }
    }

    if (cost[static_cast<size_t>(dag.source())] == kInf)
        throw GraphError("no source-to-destination path with positive success probability");

    StaticPath best;
    best.success = 1.0;
    for (VertexIndex v = dag.source(); v != dag.destination();) {
        EdgeIndex e = via[static_cast<size_t>(v)];
        best.edges.push_back(e);
        best.success *= 1.0 - dag.risk(e);
        v = dag.edge(e).head;
    }
    return best;
}

}  // namespace riskpath
