#include "riskpath/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace riskpath {

const std::vector<EdgeIndex> Dag::kNoNeighbors{};

namespace {

// Kahn's algorithm with a min-heap on vertex name, so the order is
// deterministic and independent of input edge order.
std::vector<VertexIndex> topological_order(const std::vector<std::string>& names,
                                           const std::vector<std::vector<EdgeIndex>>& out_edges,
                                           const std::vector<Dag::Edge>& edges) {
    const size_t n = names.size();
    std::vector<int> in_degree(n, 0);
    for (const auto& e : edges) in_degree[static_cast<size_t>(e.head)]++;

    auto cmp = [&names](VertexIndex a, VertexIndex b) {
        return names[static_cast<size_t>(a)] > names[static_cast<size_t>(b)];
    };
    std::priority_queue<VertexIndex, std::vector<VertexIndex>, decltype(cmp)> ready(cmp);
    for (size_t v = 0; v < n; ++v)
        if (in_degree[v] == 0) ready.push(static_cast<VertexIndex>(v));

    std::vector<VertexIndex> order;
    order.reserve(n);
    while (!ready.empty()) {
        VertexIndex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (EdgeIndex ei : out_edges[static_cast<size_t>(v)]) {
            VertexIndex h = edges[static_cast<size_t>(ei)].head;
            if (--in_degree[static_cast<size_t>(h)] == 0) ready.push(h);
        }
    }
    if (order.size() != n) {
        // Some vertex kept a positive in-degree: a directed cycle exists.
        for (size_t v = 0; v < n; ++v) {
            if (in_degree[v] > 0)
                throw GraphError("cycle detected through vertex '" + names[v] + "'");
        }
    }
    return order;
}

}  // namespace

Dag Dag::validate(const GraphSpec& spec) {
    if (spec.source.empty()) throw GraphError("missing source vertex");
    if (spec.destination.empty()) throw GraphError("missing destination vertex");
    if (spec.source == spec.destination)
        throw GraphError("source and destination must be distinct (both '" + spec.source + "')");

    Dag dag;

    std::set<std::string> vertex_set;
    if (spec.vertices) {
        for (const auto& v : *spec.vertices) vertex_set.insert(v);
        for (const auto& name : {spec.source, spec.destination})
            if (!vertex_set.count(name))
                throw GraphError("dangling vertex reference: '" + name + "' not in vertex list");
        for (const auto& e : spec.edges)
            for (const auto& name : {e.tail, e.head})
                if (!vertex_set.count(name))
                    throw GraphError("edge '" + e.id + "': dangling vertex reference '" + name + "'");
    } else {
        vertex_set.insert(spec.source);
        vertex_set.insert(spec.destination);
        for (const auto& e : spec.edges) {
            vertex_set.insert(e.tail);
            vertex_set.insert(e.head);
        }
    }

    dag.vertex_names_.assign(vertex_set.begin(), vertex_set.end());
    for (size_t v = 0; v < dag.vertex_names_.size(); ++v)
        dag.vertex_by_name_[dag.vertex_names_[v]] = static_cast<VertexIndex>(v);
    dag.source_ = dag.vertex_by_name_.at(spec.source);
    dag.destination_ = dag.vertex_by_name_.at(spec.destination);

    std::vector<EdgeSpec> sorted = spec.edges;
    std::sort(sorted.begin(), sorted.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });

    std::set<std::pair<VertexIndex, VertexIndex>> seen_pairs;
    dag.edges_.reserve(sorted.size());
    for (const auto& es : sorted) {
        if (es.id.empty()) throw GraphError("edge with empty id");
        if (dag.edge_by_id_.count(es.id)) throw GraphError("duplicate edge id '" + es.id + "'");
        Edge e;
        e.id = es.id;
        e.tail = dag.vertex_by_name_.at(es.tail);
        e.head = dag.vertex_by_name_.at(es.head);
        if (e.tail == e.head)
            throw GraphError("edge '" + es.id + "': self-loop on vertex '" + es.tail + "'");
        if (!seen_pairs.insert({e.tail, e.head}).second)
            throw GraphError("duplicate edge between '" + es.tail + "' and '" + es.head +
                             "' (edge '" + es.id + "')");
        e.risk = spec.uniform_risk ? spec.uniform_risk : es.risk;
        if (e.risk && !(*e.risk >= 0.0 && *e.risk <= 1.0))
            throw GraphError("edge '" + es.id + "': risk " + std::to_string(*e.risk) +
                             " outside [0,1]");
        dag.edge_by_id_[e.id] = static_cast<EdgeIndex>(dag.edges_.size());
        dag.edges_.push_back(std::move(e));
    }

    const size_t nv = dag.vertex_names_.size();
    dag.out_edges_.assign(nv, {});
    dag.in_edges_.assign(nv, {});
    for (size_t i = 0; i < dag.edges_.size(); ++i) {
        // Edges are sorted by id, so adjacency lists come out in id order.
        dag.out_edges_[static_cast<size_t>(dag.edges_[i].tail)].push_back(static_cast<EdgeIndex>(i));
        dag.in_edges_[static_cast<size_t>(dag.edges_[i].head)].push_back(static_cast<EdgeIndex>(i));
    }

    dag.topo_vertices_ = topological_order(dag.vertex_names_, dag.out_edges_, dag.edges_);

    // Out-edges of a vertex must follow the out-edges of every successor
    // vertex, so walking vertices sink-side first gives a linear extension
    // of the N(i) partial order.
    dag.reverse_topo_edges_.reserve(dag.edges_.size());
    for (auto it = dag.topo_vertices_.rbegin(); it != dag.topo_vertices_.rend(); ++it)
        for (EdgeIndex ei : dag.out_edges_[static_cast<size_t>(*it)])
            dag.reverse_topo_edges_.push_back(ei);

    // Reachability warnings; the accumulation recursions stay well-defined,
    // so these do not reject the graph.
    {
        std::vector<char> from_source(nv, 0), to_destination(nv, 0);
        from_source[static_cast<size_t>(dag.source_)] = 1;
        for (VertexIndex v : dag.topo_vertices_)
            if (from_source[static_cast<size_t>(v)])
                for (EdgeIndex ei : dag.out_edges_[static_cast<size_t>(v)])
                    from_source[static_cast<size_t>(dag.edges_[static_cast<size_t>(ei)].head)] = 1;
        to_destination[static_cast<size_t>(dag.destination_)] = 1;
        for (auto it = dag.topo_vertices_.rbegin(); it != dag.topo_vertices_.rend(); ++it)
            for (EdgeIndex ei : dag.out_edges_[static_cast<size_t>(*it)])
                if (to_destination[static_cast<size_t>(dag.edges_[static_cast<size_t>(ei)].head)])
                    to_destination[static_cast<size_t>(*it)] = 1;
        for (size_t v = 0; v < nv; ++v) {
            if (!from_source[v])
                dag.warnings_.push_back("vertex '" + dag.vertex_names_[v] +
                                        "' is unreachable from the source");
            if (!to_destination[v])
                dag.warnings_.push_back("vertex '" + dag.vertex_names_[v] +
                                        "' cannot reach the destination");
        }
    }

    return dag;
}

EdgeIndex Dag::edge_index(std::string_view id) const {
    auto it = edge_by_id_.find(std::string(id));
    if (it == edge_by_id_.end()) throw GraphError("unknown edge id '" + std::string(id) + "'");
    return it->second;
}

bool Dag::has_edge(std::string_view id) const {
    return edge_by_id_.count(std::string(id)) > 0;
}

VertexIndex Dag::vertex_index(std::string_view name) const {
    auto it = vertex_by_name_.find(std::string(name));
    if (it == vertex_by_name_.end())
        throw GraphError("unknown vertex '" + std::string(name) + "'");
    return it->second;
}

bool Dag::has_numeric_risks() const {
    for (const auto& e : edges_)
        if (!e.risk) return false;
    return true;
}

double Dag::risk(EdgeIndex i) const {
    const Edge& e = edges_[static_cast<size_t>(i)];
    if (!e.risk) throw GraphError("edge '" + e.id + "': missing numeric risk");
    return *e.risk;
}

Dag Dag::with_uniform_risk(double alpha) const {
    GraphSpec s = spec();
    s.uniform_risk = alpha;
    return validate(s);
}

Dag Dag::without_edges(const std::vector<EdgeIndex>& removed) const {
    std::vector<char> drop(edges_.size(), 0);
    for (EdgeIndex i : removed) drop[static_cast<size_t>(i)] = 1;
    GraphSpec s;
    s.source = vertex_names_[static_cast<size_t>(source_)];
    s.destination = vertex_names_[static_cast<size_t>(destination_)];
    s.vertices = vertex_names_;  // keep isolated vertices; indices stay comparable
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (drop[i]) continue;
        const Edge& e = edges_[i];
        s.edges.push_back({e.id, vertex_names_[static_cast<size_t>(e.tail)],
                           vertex_names_[static_cast<size_t>(e.head)], e.risk});
    }
    return validate(s);
}

GraphSpec Dag::spec() const {
    GraphSpec s;
    s.source = vertex_names_[static_cast<size_t>(source_)];
    s.destination = vertex_names_[static_cast<size_t>(destination_)];
    for (const auto& e : edges_)
        s.edges.push_back({e.id, vertex_names_[static_cast<size_t>(e.tail)],
                           vertex_names_[static_cast<size_t>(e.head)], e.risk});
    return s;
}

}  // namespace riskpath
