#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace riskpath {

using VertexIndex = int;
using EdgeIndex = int;

class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EdgeSpec {
    std::string id;
    std::string tail;
    std::string head;
    std::optional<double> risk;
};

/// Raw graph description, as parsed from a file or built programmatically.
struct GraphSpec {
    std::vector<EdgeSpec> edges;
    std::string source;
    std::string destination;
    std::optional<double> uniform_risk;
    // When present, edges may only reference these vertices.
    std::optional<std::vector<std::string>> vertices;
};

/// Validated simple directed acyclic graph with per-edge failure risks.
///
/// Immutable after construction; safe to share across threads. Edges are
/// stored sorted by id, and every derived ordering (out-edge lists, edge
/// neighborhoods, topological orders) is deterministic for a given graph.
class Dag {
public:
    struct Edge {
        std::string id;
        VertexIndex tail = -1;
        VertexIndex head = -1;
        std::optional<double> risk;
    };

    /// Checks every invariant (simple, acyclic, risks in [0,1], distinct
    /// source/destination, no dangling vertex references) and builds the
    /// adjacency caches. Throws GraphError naming the offending element.
    static Dag validate(const GraphSpec& spec);

    int edge_count() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }

    const Edge& edge(EdgeIndex i) const { return edges_[static_cast<size_t>(i)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& edge_id(EdgeIndex i) const { return edges_[static_cast<size_t>(i)].id; }

    const std::string& vertex_name(VertexIndex v) const { return vertex_names_[static_cast<size_t>(v)]; }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }

    VertexIndex source() const { return source_; }
    VertexIndex destination() const { return destination_; }

    /// Index of the edge with the given id; throws GraphError if unknown.
    EdgeIndex edge_index(std::string_view id) const;
    bool has_edge(std::string_view id) const;
    VertexIndex vertex_index(std::string_view name) const;

    /// Out-edges of a vertex, in edge-id order.
    const std::vector<EdgeIndex>& out_edges(VertexIndex v) const {
        return out_edges_[static_cast<size_t>(v)];
    }
    const std::vector<EdgeIndex>& in_edges(VertexIndex v) const {
        return in_edges_[static_cast<size_t>(v)];
    }

    /// Edge neighborhood N(i): the out-edges of head(i), in edge-id order.
    /// Empty for terminal edges, even if the destination has out-edges.
    const std::vector<EdgeIndex>& neighbors(EdgeIndex i) const {
        if (terminal(i)) return kNoNeighbors;
        return out_edges_[static_cast<size_t>(edges_[static_cast<size_t>(i)].head)];
    }

    /// Edge order in which every edge appears after all members of N(i).
    const std::vector<EdgeIndex>& reverse_topological_edge_order() const {
        return reverse_topo_edges_;
    }

    /// Topological vertex order (source side first), deterministic.
    const std::vector<VertexIndex>& topological_vertices() const { return topo_vertices_; }

    bool terminal(EdgeIndex i) const { return edges_[static_cast<size_t>(i)].head == destination_; }

    bool has_numeric_risks() const;
    /// Numeric risk of an edge; throws GraphError when the risk is missing.
    double risk(EdgeIndex i) const;

    /// Copy of this graph with every edge risk replaced by alpha.
    Dag with_uniform_risk(double alpha) const;
    /// Copy of this graph with the given edges removed (knowledge update).
    Dag without_edges(const std::vector<EdgeIndex>& removed) const;

    /// Non-fatal validation findings (unreachable vertices, dead ends).
    const std::vector<std::string>& warnings() const { return warnings_; }

    /// Raw description equivalent to this graph (edges sorted by id).
    GraphSpec spec() const;

private:
    Dag() = default;

    static const std::vector<EdgeIndex> kNoNeighbors;

    std::vector<std::string> vertex_names_;
    std::vector<Edge> edges_;
    VertexIndex source_ = -1;
    VertexIndex destination_ = -1;
    std::unordered_map<std::string, EdgeIndex> edge_by_id_;
    std::unordered_map<std::string, VertexIndex> vertex_by_name_;
    std::vector<std::vector<EdgeIndex>> out_edges_;
    std::vector<std::vector<EdgeIndex>> in_edges_;
    std::vector<VertexIndex> topo_vertices_;
    std::vector<EdgeIndex> reverse_topo_edges_;
    std::vector<std::string> warnings_;
};

}  // namespace riskpath
