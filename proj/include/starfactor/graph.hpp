#ifndef STARFACTOR_GRAPH_HPP
#define STARFACTOR_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starfactor/util.hpp"

namespace starfactor {

// Immutable simple undirected graph. Vertices are dense 0-based integers,
// neighbor lists are kept sorted, and all iteration orders are deterministic.
class Graph {
public:
    Graph() = default;
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    const std::vector<Edge>& edges() const { return edges_; }
    // Index of edge {u,v} in edges(), or nullopt.
    std::optional<int> edge_index(int u, int v) const;

    int max_degree() const;
    int min_degree() const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> adj_edge_ids_;  // aligned with adj_
    std::vector<Edge> edges_;                     // sorted (u,v), u < v
};

// Undirected multigraph (no self-loops). Only edge contraction and the
// degree-constrained-subgraph machinery consume this; everything else keeps
// the simple-graph invariant.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(int n, std::vector<Edge> edges);
    static MultiGraph from_graph(const Graph& g) { return MultiGraph(g.order(), g.edges()); }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    int degree(int v) const { return deg_[v]; }
    // (neighbor, edge id) pairs, sorted by neighbor then id.
    const std::vector<std::pair<int, int>>& incident(int v) const { return inc_[v]; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::pair<int, int>> inc_storage_unused_;  // keep layout simple
    std::vector<std::vector<std::pair<int, int>>> inc_;
    std::vector<int> deg_;
};

// ---- parsing / serialization ----

// graph6 per McKay's format description; bit-exact for all supported sizes.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// Lines "u v"; an optional first line "n <count>" declares the vertex count.
Graph parse_edge_list(const std::string& text);

// DIMACS "p edge n m" with "e u v" lines (1-based); alias to edge-list semantics.
Graph parse_dimacs(const std::string& text);

// ---- structural operations (all pure) ----

struct SubgraphResult {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for removed vertices
    std::vector<int> new_to_old;
};

SubgraphResult induced_subgraph(const Graph& g, const VertexSet& s);
SubgraphResult delete_vertices(const Graph& g, const VertexSet& s);

struct IsoResult {
    int count;
    VertexSet members;  // Iso(G-S), as a subset of V(G)
};
IsoResult isolated_count(const Graph& g, const VertexSet& s);

struct ContractionResult {
    MultiGraph graph;
    int merged;                    // id of the merged vertex in the result
    std::vector<int> old_to_new;   // both contracted endpoints map to merged
    std::vector<Edge> edge_origin; // per multigraph edge, the original G edge
};
ContractionResult contract_edge(const Graph& g, Edge e);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace starfactor

#endif
