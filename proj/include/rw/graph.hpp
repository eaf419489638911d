#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rw/bits128.hpp"

namespace rw {

constexpr int kMaxVertices = 128;

using Vertex = int;
using Edge = std::pair<int, int>;  // normalized u < v

// Subset of the vertices of a host graph.
struct VertexSet {
    Bits128 bits;

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.bits.set(v);
        return s;
    }
    static VertexSet all(int n) { return VertexSet{Bits128::below(n)}; }

    int count() const { return bits.count(); }
    bool empty() const { return bits.empty(); }
    bool contains(int v) const { return bits.test(v); }
    void add(int v) { bits.set(v); }
    void remove(int v) { bits.reset(v); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v : iterate(bits)) out.push_back(v);
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

// Immutable undirected simple graph on vertices 0..n-1, n <= 128.
// Adjacency is stored as one bit row per vertex; all per-vertex queries are
// word operations. Construction normalizes to symmetric and irreflexive.
class Graph {
public:
    Graph() = default;

    static Graph empty(int n);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph complete_multipartite(const std::vector<int>& part_sizes);
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int size() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bits128& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int min_degree() const;  // 0 for the empty graph

    long long edge_count() const;
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    friend Graph graph_with_rows(int n, std::vector<Bits128> rows);
    int n_ = 0;
    std::vector<Bits128> adj_;
};

// Internal trusted constructor used by the builders in this module.
Graph graph_with_rows(int n, std::vector<Bits128> rows);

// --- derived graphs (originals are never mutated) ---

Graph with_edge(const Graph& g, int u, int v);
Graph without_edge(const Graph& g, int u, int v);
Graph induced_subgraph(const Graph& g, const VertexSet& s);  // relabels, ascending
Graph neighborhood_graph(const Graph& g, int v);             // induced on N(v)
Graph complement(const Graph& g);
// Disjoint union plus all edges between the two sides; B is relabeled by +|A|.
Graph join(const Graph& a, const Graph& b);

// --- counting and ordering ---

std::uint64_t triangle_count(const Graph& g);

struct EdgeSupport {
    std::vector<std::pair<Edge, int>> per_edge;  // triangles through each edge
    std::optional<int> min;                      // absent when there are no edges
};
EdgeSupport edge_triangle_support(const Graph& g);

struct DegeneracyOrder {
    std::vector<int> order;  // v_1 ... v_n as order[0..n-1]
    int bound = 0;           // max forward degree along the order

    // position[v] = index of v in `order`
    std::vector<int> positions(int n) const;
};

// Repeated minimum-degree removal (smallest index on ties), emitted in
// reverse. The bound achieved is the degeneracy of the graph.
DegeneracyOrder degeneracy_order(const Graph& g);

// Forward neighborhood N+(v): neighbors earlier in the given order.
Bits128 forward_neighbors(const Graph& g, const DegeneracyOrder& ord, int v);

// --- restricted views used by the peeling machinery ---

// Degree of v inside the induced subgraph on `mask`.
inline int degree_in(const Graph& g, const Bits128& mask, int v) {
    return (g.neighbors(v) & mask).count();
}
long long edges_in(const Graph& g, const Bits128& mask);
std::uint64_t triangles_in(const Graph& g, const Bits128& mask);
// e(G[N(v) ∩ mask])
long long edges_in_neighborhood(const Graph& g, const Bits128& mask, int v);

// --- graph6 ---

struct ParseError : std::runtime_error {
    std::size_t byte_offset;
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"),
          byte_offset(off) {}
};

// One graph6 line, with or without the optional ">>graph6<<" header.
// Rejects bytes outside 63..126, truncated or oversized payloads, n > 128.
Graph parse_graph6(std::string_view text);

// Canonical emission: no header, minimal size encoding, zero padding bits.
// parse_graph6(emit_graph6(g)) == g, and emission is byte-stable.
std::string emit_graph6(const Graph& g);

}  // namespace rw
