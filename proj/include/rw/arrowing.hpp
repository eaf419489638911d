#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rw/exact.hpp"
#include "rw/graph.hpp"

namespace rw {

enum class EdgeColor : std::uint8_t { red = 0, blue = 1 };

// Total assignment of red/blue over the edge list of a graph.
struct EdgeTwoColoring {
    std::vector<Edge> edges;            // normalized, sorted ascending
    std::vector<EdgeColor> color;       // parallel to edges

    std::optional<EdgeColor> color_of(int u, int v) const;
    // Vertices of some monochromatic K_t, or nullopt. Independent of the
    // search: runs a clique solver on each color class.
    std::optional<VertexSet> monochromatic_clique(const Graph& g, int t) const;
};

struct ArrowingResult {
    bool decided = false;   // false: node budget exhausted, no verdict
    bool arrows = false;
    std::optional<EdgeTwoColoring> certificate;  // present iff decided && !arrows
    std::uint64_t nodes_explored = 0;
};

constexpr std::uint64_t kDefaultArrowingBudget = 100'000'000;

// Does every red/blue edge coloring of G contain a monochromatic K_t?
// Complete backtracking over edges in degree-descending order with forced-
// edge propagation; the first edge is fixed red. Certificates are verified
// with an independent clique search before being returned.
ArrowingResult arrows(const Graph& g, int t,
                      std::uint64_t budget = kDefaultArrowingBudget);

// Least n such that K_n arrows K_t: 2 -> 2, 3 -> 6 by search. Larger t is
// out of reach for a complete search and is rejected.
int ramsey_number(int t);

// Push a 2-edge-coloring of K_k through a proper k-coloring of G: the edge
// {u,v} inherits the color of {c(u), c(v)}. A monochromatic K_t in the
// lifted coloring would project to one in phi, so a K_t-free phi certifies
// that G does not arrow K_t.
EdgeTwoColoring lift_coloring(const Graph& g, const ProperColoring& c,
                              const EdgeTwoColoring& phi_on_complete);

// Red pentagon / blue pentagram on K_5; both classes are triangle-free, so
// lifting it through any proper 5-coloring certifies a negative K_3 arrow.
EdgeTwoColoring pentagon_coloring();

struct ReductionResult {
    Graph core;
    bool complete = false;     // false when the budget ran out mid-reduction
    std::uint64_t nodes_explored = 0;
};

// Shrink an arrowing graph to a critical core: drop edges in no K_t, then
// greedily delete edges in lexicographic order whenever arrowing survives,
// finally discard isolated vertices. Each surviving edge is load-bearing:
// deleting it (or any vertex) breaks arrowing.
ReductionResult ramsey_critical_reduce(const Graph& g, int t,
                                       std::uint64_t budget_per_test = kDefaultArrowingBudget);

// Every edge lies in at least two distinct copies of K_t.
bool critical_edge_double_cover_check(const Graph& g, int t);

// Number of K_s subgraphs.
std::uint64_t count_clique_copies(const Graph& g, int s);

}  // namespace rw
