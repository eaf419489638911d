#pragma once

#include <optional>
#include <vector>

#include "rw/graph.hpp"
#include "rw/rational.hpp"

namespace rw {

struct ProperColoring {
    std::vector<int> color;  // per vertex, 0..k-1
    int k = 0;

    bool proper_on(const Graph& g) const;
};

// Complete backtracking search for a proper k-coloring. Returns a witness or
// a definitive "no". Vertices are picked by saturation degree (DSATUR rule),
// new colors are introduced in order, ties go to the smallest index, so the
// witness is reproducible.
std::optional<ProperColoring> is_k_colorable(const Graph& g, int k);

// Exact chromatic number with witness. Brackets by clique lower bound and
// greedy upper bound, then closes the gap by bisection over is_k_colorable.
std::pair<int, ProperColoring> chromatic_number(const Graph& g);

struct CliqueResult {
    VertexSet members;  // lexicographically least among optimal sets
    int size = 0;
};

// Exact maximum clique: branch and bound with a greedy-coloring bound.
CliqueResult max_clique(const Graph& g);
// Exact: max_clique on the complement.
CliqueResult max_independent_set(const Graph& g);

// True iff the induced subgraph on `sub` contains a clique of k vertices.
bool has_clique_of_size(const Graph& g, const Bits128& sub, int k);

struct CriticalWitness {
    VertexSet subgraph;  // vertices of the host graph
    int r = 0;
};

// An induced subgraph with chromatic number exactly r from which no single
// vertex can be removed without dropping below r. One ascending sweep
// suffices: once deleting v would drop the chromatic number, that stays true
// for every induced subgraph, so rejected vertices never need revisiting.
// Throws std::invalid_argument when chi(G) < r.
CriticalWitness critical_subgraph(const Graph& g, int r);
// Same, restricted to the induced subgraph on `within`.
CriticalWitness critical_subgraph_in(const Graph& g, const Bits128& within, int r);

struct TuranCheck {
    Rational lhs;  // e(G)
    Rational rhs;  // |G|^2 / (2 alpha) - |G| / 2
    bool holds = false;
};

// e(G) >= |G|^2/(2 alpha(G)) - |G|/2 in exact arithmetic. Always true; a
// failure signals a solver bug, which is exactly what the sweeps look for.
TuranCheck turan_bound_check(const Graph& g);

}  // namespace rw
