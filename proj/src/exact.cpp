#include "rw/exact.hpp"

#include <algorithm>

namespace rw {

bool ProperColoring::proper_on(const Graph& g) const {
    if (int(color.size()) != g.size()) return false;
    for (int v = 0; v < g.size(); ++v) {
        if (color[v] < 0 || color[v] >= std::max(k, 1)) return false;
        for (int w : iterate(g.neighbors(v)))
            if (color[v] == color[w]) return false;
    }
    return true;
}

namespace {

struct ColorSearch {
    const Graph& g;
    int k;
    std::vector<int> color;        // -1 = uncolored
    std::vector<Bits128> used_at;  // used_at[v] bit c set iff some neighbor has color c
                                   // (Bits128 doubles as a small color set; k <= 128)
    int colored = 0;

    explicit ColorSearch(const Graph& graph, int kk)
        : g(graph), k(kk), color(graph.size(), -1), used_at(graph.size()) {}

    int pick() const {
        // max saturation, then max degree among uncolored, then smallest index
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.size(); ++v) {
            if (color[v] >= 0) continue;
            int sat = used_at[v].count();
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool run(int max_color_used) {
        if (colored == g.size()) return true;
        int v = pick();
        // introducing at most one fresh color breaks color-permutation symmetry
        int limit = std::min(k - 1, max_color_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (used_at[v].test(c)) continue;
            color[v] = c;
            ++colored;
            std::vector<int> touched;
            for (int w : iterate(g.neighbors(v)))
                if (color[w] < 0 && !used_at[w].test(c)) {
                    used_at[w].set(c);
                    touched.push_back(w);
                }
            if (run(std::max(max_color_used, c))) return true;
            for (int w : touched) used_at[w].reset(c);
            color[v] = -1;
            --colored;
        }
        return false;
    }
};

}  // namespace

std::optional<ProperColoring> is_k_colorable(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("is_k_colorable: negative k");
    if (g.size() == 0) return ProperColoring{{}, 0};
    if (k == 0) return std::nullopt;
    ColorSearch search(g, k);
    if (!search.run(-1)) return std::nullopt;
    return ProperColoring{search.color, k};
}

namespace {

// Greedy DSATUR coloring; upper bound and witness for the bracket.
ProperColoring greedy_coloring(const Graph& g) {
    int n = g.size();
    std::vector<int> color(n, -1);
    std::vector<Bits128> seen(n);
    int k = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int sat = seen[v].count();
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int c = 0;
        while (seen[best].test(c)) ++c;
        color[best] = c;
        k = std::max(k, c + 1);
        for (int w : iterate(g.neighbors(best))) seen[w].set(c);
    }
    return ProperColoring{color, k};
}

}  // namespace

std::pair<int, ProperColoring> chromatic_number(const Graph& g) {
    if (g.size() == 0) return {0, ProperColoring{{}, 0}};
    int lo = max_clique(g).size;
    ProperColoring witness = greedy_coloring(g);
    int hi = witness.k;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (auto c = is_k_colorable(g, mid)) {
            witness = *c;
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    witness.k = lo;
    return {lo, witness};
}

// ---------------------------------------------------------------------------
// maximum clique

namespace {

struct CliqueSearch {
    const Graph& g;
    int best = 0;
    int target = -1;  // when >= 0: stop as soon as a clique of this size exists

    explicit CliqueSearch(const Graph& graph) : g(graph) {}

    // Greedy coloring bound on the candidate set; candidates whose color
    // number cannot raise the incumbent are cut.
    bool expand(Bits128 cand, int depth) {
        if (target >= 0 && depth >= target) return true;
        if (cand.empty()) {
            best = std::max(best, depth);
            return target >= 0 && depth >= target;
        }
        int m = cand.count();
        std::vector<int> verts;
        verts.reserve(m);
        std::vector<int> color_of(m);
        {
            std::vector<Bits128> classes;
            for (int v : iterate(cand)) {
                int c = 0;
                while (c < int(classes.size()) && (classes[c] & g.neighbors(v)).any()) ++c;
                if (c == int(classes.size())) classes.push_back({});
                classes[c].set(v);
                color_of[verts.size()] = c;
                verts.push_back(v);
            }
        }
        // scan high colors first; sort by color descending, stable on index
        std::vector<int> idx(verts.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return color_of[a] > color_of[b]; });
        int goal = target >= 0 ? target : best + 1;
        for (int i : idx) {
            if (depth + color_of[i] + 1 < goal) return false;  // rest only weaker
            int v = verts[i];
            if (expand(cand & g.neighbors(v), depth + 1)) return true;
            cand.reset(v);
            goal = target >= 0 ? target : best + 1;
        }
        return false;
    }
};

}  // namespace

bool has_clique_of_size(const Graph& g, const Bits128& sub, int k) {
    if (k <= 0) return true;
    if (sub.count() < k) return false;
    CliqueSearch s(g);
    s.target = k;
    return s.expand(sub, 0);
}

CliqueResult max_clique(const Graph& g) {
    Bits128 all = Bits128::below(g.size());
    CliqueSearch s(g);
    s.expand(all, 0);
    int omega = s.best;

    // lexicographically least witness of the optimal size
    CliqueResult out;
    out.size = omega;
    Bits128 cand = all;
    int need = omega;
    while (need > 0) {
        for (int v : iterate(cand)) {
            Bits128 rest = cand & g.neighbors(v);
            // force v ascending: later picks come from above v
            Bits128 above = rest - Bits128::below(v + 1);
            if (has_clique_of_size(g, above, need - 1)) {
                out.members.add(v);
                cand = above;
                --need;
                break;
            }
        }
    }
    return out;
}

CliqueResult max_independent_set(const Graph& g) { return max_clique(complement(g)); }

// ---------------------------------------------------------------------------

CriticalWitness critical_subgraph_in(const Graph& g, const Bits128& within, int r) {
    auto chi_of = [&](const Bits128& mask) {
        return chromatic_number(induced_subgraph(g, VertexSet{mask})).first;
    };
    if (chi_of(within) < r)
        throw std::invalid_argument("critical_subgraph: chromatic number below r");
    Bits128 alive = within;
    for (int v : iterate(within)) {
        Bits128 trial = alive;
        trial.reset(v);
        if (chi_of(trial) >= r) alive = trial;
    }
    return CriticalWitness{VertexSet{alive}, r};
}

CriticalWitness critical_subgraph(const Graph& g, int r) {
    return critical_subgraph_in(g, Bits128::below(g.size()), r);
}

TuranCheck turan_bound_check(const Graph& g) {
    if (g.size() < 1) throw std::invalid_argument("turan_bound_check: empty graph");
    long long n = g.size();
    long long alpha = max_independent_set(g).size;
    TuranCheck out;
    out.lhs = Rational(g.edge_count());
    out.rhs = Rational(n * n, 2 * alpha) - Rational(n, 2);
    out.holds = out.lhs >= out.rhs;
    return out;
}

}  // namespace rw
