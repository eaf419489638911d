#include "rw/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace rw {

namespace {

// Branch-and-bound maximization of the placement code. At each position only
// the unplaced vertices whose adjacency-to-placed bits are maximal can still
// lead to the maximum code; among those, vertices that are twins in the
// remaining graph produce identical subtrees, so one representative suffices.
// Twin skipping is what keeps highly symmetric graphs (empty, complete,
// clique unions) linear instead of factorial.
struct Canonizer {
    const Graph& g;
    int n;
    std::uint64_t best = 0;
    int placed[11];
    Bits128 placed_set;

    explicit Canonizer(const Graph& graph) : g(graph), n(graph.size()) {}

    int total_bits() const { return n * (n - 1) / 2; }

    void descend(int depth, std::uint64_t code, int bits_used) {
        if (depth == n) {
            if (code > best) best = code;
            return;
        }
        Bits128 remaining = Bits128::below(n) - placed_set;

        // adjacency bits to the placed prefix, MSB = earliest placed
        std::uint64_t max_col = 0;
        bool have = false;
        std::uint64_t col_of[11];
        for (int v : iterate(remaining)) {
            std::uint64_t col = 0;
            for (int i = 0; i < depth; ++i)
                col = (col << 1) | (g.adjacent(v, placed[i]) ? 1 : 0);
            col_of[v] = col;
            if (!have || col > max_col) {
                max_col = col;
                have = true;
            }
        }

        std::uint64_t next_code = (code << depth) | max_col;
        int next_bits = bits_used + depth;
        if (next_code < (best >> (total_bits() - next_bits))) return;

        Bits128 tried;
        for (int v : iterate(remaining)) {
            if (col_of[v] != max_col) continue;
            bool twin = false;
            for (int u : iterate(tried)) {
                Bits128 nu = g.neighbors(u) - placed_set;
                Bits128 nv = g.neighbors(v) - placed_set;
                nu.reset(u); nu.reset(v);
                nv.reset(u); nv.reset(v);
                if (nu == nv) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            tried.set(v);
            placed[depth] = v;
            placed_set.set(v);
            descend(depth + 1, next_code, next_bits);
            placed_set.reset(v);
        }
    }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.size() > 11) throw std::invalid_argument("canonical_code: graph too large");
    if (g.size() <= 1) return 0;
    Canonizer c(g);
    c.descend(0, 0, 0);
    return c.best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    int total = n * (n - 1) / 2;
    std::vector<Edge> es;
    int bit = total;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            --bit;
            if ((code >> bit) & 1) es.push_back({u, v});
        }
    return Graph::from_edges(n, es);
}

std::vector<Graph> enumerate_graphs(int n, int jobs) {
    if (n < 0) throw std::invalid_argument("enumerate_graphs: negative n");
    if (n > 9) throw std::invalid_argument("enumerate_graphs: n > 9 not supported");

    std::vector<std::uint64_t> codes{0};  // n <= 1
    for (int m = 2; m <= n; ++m) {
        std::unordered_set<std::uint64_t> seen;
        std::mutex merge_mutex;
        int workers = std::max(1, jobs);
        std::vector<std::thread> pool;
        std::size_t chunk = (codes.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::size_t lo = w * chunk, hi = std::min(codes.size(), lo + chunk);
            if (lo >= hi) continue;
            pool.emplace_back([&, lo, hi] {
                std::unordered_set<std::uint64_t> local;
                for (std::size_t i = lo; i < hi; ++i) {
                    Graph parent = graph_from_code(m - 1, codes[i]);
                    const auto parent_edges = parent.edges();
                    std::uint32_t subsets = 1u << (m - 1);
                    for (std::uint32_t s = 0; s < subsets; ++s) {
                        auto es = parent_edges;
                        for (int v = 0; v < m - 1; ++v)
                            if ((s >> v) & 1) es.push_back({v, m - 1});
                        local.insert(canonical_code(Graph::from_edges(m, es)));
                    }
                }
                std::lock_guard lock(merge_mutex);
                for (auto c : local) seen.insert(c);
            });
        }
        for (auto& t : pool) t.join();
        codes.assign(seen.begin(), seen.end());
        std::sort(codes.begin(), codes.end());
    }

    std::vector<Graph> out;
    out.reserve(codes.size());
    for (auto c : codes) out.push_back(graph_from_code(n, c));
    return out;
}

void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    for (const auto& g : graphs) f << emit_graph6(g) << '\n';
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
    std::vector<Graph> out;
    for_each_graph6_line(path, [&](std::size_t, const std::string&, const Graph& g) {
        out.push_back(g);
    });
    return out;
}

void for_each_graph6_line(
    const std::filesystem::path& path,
    const std::function<void(std::size_t, const std::string&, const Graph&)>& fn) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path.string());
    std::string line;
    std::size_t idx = 0;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        fn(idx, line, parse_graph6(line));
        ++idx;
    }
}

std::vector<std::filesystem::path> ensure_corpus(const std::filesystem::path& dir,
                                                 int max_n, int jobs, bool force) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> paths;
    for (int n = 1; n <= max_n; ++n) {
        auto path = dir / ("graphs" + std::to_string(n) + ".g6");
        if (force || !std::filesystem::exists(path)) {
            auto graphs = enumerate_graphs(n, jobs);
            if (n <= 9 && graphs.size() != kGraphCounts[n])
                throw std::runtime_error("enumeration count mismatch at n=" + std::to_string(n));
            auto tmp = path;
            tmp += ".tmp";
            write_graph6_file(tmp, graphs);
            std::filesystem::rename(tmp, path);
        }
        paths.push_back(path);
    }
    return paths;
}

}  // namespace rw
