#include "rw/graph.hpp"

#include <algorithm>

namespace rw {

namespace {

void check_size(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph size out of range: " + std::to_string(n));
}

}  // namespace

Graph graph_with_rows(int n, std::vector<Bits128> rows) {
    Graph g = Graph::empty(n);
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v)
        for (int w : iterate(rows[v]))
            if (v < w) es.push_back({v, w});
    return Graph::from_edges(n, es);
}

Graph Graph::empty(int n) {
    check_size(n);
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, Bits128{});
    return g;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

Graph Graph::complete(int n) {
    check_size(n);
    Graph g = empty(n);
    Bits128 full = Bits128::below(n);
    for (int v = 0; v < n; ++v) {
        g.adj_[v] = full;
        g.adj_[v].reset(v);
    }
    return g;
}

Graph Graph::cycle(int n) {
    check_size(n);
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
    return from_edges(n, es);
}

Graph Graph::path(int n) {
    check_size(n);
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return from_edges(n, es);
}

Graph Graph::complete_multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    for (int s : part_sizes) n += s;
    check_size(n);
    Graph g = empty(n);
    std::vector<int> part_of(n);
    int at = 0, p = 0;
    for (int s : part_sizes) {
        for (int i = 0; i < s; ++i) part_of[at++] = p;
        ++p;
    }
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) es.push_back({u, v});
    return from_edges(n, es);
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : kMaxVertices;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : iterate(adj_[u]))
            if (u < v) out.push_back({u, v});
    return out;
}

Graph with_edge(const Graph& g, int u, int v) {
    auto es = g.edges();
    es.push_back({std::min(u, v), std::max(u, v)});
    return Graph::from_edges(g.size(), es);
}

Graph without_edge(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    auto es = g.edges();
    std::erase(es, Edge{u, v});
    return Graph::from_edges(g.size(), es);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> verts = s.to_vector();
    for (int v : verts)
        if (v >= g.size()) throw std::invalid_argument("vertex set exceeds host graph");
    std::vector<int> new_label(g.size(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) new_label[verts[i]] = int(i);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (int w : iterate(g.neighbors(verts[i]) & s.bits))
            if (verts[i] < w) es.push_back({int(i), new_label[w]});
    return Graph::from_edges(int(verts.size()), es);
}

Graph neighborhood_graph(const Graph& g, int v) {
    return induced_subgraph(g, VertexSet{g.neighbors(v)});
}

Graph complement(const Graph& g) {
    int n = g.size();
    Bits128 full = Bits128::below(n);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u) {
        Bits128 non = full - g.neighbors(u);
        non.reset(u);
        for (int v : iterate(non))
            if (u < v) es.push_back({u, v});
    }
    return Graph::from_edges(n, es);
}

Graph join(const Graph& a, const Graph& b) {
    if (a.size() + b.size() > kMaxVertices)
        throw std::invalid_argument("join exceeds the 128-vertex cap");
    int na = a.size();
    std::vector<Edge> es = a.edges();
    for (auto [u, v] : b.edges()) es.push_back({u + na, v + na});
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < b.size(); ++v) es.push_back({u, na + v});
    return Graph::from_edges(na + b.size(), es);
}

std::uint64_t triangle_count(const Graph& g) {
    return triangles_in(g, Bits128::below(g.size()));
}

std::uint64_t triangles_in(const Graph& g, const Bits128& mask) {
    std::uint64_t t = 0;
    for (int u : iterate(mask)) {
        Bits128 nu = g.neighbors(u) & mask;
        for (int v : iterate(nu)) {
            if (v <= u) continue;
            // third vertex above v avoids double counting
            Bits128 common = nu & g.neighbors(v);
            for (int w = common.next(v); w < 128; w = common.next(w)) ++t;
        }
    }
    return t;
}

long long edges_in(const Graph& g, const Bits128& mask) {
    long long twice = 0;
    for (int v : iterate(mask)) twice += (g.neighbors(v) & mask).count();
    return twice / 2;
}

long long edges_in_neighborhood(const Graph& g, const Bits128& mask, int v) {
    return edges_in(g, g.neighbors(v) & mask);
}

EdgeSupport edge_triangle_support(const Graph& g) {
    EdgeSupport out;
    for (auto [u, v] : g.edges()) {
        int support = (g.neighbors(u) & g.neighbors(v)).count();
        out.per_edge.push_back({{u, v}, support});
        if (!out.min || support < *out.min) out.min = support;
    }
    return out;
}

std::vector<int> DegeneracyOrder::positions(int n) const {
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = int(i);
    return pos;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
    int n = g.size();
    Bits128 alive = Bits128::below(n);
    DegeneracyOrder out;
    out.order.resize(n);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_deg = kMaxVertices + 1;
        for (int v : iterate(alive)) {
            int d = degree_in(g, alive, v);
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        out.bound = std::max(out.bound, best_deg);
        alive.reset(best);
        out.order[n - 1 - step] = best;  // removal sequence reversed
    }
    return out;
}

Bits128 forward_neighbors(const Graph& g, const DegeneracyOrder& ord, int v) {
    auto pos = ord.positions(g.size());
    Bits128 fwd;
    for (int w : iterate(g.neighbors(v)))
        if (pos[w] < pos[v]) fwd.set(w);
    return fwd;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

struct BitReader {
    std::string_view data;
    std::size_t byte = 0;
    int bit = 0;  // 0..5 within the current byte, MSB first

    int take(std::size_t base_offset) {
        if (byte >= data.size())
            throw ParseError("truncated graph6 payload", base_offset + byte);
        int value = data[byte] - 63;
        int b = (value >> (5 - bit)) & 1;
        if (+bit == 5) {
            bit = 0;
            ++byte;
        } else {
            ++bit;
        }
        return b;
    }
};

}  // namespace

Graph parse_graph6(std::string_view text) {
    // one line; tolerate a trailing newline
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (text.empty()) throw ParseError("empty graph6 input", base);
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = text[i];
        if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", base + i);
    }

    std::size_t at = 0;
    long long n;
    if (text[0] != '~') {
        n = text[0] - 63;
        at = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~') {
            // 8-byte form, n up to 2^36-1; anything over the cap is rejected below
            if (text.size() < 8) throw ParseError("truncated size encoding", base + text.size());
            n = 0;
            for (int i = 2; i < 8; ++i) n = (n << 6) | (text[i] - 63);
            at = 8;
        } else {
            if (text.size() < 4) throw ParseError("truncated size encoding", base + text.size());
            n = 0;
            for (int i = 1; i < 4; ++i) n = (n << 6) | (text[i] - 63);
            at = 4;
        }
    }
    if (n > kMaxVertices)
        throw ParseError("vertex count " + std::to_string(n) + " exceeds cap 128", base);

    long long bits_needed = n * (n - 1) / 2;
    std::size_t bytes_needed = std::size_t((bits_needed + 5) / 6);
    if (text.size() - at < bytes_needed)
        throw ParseError("truncated graph6 payload", base + text.size());
    if (text.size() - at > bytes_needed)
        throw ParseError("trailing bytes after graph6 payload", base + at + bytes_needed);

    BitReader reader{text.substr(at)};
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (reader.take(base + at)) es.push_back({u, v});
    return Graph::from_edges(int(n), es);
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    int n = g.size();
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(char((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace rw
