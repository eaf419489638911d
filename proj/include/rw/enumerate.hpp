#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "rw/graph.hpp"

namespace rw {

// Canonical form for graphs on up to 11 vertices (C(11,2) = 55 bits). The
// code is the maximum, over all vertex orderings, of the upper-triangle bit
// string in graph6 column order, so equal codes mean isomorphic graphs and
// the code itself decodes back to a canonically labeled graph.
std::uint64_t canonical_code(const Graph& g);

// Rebuild the canonically labeled graph from its code.
Graph graph_from_code(int n, std::uint64_t code);

// All non-isomorphic graphs on n vertices (n <= 9 is practical), canonically
// labeled and sorted by code. Grows the n-1 list by one vertex per subset of
// potential neighbors and deduplicates by canonical code.
std::vector<Graph> enumerate_graphs(int n, int jobs = 1);

// Known counts (A000088) for validating enumeration, index = n <= 9.
inline constexpr std::uint64_t kGraphCounts[] = {1,    1,     2,     4,      11,
                                                 34,   156,   1044,  12346,  274668};

// --- corpus files: newline-delimited graph6, one graph per line ---

void write_graph6_file(const std::filesystem::path&, const std::vector<Graph>&);
std::vector<Graph> read_graph6_file(const std::filesystem::path&);
// Stream without materializing. Callback receives (line_index, line, graph).
void for_each_graph6_line(const std::filesystem::path&,
                          const std::function<void(std::size_t, const std::string&, const Graph&)>&);

// Writes graphs{1..max_n}.g6 under dir unless already present; returns the
// paths in order. Files are deterministic, so presence implies validity for
// files this tool wrote; `force` regenerates anyway.
std::vector<std::filesystem::path> ensure_corpus(const std::filesystem::path& dir,
                                                 int max_n, int jobs, bool force = false);

}  // namespace rw
