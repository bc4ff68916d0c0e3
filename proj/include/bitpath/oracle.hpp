#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitpath/graph.hpp"

namespace bitpath::oracle {

// Reference implementations backing tests and the `verify` command. They use
// a plain adjacency-list representation and share no search machinery with
// the library, so agreement between the two is evidence rather than
// tautology. Asymptotically naive on purpose.
struct AdjGraph {
    std::size_t order = 0;
    std::vector<std::vector<VertexId>> out;  // rows ascending
    bool weighted = false;
    std::vector<std::vector<Cost>> weights;  // aligned with out when weighted

    static AdjGraph from_edges(std::size_t order, const std::vector<Edge>& edges);
    static AdjGraph from_weighted_edges(std::size_t order, const std::vector<WeightedEdge>& edges);
};

// Textbook breadth-first distance; empty when unreachable.
std::optional<std::size_t> bfs_distance(const AdjGraph& g, VertexId from, VertexId to);

// Exact weighted distance; requires weights >= 1 present.
std::optional<Cost> dijkstra_distance(const AdjGraph& g, VertexId from, VertexId to);

// Does a walk of exactly `hops` steps from `from` to `to` exist?
bool walk_exists(const AdjGraph& g, VertexId from, VertexId to, std::size_t hops);

// reach[k][v] = a walk of exactly k hops from `from` to v exists, k <= max_hops.
std::vector<std::vector<char>> walk_reach_table(const AdjGraph& g, VertexId from,
                                                std::size_t max_hops);

// Every walk of exactly `hops` steps from `from` to `to`, in lexicographic
// order. Throws std::overflow_error past `cap`; the oracle never truncates
// silently.
std::vector<Path> all_walks(const AdjGraph& g, VertexId from, VertexId to, std::size_t hops,
                            std::size_t cap);

// Every simple path from `from` to `to`, lexicographic, capped like all_walks.
std::vector<Path> all_simple_paths(const AdjGraph& g, VertexId from, VertexId to, std::size_t cap);

struct OracleReport {
    std::string instance;
    VertexId from = 0;
    VertexId to = 0;
    std::string oracle_answer;
    std::string subject_answer;
    bool match = false;
};

std::string describe(const OracleReport& report);

}  // namespace bitpath::oracle
