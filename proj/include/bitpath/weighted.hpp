#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bitpath/hierarchy.hpp"

namespace bitpath {

// Reduced non-negative rational; denominator >= 1.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational reduced(std::uint64_t num, std::uint64_t den);

    bool operator==(const Rational&) const = default;
};

struct RationalizedWeights {
    std::vector<Cost> weights;  // all >= 1
    std::uint64_t scale = 1;    // lcm of the input denominators
};

// Scales rationals to integers by the lcm of their denominators. Zero
// weights are rejected: the hop bound of the weighted search needs every
// edge to cost at least one unit.
RationalizedWeights rationalize_weights(const std::vector<Rational>& weights);

struct HopCostTable {
    std::size_t hops = 0;
    // cost[j][v] = minimum cost of a j-hop walk from the source to v,
    // kInfiniteCost when none exists.
    std::vector<std::vector<Cost>> cost;
};

// Minimum total weight over walks of exactly `hops` steps from -> to, with
// the per-layer table that supports enumerating every optimal walk. Empty
// when no such walk exists. Requires weights.
std::optional<std::pair<Cost, HopCostTable>> min_cost_at_hops(const Graph& g, VertexId from,
                                                              VertexId to, std::size_t hops);

struct WeightedQueryResult {
    std::optional<Cost> cost;               // scaled units
    std::optional<std::size_t> hop_length;  // hop count of the reported optima
    std::vector<Path> paths;
    std::uint64_t scale = 1;  // divide cost by this to recover the rational value
    bool truncated = false;

    bool operator==(const WeightedQueryResult&) const = default;
};

struct WeightedSearchStats {
    Cost initial_cost = 0;  // best cost at the minimal hop count
    std::size_t max_hops_explored = 0;
};

// Sum of edge weights along a path of the weighted graph `g`.
Cost path_cost(const Graph& g, const Path& path);

// Weighted flat search: start from the minimal hop count, then probe longer
// hop counts while they can still undercut the best cost (every extra hop
// costs at least one unit). Reports every optimal walk at the smallest hop
// count achieving the optimal cost.
WeightedQueryResult shortest_weighted_paths(const Graph& g, VertexId from, VertexId to,
                                            std::size_t max_paths = kDefaultMaxPaths,
                                            WeightedSearchStats* stats = nullptr);

// Multilevel weighted query over a hierarchy built from a weighted graph.
// Quotient weights are minima, so a coarse path cost lower-bounds the cost
// of every refinement; candidates are processed in increasing coarse cost
// and the search closes once that lower bound passes the best base-level
// cost found. Result equals the flat weighted search.
WeightedQueryResult hierarchical_weighted_paths(const Hierarchy& h, VertexId from, VertexId to,
                                                std::size_t max_paths = kDefaultMaxPaths,
                                                std::size_t budget = kDefaultCandidateBudget,
                                                HierarchicalStats* stats = nullptr,
                                                std::optional<std::size_t> start_level =
                                                    std::nullopt);

}  // namespace bitpath
