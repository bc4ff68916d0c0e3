#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bitpath/vertex_set.hpp"

namespace bitpath {

// Integer edge cost in scaled units (see Graph::weight_scale).
using Cost = std::uint64_t;
inline constexpr Cost kInfiniteCost = ~Cost{0};

struct Edge {
    VertexId from = 0;
    VertexId to = 0;
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

struct WeightedEdge {
    VertexId from = 0;
    VertexId to = 0;
    Cost weight = 1;
    bool operator==(const WeightedEdge&) const = default;
};

// Immutable directed graph over vertices [0, order). The successor relation
// is stored once (CSR, rows sorted); the predecessor relation is always its
// transpose, built at construction. Row views materialize as VertexSet, so
// in_row(v).test(u) == out_row(u).test(v) holds for every accepted graph.
//
// Weights, when present, are defined exactly on the edge set, are >= 1, and
// are scaled integers: weight_scale() converts them back to rationals.
//
// Safe to share across threads after construction.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(std::size_t order, std::vector<Edge> edges);
    static Graph from_weighted_edges(std::size_t order, std::vector<WeightedEdge> edges,
                                     std::uint64_t weight_scale = 1);

    std::size_t order() const { return order_; }
    std::size_t edge_count() const { return out_targets_.size(); }

    bool has_edge(VertexId from, VertexId to) const;

    std::span<const VertexId> successors(VertexId v) const;
    std::span<const VertexId> predecessors(VertexId v) const;

    // Dense row views: out_row(v) marks the successors of v, in_row(v) its
    // predecessors.
    VertexSet out_row(VertexId v) const;
    VertexSet in_row(VertexId v) const;

    bool weighted() const { return weighted_; }
    std::uint64_t weight_scale() const { return weight_scale_; }

    Cost weight(VertexId from, VertexId to) const;
    // Aligned with successors(v).
    std::span<const Cost> successor_weights(VertexId v) const;

    // Canonical edge list, ascending (from, to).
    std::vector<Edge> edges() const;
    std::vector<WeightedEdge> weighted_edges() const;

    Graph transpose() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(VertexId v) const;

    std::size_t order_ = 0;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<VertexId> out_targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<VertexId> in_targets_;
    std::vector<Cost> out_weights_;  // aligned with out_targets_ when weighted
    bool weighted_ = false;
    std::uint64_t weight_scale_ = 1;
};

enum class Direction { forward, backward };

// One propagation step: the union of the successor (resp. predecessor) sets
// of every vertex in the frontier. An empty frontier yields an empty set.
VertexSet step_forward(const Graph& g, const VertexSet& frontier);
VertexSet step_backward(const Graph& g, const VertexSet& frontier);

// k-fold composition of the single step; hops = 0 is the identity. Bit w of
// advance(single(v), k, forward) means a walk of exactly k hops v -> w exists.
VertexSet advance(const Graph& g, VertexSet frontier, std::size_t hops, Direction direction);

}  // namespace bitpath
