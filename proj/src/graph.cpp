#include "bitpath/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace bitpath {

namespace {

void check_edge_ids(std::size_t order, VertexId from, VertexId to) {
    if (from >= order || to >= order)
        throw IndexError("edge (" + std::to_string(from) + "," + std::to_string(to) +
                         ") outside graph of order " + std::to_string(order));
}

}  // namespace

void Graph::check_vertex(VertexId v) const {
    if (v >= order_)
        throw IndexError("vertex " + std::to_string(v) + " outside graph of order " +
                         std::to_string(order_));
}

Graph Graph::from_edges(std::size_t order, std::vector<Edge> edges) {
    std::vector<WeightedEdge> weighted;
    weighted.reserve(edges.size());
    for (const Edge& e : edges) weighted.push_back({e.from, e.to, 1});
    Graph g = from_weighted_edges(order, std::move(weighted));
    g.weighted_ = false;
    g.out_weights_.clear();
    return g;
}

Graph Graph::from_weighted_edges(std::size_t order, std::vector<WeightedEdge> edges,
                                 std::uint64_t weight_scale) {
    if (weight_scale == 0) throw std::domain_error("weight scale must be positive");

    Graph g;
    g.order_ = order;
    g.weighted_ = true;
    g.weight_scale_ = weight_scale;

    for (const WeightedEdge& e : edges) {
        check_edge_ids(order, e.from, e.to);
        if (e.weight == 0)
            throw std::domain_error("zero weight on edge (" + std::to_string(e.from) + "," +
                                    std::to_string(e.to) + ")");
    }

    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::pair{a.from, a.to} < std::pair{b.from, b.to};
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i - 1].from == edges[i].from && edges[i - 1].to == edges[i].to)
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges[i].from) + "," +
                                        std::to_string(edges[i].to) + ")");
    }

    g.out_offsets_.assign(order + 1, 0);
    for (const WeightedEdge& e : edges) ++g.out_offsets_[e.from + 1];
    for (std::size_t v = 0; v < order; ++v) g.out_offsets_[v + 1] += g.out_offsets_[v];

    g.out_targets_.resize(edges.size());
    g.out_weights_.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        g.out_targets_[i] = edges[i].to;
        g.out_weights_[i] = edges[i].weight;
    }

    // Transpose: counting sort of the same edges by target.
    g.in_offsets_.assign(order + 1, 0);
    for (const WeightedEdge& e : edges) ++g.in_offsets_[e.to + 1];
    for (std::size_t v = 0; v < order; ++v) g.in_offsets_[v + 1] += g.in_offsets_[v];
    g.in_targets_.resize(edges.size());
    std::vector<std::size_t> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    for (const WeightedEdge& e : edges) g.in_targets_[cursor[e.to]++] = e.from;

    return g;
}

bool Graph::has_edge(VertexId from, VertexId to) const {
    check_vertex(from);
    check_vertex(to);
    const auto row = successors(from);
    return std::binary_search(row.begin(), row.end(), to);
}

std::span<const VertexId> Graph::successors(VertexId v) const {
    check_vertex(v);
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const VertexId> Graph::predecessors(VertexId v) const {
    check_vertex(v);
    return {in_targets_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

VertexSet Graph::out_row(VertexId v) const {
    VertexSet row(order_);
    for (VertexId w : successors(v)) row.set(w);
    return row;
}

VertexSet Graph::in_row(VertexId v) const {
    VertexSet row(order_);
    for (VertexId u : predecessors(v)) row.set(u);
    return row;
}

Cost Graph::weight(VertexId from, VertexId to) const {
    if (!weighted_) throw std::logic_error("graph is unweighted");
    const auto row = successors(from);
    check_vertex(to);
    const auto it = std::lower_bound(row.begin(), row.end(), to);
    if (it == row.end() || *it != to)
        throw std::logic_error("no edge (" + std::to_string(from) + "," + std::to_string(to) +
                               ")");
    return out_weights_[out_offsets_[from] + static_cast<std::size_t>(it - row.begin())];
}

std::span<const Cost> Graph::successor_weights(VertexId v) const {
    if (!weighted_) throw std::logic_error("graph is unweighted");
    check_vertex(v);
    return {out_weights_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t v = 0; v < order_; ++v)
        for (VertexId w : successors(static_cast<VertexId>(v)))
            out.push_back({static_cast<VertexId>(v), w});
    return out;
}

std::vector<WeightedEdge> Graph::weighted_edges() const {
    if (!weighted_) throw std::logic_error("graph is unweighted");
    std::vector<WeightedEdge> out;
    out.reserve(edge_count());
    for (std::size_t v = 0; v < order_; ++v) {
        const auto row = successors(static_cast<VertexId>(v));
        const auto w = successor_weights(static_cast<VertexId>(v));
        for (std::size_t i = 0; i < row.size(); ++i)
            out.push_back({static_cast<VertexId>(v), row[i], w[i]});
    }
    return out;
}

Graph Graph::transpose() const {
    if (weighted_) {
        std::vector<WeightedEdge> rev;
        rev.reserve(edge_count());
        for (const WeightedEdge& e : weighted_edges()) rev.push_back({e.to, e.from, e.weight});
        return from_weighted_edges(order_, std::move(rev), weight_scale_);
    }
    std::vector<Edge> rev;
    rev.reserve(edge_count());
    for (const Edge& e : edges()) rev.push_back({e.to, e.from});
    return from_edges(order_, std::move(rev));
}

VertexSet step_forward(const Graph& g, const VertexSet& frontier) {
    if (frontier.size() != g.order())
        throw DimensionError("frontier size " + std::to_string(frontier.size()) +
                             " does not match graph order " + std::to_string(g.order()));
    VertexSet next(g.order());
    frontier.for_each([&](VertexId v) {
        for (VertexId w : g.successors(v)) next.set(w);
    });
    return next;
}

VertexSet step_backward(const Graph& g, const VertexSet& frontier) {
    if (frontier.size() != g.order())
        throw DimensionError("frontier size " + std::to_string(frontier.size()) +
                             " does not match graph order " + std::to_string(g.order()));
    VertexSet next(g.order());
    frontier.for_each([&](VertexId v) {
        for (VertexId u : g.predecessors(v)) next.set(u);
    });
    return next;
}

VertexSet advance(const Graph& g, VertexSet frontier, std::size_t hops, Direction direction) {
    for (std::size_t i = 0; i < hops; ++i)
        frontier = direction == Direction::forward ? step_forward(g, frontier)
                                                   : step_backward(g, frontier);
    return frontier;
}

}  // namespace bitpath
