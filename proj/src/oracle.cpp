#include "bitpath/oracle.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace bitpath::oracle {

AdjGraph AdjGraph::from_edges(std::size_t order, const std::vector<Edge>& edges) {
    AdjGraph g;
    g.order = order;
    g.out.resize(order);
    for (const Edge& e : edges) {
        if (e.from >= order || e.to >= order) throw IndexError("oracle edge out of range");
        g.out[e.from].push_back(e.to);
    }
    for (auto& row : g.out) std::sort(row.begin(), row.end());
    return g;
}

AdjGraph AdjGraph::from_weighted_edges(std::size_t order, const std::vector<WeightedEdge>& edges) {
    AdjGraph g;
    g.order = order;
    g.weighted = true;
    g.out.resize(order);
    g.weights.resize(order);
    std::vector<std::vector<std::pair<VertexId, Cost>>> rows(order);
    for (const WeightedEdge& e : edges) {
        if (e.from >= order || e.to >= order) throw IndexError("oracle edge out of range");
        rows[e.from].push_back({e.to, e.weight});
    }
    for (std::size_t v = 0; v < order; ++v) {
        std::sort(rows[v].begin(), rows[v].end());
        for (auto [to, w] : rows[v]) {
            g.out[v].push_back(to);
            g.weights[v].push_back(w);
        }
    }
    return g;
}

std::optional<std::size_t> bfs_distance(const AdjGraph& g, VertexId from, VertexId to) {
    if (from >= g.order || to >= g.order) throw IndexError("oracle query out of range");
    if (from == to) return 0;
    std::vector<char> seen(g.order, 0);
    std::deque<std::pair<VertexId, std::size_t>> queue{{from, 0}};
    seen[from] = 1;
    while (!queue.empty()) {
        auto [v, d] = queue.front();
        queue.pop_front();
        for (VertexId w : g.out[v]) {
            if (w == to) return d + 1;
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back({w, d + 1});
            }
        }
    }
    return std::nullopt;
}

std::optional<Cost> dijkstra_distance(const AdjGraph& g, VertexId from, VertexId to) {
    if (!g.weighted) throw std::logic_error("oracle graph is unweighted");
    if (from >= g.order || to >= g.order) throw IndexError("oracle query out of range");
    std::vector<Cost> dist(g.order, kInfiniteCost);
    using Item = std::pair<Cost, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[from] = 0;
    heap.push({0, from});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d != dist[v]) continue;
        if (v == to) return d;
        for (std::size_t i = 0; i < g.out[v].size(); ++i) {
            const VertexId w = g.out[v][i];
            const Cost nd = d + g.weights[v][i];
            if (nd < dist[w]) {
                dist[w] = nd;
                heap.push({nd, w});
            }
        }
    }
    return std::nullopt;
}

std::vector<std::vector<char>> walk_reach_table(const AdjGraph& g, VertexId from,
                                                std::size_t max_hops) {
    if (from >= g.order) throw IndexError("oracle query out of range");
    std::vector<std::vector<char>> reach(max_hops + 1, std::vector<char>(g.order, 0));
    reach[0][from] = 1;
    for (std::size_t k = 1; k <= max_hops; ++k)
        for (std::size_t v = 0; v < g.order; ++v)
            if (reach[k - 1][v])
                for (VertexId w : g.out[v]) reach[k][w] = 1;
    return reach;
}

bool walk_exists(const AdjGraph& g, VertexId from, VertexId to, std::size_t hops) {
    if (to >= g.order) throw IndexError("oracle query out of range");
    return walk_reach_table(g, from, hops)[hops][to] != 0;
}

namespace {

void collect_walks(const AdjGraph& g, VertexId to, std::size_t hops, std::size_t cap, Path& path,
                   std::vector<Path>& out) {
    if (path.size() == hops + 1) {
        if (path.back() == to) {
            if (out.size() >= cap) throw std::overflow_error("oracle walk cap exceeded");
            out.push_back(path);
        }
        return;
    }
    for (VertexId w : g.out[path.back()]) {
        path.push_back(w);
        collect_walks(g, to, hops, cap, path, out);
        path.pop_back();
    }
}

void collect_simple_paths(const AdjGraph& g, VertexId to, std::size_t cap,
                          std::vector<char>& visited, Path& path, std::vector<Path>& out) {
    if (path.back() == to) {
        if (out.size() >= cap) throw std::overflow_error("oracle path cap exceeded");
        out.push_back(path);
        // A simple path may continue past `to` only to come back, which a
        // simple path cannot; stop here.
        return;
    }
    for (VertexId w : g.out[path.back()]) {
        if (visited[w]) continue;
        visited[w] = 1;
        path.push_back(w);
        collect_simple_paths(g, to, cap, visited, path, out);
        path.pop_back();
        visited[w] = 0;
    }
}

}  // namespace

std::vector<Path> all_walks(const AdjGraph& g, VertexId from, VertexId to, std::size_t hops,
                            std::size_t cap) {
    if (from >= g.order || to >= g.order) throw IndexError("oracle query out of range");
    std::vector<Path> out;
    Path path{from};
    collect_walks(g, to, hops, cap, path, out);
    return out;
}

std::vector<Path> all_simple_paths(const AdjGraph& g, VertexId from, VertexId to,
                                   std::size_t cap) {
    if (from >= g.order || to >= g.order) throw IndexError("oracle query out of range");
    std::vector<Path> out;
    std::vector<char> visited(g.order, 0);
    visited[from] = 1;
    Path path{from};
    collect_simple_paths(g, to, cap, visited, path, out);
    return out;
}

std::string describe(const OracleReport& r) {
    return r.instance + " query " + std::to_string(r.from) + "->" + std::to_string(r.to) +
           ": oracle=" + r.oracle_answer + " subject=" + r.subject_answer +
           (r.match ? " (match)" : " (MISMATCH)");
}

}  // namespace bitpath::oracle
