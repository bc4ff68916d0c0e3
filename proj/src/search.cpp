#include "bitpath/search.hpp"

#include <stdexcept>
#include <utility>

namespace bitpath {

namespace {

void check_query(const Graph& g, VertexId from, VertexId to) {
    if (from >= g.order() || to >= g.order())
        throw IndexError("query (" + std::to_string(from) + "," + std::to_string(to) +
                         ") outside graph of order " + std::to_string(g.order()));
}

}  // namespace

std::optional<std::size_t> shortest_path_length(const Graph& g, VertexId from, VertexId to) {
    check_query(g, from, to);
    if (from == to) return 0;

    VertexSet frontier = VertexSet::single(from, g.order());
    VertexSet reached = frontier;
    for (std::size_t hops = 1;; ++hops) {
        frontier = step_forward(g, frontier);
        if (frontier.test(to)) return hops;
        VertexSet grown = reached | frontier;
        if (grown == reached) return std::nullopt;  // reachable set stabilized short of `to`
        reached = std::move(grown);
    }
}

LayerMeet meet_layers(const Graph& g, VertexId from, VertexId to, std::size_t hops) {
    check_query(g, from, to);
    LayerMeet meet{from, to, hops, false, {}};

    std::vector<VertexSet> layers;
    layers.reserve(hops + 1);
    layers.push_back(VertexSet::single(from, g.order()));
    for (std::size_t j = 1; j <= hops; ++j) {
        layers.push_back(step_forward(g, layers.back()));
        if (layers.back().none()) return meet;
    }

    VertexSet backward = VertexSet::single(to, g.order());
    for (std::size_t j = hops + 1; j-- > 0;) {
        layers[j] &= backward;
        if (layers[j].none()) return meet;
        if (j > 0) backward = step_backward(g, backward);
    }

    meet.feasible = true;
    meet.layers = std::move(layers);
    return meet;
}

std::vector<Path> enumerate_paths(const Graph& g, const LayerMeet& meet, std::size_t max_paths,
                                  bool* truncated) {
    if (truncated) *truncated = false;
    if (!meet.feasible) throw std::logic_error("enumerate_paths requires a feasible meet");
    if (meet.layers.size() != meet.hops + 1)
        throw std::logic_error("meet layer count does not match its hop count");

    const std::size_t hops = meet.hops;
    std::vector<Path> result;
    if (max_paths == 0) {
        if (truncated) *truncated = true;
        return result;
    }

    Path path{meet.source};
    // Explicit stack: frames hold the candidate cursor per depth, so deep
    // graphs cannot overflow the call stack.
    struct Frame {
        std::span<const VertexId> successors;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;

    auto emit = [&]() -> bool {  // false = stop enumeration
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1]))
                throw std::logic_error("layer enumeration produced a non-edge");
        if (result.size() == max_paths) {
            if (truncated) *truncated = true;
            return false;
        }
        result.push_back(path);
        return true;
    };

    if (hops == 0) {
        emit();
        return result;
    }

    stack.push_back({g.successors(meet.source), 0});
    while (!stack.empty()) {
        Frame& frame = stack.back();
        const std::size_t depth = stack.size();  // index of the layer being filled
        bool descended = false;
        while (frame.next < frame.successors.size()) {
            const VertexId w = frame.successors[frame.next++];
            if (!meet.layers[depth].test(w)) continue;
            path.push_back(w);
            if (depth == hops) {
                if (!emit()) return result;
                path.pop_back();
            } else {
                stack.push_back({g.successors(w), 0});
                descended = true;
                break;
            }
        }
        if (!descended && frame.next >= frame.successors.size()) {
            stack.pop_back();
            path.pop_back();
        }
    }
    return result;
}

QueryResult shortest_paths(const Graph& g, VertexId from, VertexId to, std::size_t max_paths) {
    const auto length = shortest_path_length(g, from, to);
    if (!length) return {};

    const LayerMeet meet = meet_layers(g, from, to, *length);
    QueryResult result;
    result.hop_length = *length;
    result.paths = enumerate_paths(g, meet, max_paths, &result.truncated);
    result.path_count_found = result.paths.size();
    return result;
}

std::string format_path(const Path& path, bool one_based) {
    if (path.empty()) throw std::invalid_argument("cannot format an empty path");
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) out += "->";
        out += std::to_string(path[i] + (one_based ? 1 : 0));
    }
    return out;
}

}  // namespace bitpath
