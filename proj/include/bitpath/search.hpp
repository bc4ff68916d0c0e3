#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bitpath/graph.hpp"

namespace bitpath {

inline constexpr std::size_t kDefaultMaxPaths = 1024;

// Positionwise intersection of the forward frontier from `source` and the
// backward frontier from `target` for a fixed hop count. For a given hop
// count the layers are either all non-empty or all empty, so construction
// stops at the first empty layer and marks the meet infeasible.
struct LayerMeet {
    VertexId source = 0;
    VertexId target = 0;
    std::size_t hops = 0;
    bool feasible = false;
    std::vector<VertexSet> layers;  // hops + 1 entries when feasible, empty otherwise
};

struct QueryResult {
    std::optional<std::size_t> hop_length;  // empty <=> no path exists <=> paths empty
    std::vector<Path> paths;
    bool truncated = false;
    std::size_t path_count_found = 0;

    bool operator==(const QueryResult&) const = default;
};

// Minimal hop count of a walk from -> to; 0 when from == to, empty when
// unreachable. Terminates once the cumulative reachable set stops growing.
std::optional<std::size_t> shortest_path_length(const Graph& g, VertexId from, VertexId to);

LayerMeet meet_layers(const Graph& g, VertexId from, VertexId to, std::size_t hops);

// All hop-exact vertex sequences through the meet's layers whose consecutive
// pairs are edges, in lexicographic order, truncated at max_paths (sets
// *truncated when more exist). For the minimal hop count these are simple
// paths; for larger hop counts vertices may repeat. Requires a feasible meet.
std::vector<Path> enumerate_paths(const Graph& g, const LayerMeet& meet, std::size_t max_paths,
                                  bool* truncated = nullptr);

QueryResult shortest_paths(const Graph& g, VertexId from, VertexId to,
                           std::size_t max_paths = kDefaultMaxPaths);

// "a->b->c"; one_based shifts displayed ids by one. Rejects empty paths.
std::string format_path(const Path& path, bool one_based = false);

}  // namespace bitpath
