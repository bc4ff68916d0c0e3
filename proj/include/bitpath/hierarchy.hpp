#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bitpath/graph.hpp"
#include "bitpath/search.hpp"

namespace bitpath {

// Coarse candidate cap per hop count; beyond it the multilevel query falls
// back to the flat search, which preserves correctness.
inline constexpr std::size_t kDefaultCandidateBudget = 4096;

// Grouping of the vertices of a finer graph into classes. Classes are
// non-empty, disjoint and cover [0, order) with dense ids [0, class_count).
struct Partition {
    std::vector<std::uint32_t> class_of;         // finer vertex -> class id
    std::vector<std::vector<VertexId>> members;  // class id -> ascending finer vertices

    std::size_t class_count() const { return members.size(); }
    std::size_t finer_order() const { return class_of.size(); }

    static Partition from_class_of(std::vector<std::uint32_t> class_of);
    static Partition identity(std::size_t order);

    bool operator==(const Partition&) const = default;
};

// Consecutive pairing {0,1},{2,3},...; a trailing odd vertex stays alone.
Partition pair_partition(std::size_t order);

// One graph of the coarsening chain. `partition` maps the next finer level
// onto this one; level 0 carries the identity.
struct Level {
    Graph graph;
    Partition partition;
    std::size_t index = 0;

    bool operator==(const Level&) const = default;
};

// Quotient of `fine` under `partition`: a coarse edge (a,b) exists iff some
// fine edge joins a member of a to a member of b. Intra-class fine edges
// become self-loops. When `fine` is weighted every quotient edge carries the
// minimum fine weight among its generating edges (same scale).
Level coarsen(const Graph& fine, Partition partition, std::size_t index = 0);

// Chain of quotients: level 0 is the input graph, each deeper level groups
// the previous one pairwise. Orders strictly decrease. Immutable; safe to
// share across concurrent queries.
class Hierarchy {
public:
    explicit Hierarchy(std::vector<Level> levels, std::size_t min_order = 1);

    std::size_t level_count() const { return levels_.size(); }
    const Level& level(std::size_t i) const;
    const Graph& base() const { return levels_.front().graph; }
    std::size_t min_order() const { return min_order_; }

    // Class of a level-0 vertex at the given level (level 0: the vertex itself).
    VertexId class_at(std::size_t level_index, VertexId base_vertex) const;

    bool operator==(const Hierarchy&) const = default;

private:
    std::vector<Level> levels_;
    std::vector<std::vector<VertexId>> base_class_;  // [level][base vertex]
    std::size_t min_order_ = 1;
};

Hierarchy build_hierarchy(Graph base, std::size_t min_order = 1);

// Indicator set, over the finer level, of the members of a coarse vertex.
VertexSet member_form(const Level& level, VertexId coarse);

// All finer-level paths of the same hop length whose classwise image equals
// `coarse_path`, between the finer endpoints `from` and `to` (whose classes
// must match the coarse endpoints). Layer j is the triple meet of the member
// set of coarse_path[j], the forward frontier from `from` and the backward
// frontier from `to`; an empty layer means no refinement exists.
std::vector<Path> refine_path(const Hierarchy& h, std::size_t level_index, const Path& coarse_path,
                              VertexId from, VertexId to, std::size_t max_paths,
                              bool* truncated = nullptr);

// Deepest level whose estimated probability that two grouped vertices share
// a successor, p = 2e/V^2 - (e/V^2)^2, stays below 1/2; level 0 otherwise.
std::size_t choose_start_level(const Hierarchy& h);

struct HierarchicalStats {
    std::size_t start_level = 0;
    std::size_t fallbacks = 0;
    std::size_t coarse_candidates = 0;
};

// Multilevel query: for growing hop counts, enumerate the coarse candidate
// paths at the start level and refine the survivors level by level down to
// the base graph; the first hop count with a surviving refinement is the
// answer, identical to the flat search. Candidate overflow past `budget`
// falls back to the flat search.
QueryResult hierarchical_shortest_paths(const Hierarchy& h, VertexId from, VertexId to,
                                        std::size_t max_paths = kDefaultMaxPaths,
                                        std::size_t budget = kDefaultCandidateBudget,
                                        HierarchicalStats* stats = nullptr,
                                        std::optional<std::size_t> start_level = std::nullopt);

}  // namespace bitpath
