#include "bitpath/hierarchy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace bitpath {

Partition Partition::from_class_of(std::vector<std::uint32_t> class_of) {
    Partition p;
    std::uint32_t max_class = 0;
    for (std::uint32_t c : class_of) max_class = std::max(max_class, c);
    const std::size_t count = class_of.empty() ? 0 : static_cast<std::size_t>(max_class) + 1;
    p.members.resize(count);
    for (std::size_t v = 0; v < class_of.size(); ++v)
        p.members[class_of[v]].push_back(static_cast<VertexId>(v));
    for (std::size_t c = 0; c < count; ++c)
        if (p.members[c].empty())
            throw std::invalid_argument("partition class " + std::to_string(c) + " is empty");
    p.class_of = std::move(class_of);
    return p;
}

Partition Partition::identity(std::size_t order) {
    std::vector<std::uint32_t> class_of(order);
    for (std::size_t v = 0; v < order; ++v) class_of[v] = static_cast<std::uint32_t>(v);
    return from_class_of(std::move(class_of));
}

Partition pair_partition(std::size_t order) {
    if (order == 0) throw std::invalid_argument("pair_partition requires order >= 1");
    std::vector<std::uint32_t> class_of(order);
    for (std::size_t v = 0; v < order; ++v) class_of[v] = static_cast<std::uint32_t>(v / 2);
    return Partition::from_class_of(std::move(class_of));
}

Level coarsen(const Graph& fine, Partition partition, std::size_t index) {
    if (partition.finer_order() != fine.order())
        throw std::invalid_argument("partition covers " + std::to_string(partition.finer_order()) +
                                    " vertices but the graph has " + std::to_string(fine.order()));

    const std::size_t coarse_order = partition.class_count();
    // key = (coarse from << 32) | coarse to; value = min fine weight.
    std::unordered_map<std::uint64_t, Cost> quotient;
    for (std::size_t u = 0; u < fine.order(); ++u) {
        const auto cu = static_cast<std::uint64_t>(partition.class_of[u]);
        const auto row = fine.successors(static_cast<VertexId>(u));
        for (std::size_t i = 0; i < row.size(); ++i) {
            const std::uint64_t key = (cu << 32) | partition.class_of[row[i]];
            const Cost w = fine.weighted() ? fine.successor_weights(static_cast<VertexId>(u))[i]
                                           : Cost{1};
            auto [it, inserted] = quotient.try_emplace(key, w);
            if (!inserted && w < it->second) it->second = w;
        }
    }

    Graph graph;
    if (fine.weighted()) {
        std::vector<WeightedEdge> edges;
        edges.reserve(quotient.size());
        for (auto [key, w] : quotient)
            edges.push_back({static_cast<VertexId>(key >> 32),
                             static_cast<VertexId>(key & 0xffffffffu), w});
        graph = Graph::from_weighted_edges(coarse_order, std::move(edges), fine.weight_scale());
    } else {
        std::vector<Edge> edges;
        edges.reserve(quotient.size());
        for (auto [key, w] : quotient)
            edges.push_back({static_cast<VertexId>(key >> 32),
                             static_cast<VertexId>(key & 0xffffffffu)});
        graph = Graph::from_edges(coarse_order, std::move(edges));
    }
    return Level{std::move(graph), std::move(partition), index};
}

Hierarchy::Hierarchy(std::vector<Level> levels, std::size_t min_order)
    : levels_(std::move(levels)), min_order_(min_order) {
    if (levels_.empty()) throw std::invalid_argument("a hierarchy needs at least one level");
    if (min_order_ == 0) throw std::invalid_argument("min_order must be >= 1");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const Level& lvl = levels_[i];
        if (lvl.index != i) throw std::invalid_argument("level indices must be consecutive");
        const std::size_t finer_order = i == 0 ? lvl.graph.order() : levels_[i - 1].graph.order();
        if (lvl.partition.finer_order() != finer_order ||
            lvl.partition.class_count() != lvl.graph.order())
            throw std::invalid_argument("level partition does not match the level orders");
        if (i > 0 && lvl.graph.order() >= levels_[i - 1].graph.order())
            throw std::invalid_argument("level orders must strictly decrease");
    }

    base_class_.resize(levels_.size());
    const std::size_t base_order = levels_.front().graph.order();
    base_class_[0].resize(base_order);
    for (std::size_t v = 0; v < base_order; ++v)
        base_class_[0][v] = static_cast<VertexId>(v);
    for (std::size_t i = 1; i < levels_.size(); ++i) {
        base_class_[i].resize(base_order);
        for (std::size_t v = 0; v < base_order; ++v)
            base_class_[i][v] = levels_[i].partition.class_of[base_class_[i - 1][v]];
    }
}

const Level& Hierarchy::level(std::size_t i) const {
    if (i >= levels_.size())
        throw IndexError("level " + std::to_string(i) + " of " + std::to_string(levels_.size()));
    return levels_[i];
}

VertexId Hierarchy::class_at(std::size_t level_index, VertexId base_vertex) const {
    if (level_index >= levels_.size())
        throw IndexError("level " + std::to_string(level_index) + " of " +
                         std::to_string(levels_.size()));
    if (base_vertex >= base().order())
        throw IndexError("vertex " + std::to_string(base_vertex) + " outside graph of order " +
                         std::to_string(base().order()));
    return base_class_[level_index][base_vertex];
}

Hierarchy build_hierarchy(Graph base, std::size_t min_order) {
    if (min_order == 0) throw std::invalid_argument("min_order must be >= 1");
    std::vector<Level> levels;
    const std::size_t base_order = base.order();
    levels.push_back(Level{std::move(base), Partition::identity(base_order), 0});
    while (levels.back().graph.order() > min_order && levels.back().graph.order() > 1) {
        const Graph& current = levels.back().graph;
        Level next = coarsen(current, pair_partition(current.order()), levels.size());
        levels.push_back(std::move(next));
    }
    return Hierarchy(std::move(levels), min_order);
}

VertexSet member_form(const Level& level, VertexId coarse) {
    if (coarse >= level.partition.class_count())
        throw IndexError("class " + std::to_string(coarse) + " of " +
                         std::to_string(level.partition.class_count()));
    VertexSet form(level.partition.finer_order());
    for (VertexId v : level.partition.members[coarse]) form.set(v);
    return form;
}

std::vector<Path> refine_path(const Hierarchy& h, std::size_t level_index, const Path& coarse_path,
                              VertexId from, VertexId to, std::size_t max_paths,
                              bool* truncated) {
    if (truncated) *truncated = false;
    if (level_index == 0 || level_index >= h.level_count())
        throw std::invalid_argument("refine_path needs a level with a finer level below it");
    if (coarse_path.empty()) throw std::invalid_argument("coarse path is empty");

    const Level& lvl = h.level(level_index);
    const Graph& fine = h.level(level_index - 1).graph;
    for (std::size_t i = 0; i + 1 < coarse_path.size(); ++i)
        if (!lvl.graph.has_edge(coarse_path[i], coarse_path[i + 1]))
            throw std::invalid_argument("coarse sequence is not a path at its level");
    if (from >= fine.order() || to >= fine.order())
        throw IndexError("refinement endpoint outside the finer level");
    if (lvl.partition.class_of[from] != coarse_path.front() ||
        lvl.partition.class_of[to] != coarse_path.back())
        throw std::invalid_argument("endpoint classes do not match the coarse path");

    const std::size_t hops = coarse_path.size() - 1;
    std::vector<VertexSet> layers;
    layers.reserve(hops + 1);
    VertexSet forward = VertexSet::single(from, fine.order());
    for (std::size_t j = 0; j <= hops; ++j) {
        if (j > 0) forward = step_forward(fine, forward);
        layers.push_back(member_form(lvl, coarse_path[j]) & forward);
        if (layers.back().none()) return {};
    }
    VertexSet backward = VertexSet::single(to, fine.order());
    for (std::size_t j = hops + 1; j-- > 0;) {
        layers[j] &= backward;
        if (layers[j].none()) return {};
        if (j > 0) backward = step_backward(fine, backward);
    }

    LayerMeet meet{from, to, hops, true, std::move(layers)};
    return enumerate_paths(fine, meet, max_paths, truncated);
}

std::size_t choose_start_level(const Hierarchy& h) {
    for (std::size_t i = h.level_count(); i-- > 0;) {
        const Graph& g = h.level(i).graph;
        const double order = static_cast<double>(g.order());
        const double ratio = static_cast<double>(g.edge_count()) / (order * order);
        const double collision = 2.0 * ratio - ratio * ratio;
        if (collision < 0.5) return i;
    }
    return 0;
}

QueryResult hierarchical_shortest_paths(const Hierarchy& h, VertexId from, VertexId to,
                                        std::size_t max_paths, std::size_t budget,
                                        HierarchicalStats* stats,
                                        std::optional<std::size_t> start_level) {
    const Graph& base = h.base();
    if (from >= base.order() || to >= base.order())
        throw IndexError("query (" + std::to_string(from) + "," + std::to_string(to) +
                         ") outside graph of order " + std::to_string(base.order()));

    const std::size_t start = start_level.value_or(choose_start_level(h));
    if (start >= h.level_count())
        throw std::invalid_argument("start level " + std::to_string(start) + " of " +
                                    std::to_string(h.level_count()));
    if (stats) stats->start_level = start;

    auto flat_fallback = [&]() {
        if (stats) ++stats->fallbacks;
        return shortest_paths(base, from, to, max_paths);
    };

    if (from == to) {
        QueryResult r;
        r.hop_length = 0;
        r.paths = {Path{from}};
        r.path_count_found = 1;
        return r;
    }

    const Graph& coarse = h.level(start).graph;
    const VertexId c_from = h.class_at(start, from);
    const VertexId c_to = h.class_at(start, to);

    // A minimal base-level path is simple, which caps the hop count to probe.
    const std::size_t hop_cap = base.order() - 1;
    VertexSet frontier = VertexSet::single(c_from, coarse.order());
    VertexSet reached = frontier;

    for (std::size_t hops = 0; hops <= hop_cap; ++hops) {
        bool coarse_hit;
        if (hops == 0) {
            coarse_hit = c_from == c_to;
        } else {
            frontier = step_forward(coarse, frontier);
            if (frontier.none()) return {};  // no coarse walk of any further length
            VertexSet grown = reached | frontier;
            if (grown == reached && !reached.test(c_to)) return {};  // coarse-unreachable
            reached = std::move(grown);
            coarse_hit = frontier.test(c_to);
        }
        if (!coarse_hit) continue;

        const LayerMeet meet = meet_layers(coarse, c_from, c_to, hops);
        if (!meet.feasible) continue;

        bool overflow = false;
        std::vector<Path> candidates = enumerate_paths(coarse, meet, budget, &overflow);
        if (overflow) return flat_fallback();
        if (stats) stats->coarse_candidates += candidates.size();

        for (std::size_t li = start; li >= 1 && !candidates.empty(); --li) {
            const VertexId f_from = h.class_at(li - 1, from);
            const VertexId f_to = h.class_at(li - 1, to);
            std::vector<Path> refined;
            for (const Path& candidate : candidates) {
                bool part_overflow = false;
                std::vector<Path> part =
                    refine_path(h, li, candidate, f_from, f_to, budget + 1, &part_overflow);
                refined.insert(refined.end(), std::make_move_iterator(part.begin()),
                               std::make_move_iterator(part.end()));
                if (part_overflow || refined.size() > budget) {
                    overflow = true;
                    break;
                }
            }
            if (overflow) return flat_fallback();
            candidates = std::move(refined);
        }
        if (candidates.empty()) continue;  // every coarse candidate died on the way down

        std::sort(candidates.begin(), candidates.end());
        QueryResult result;
        result.hop_length = hops;
        if (candidates.size() > max_paths) {
            candidates.resize(max_paths);
            result.truncated = true;
        }
        result.path_count_found = candidates.size();
        result.paths = std::move(candidates);
        return result;
    }
    return {};
}

}  // namespace bitpath
