#include "bitpath/weighted.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace bitpath {

namespace {

void check_weighted_query(const Graph& g, VertexId from, VertexId to) {
    if (!g.weighted()) throw std::logic_error("weighted search requires edge weights");
    if (from >= g.order() || to >= g.order())
        throw IndexError("query (" + std::to_string(from) + "," + std::to_string(to) +
                         ") outside graph of order " + std::to_string(g.order()));
}

Cost checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw std::overflow_error("weight scaling overflows 64 bits");
    return a * b;
}

// cost[j][v] = min cost of a j-hop walk source -> v, j <= max_hops.
std::vector<std::vector<Cost>> forward_cost_table(const Graph& g, VertexId source,
                                                  std::size_t max_hops) {
    std::vector<std::vector<Cost>> cost(max_hops + 1,
                                        std::vector<Cost>(g.order(), kInfiniteCost));
    cost[0][source] = 0;
    for (std::size_t j = 1; j <= max_hops; ++j) {
        for (std::size_t u = 0; u < g.order(); ++u) {
            if (cost[j - 1][u] == kInfiniteCost) continue;
            const auto row = g.successors(static_cast<VertexId>(u));
            const auto weights = g.successor_weights(static_cast<VertexId>(u));
            for (std::size_t i = 0; i < row.size(); ++i) {
                const Cost c = cost[j - 1][u] + weights[i];
                if (c < cost[j][row[i]]) cost[j][row[i]] = c;
            }
        }
    }
    return cost;
}

// cost[j][v] = min cost of a j-hop walk v -> target, j <= max_hops.
std::vector<std::vector<Cost>> backward_cost_table(const Graph& g, VertexId target,
                                                   std::size_t max_hops) {
    std::vector<std::vector<Cost>> cost(max_hops + 1,
                                        std::vector<Cost>(g.order(), kInfiniteCost));
    cost[0][target] = 0;
    for (std::size_t j = 1; j <= max_hops; ++j) {
        for (std::size_t u = 0; u < g.order(); ++u) {
            const auto row = g.successors(static_cast<VertexId>(u));
            const auto weights = g.successor_weights(static_cast<VertexId>(u));
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (cost[j - 1][row[i]] == kInfiniteCost) continue;
                const Cost c = weights[i] + cost[j - 1][row[i]];
                if (c < cost[j][u]) cost[j][u] = c;
            }
        }
    }
    return cost;
}

// Every walk of exactly `hops` steps from -> to of total cost `total` (the
// minimum over such walks), lexicographic, truncated at max_paths. In a
// minimum-cost walk every suffix is itself minimal, so extending an edge is
// valid exactly when prefix + edge + minimal suffix == total.
std::vector<Path> enumerate_min_cost_walks(const Graph& g, VertexId from, VertexId to,
                                           std::size_t hops, Cost total, std::size_t max_paths,
                                           bool* truncated) {
    if (truncated) *truncated = false;
    std::vector<Path> result;
    if (max_paths == 0) {
        if (truncated) *truncated = true;
        return result;
    }
    if (hops == 0) {
        if (from == to && total == 0) result.push_back({from});
        return result;
    }

    const auto suffix = backward_cost_table(g, to, hops);

    struct Frame {
        std::span<const VertexId> row;
        std::span<const Cost> weights;
        std::size_t next = 0;
    };
    Path path{from};
    std::vector<Cost> prefix{0};
    std::vector<Frame> stack{{g.successors(from), g.successor_weights(from), 0}};

    while (!stack.empty()) {
        Frame& frame = stack.back();
        const std::size_t depth = stack.size();  // position being filled
        bool descended = false;
        while (frame.next < frame.row.size()) {
            const std::size_t i = frame.next++;
            const VertexId w = frame.row[i];
            const Cost remaining = suffix[hops - depth][w];
            if (remaining == kInfiniteCost) continue;
            if (prefix.back() + frame.weights[i] + remaining != total) continue;
            if (depth == hops) {
                if (result.size() == max_paths) {
                    if (truncated) *truncated = true;
                    return result;
                }
                path.push_back(w);
                result.push_back(path);
                path.pop_back();
            } else {
                path.push_back(w);
                prefix.push_back(prefix.back() + frame.weights[i]);
                stack.push_back({g.successors(w), g.successor_weights(w), 0});
                descended = true;
                break;
            }
        }
        if (!descended) {
            stack.pop_back();
            if (!stack.empty()) {
                path.pop_back();
                prefix.pop_back();
            }
        }
    }
    return result;
}

}  // namespace

Rational Rational::reduced(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

RationalizedWeights rationalize_weights(const std::vector<Rational>& weights) {
    for (const Rational& w : weights) {
        if (w.den == 0) throw std::invalid_argument("rational with zero denominator");
        if (w.num == 0) throw std::domain_error("zero weight");
    }
    std::uint64_t scale = 1;
    for (const Rational& w : weights) {
        const Rational r = Rational::reduced(w.num, w.den);
        const std::uint64_t g = std::gcd(scale, r.den);
        scale = checked_mul(scale / g, r.den);
    }
    RationalizedWeights out;
    out.scale = scale;
    out.weights.reserve(weights.size());
    for (const Rational& w : weights) {
        const Rational r = Rational::reduced(w.num, w.den);
        out.weights.push_back(checked_mul(r.num, scale / r.den));
    }
    return out;
}

std::optional<std::pair<Cost, HopCostTable>> min_cost_at_hops(const Graph& g, VertexId from,
                                                              VertexId to, std::size_t hops) {
    check_weighted_query(g, from, to);
    HopCostTable table{hops, forward_cost_table(g, from, hops)};
    const Cost best = table.cost[hops][to];
    if (best == kInfiniteCost) return std::nullopt;
    return std::make_pair(best, std::move(table));
}

Cost path_cost(const Graph& g, const Path& path) {
    if (path.empty()) throw std::invalid_argument("cannot cost an empty path");
    Cost total = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) total += g.weight(path[i], path[i + 1]);
    return total;
}

WeightedQueryResult shortest_weighted_paths(const Graph& g, VertexId from, VertexId to,
                                            std::size_t max_paths, WeightedSearchStats* stats) {
    check_weighted_query(g, from, to);

    WeightedQueryResult result;
    result.scale = g.weight_scale();
    if (from == to) {
        result.cost = 0;
        result.hop_length = 0;
        result.paths = {Path{from}};
        return result;
    }

    const auto min_hops = shortest_path_length(g, from, to);
    if (!min_hops) return result;

    // With weights >= 1 an optimal walk is a simple path, so both the cost
    // bound and order - 1 cap the useful hop counts.
    const auto cost_table = forward_cost_table(g, from, g.order() - 1);
    Cost best_cost = cost_table[*min_hops][to];
    std::size_t best_hops = *min_hops;
    if (stats) {
        stats->initial_cost = best_cost;
        stats->max_hops_explored = *min_hops;
    }
    for (std::size_t hops = *min_hops + 1; hops <= best_cost && hops < g.order(); ++hops) {
        if (stats) stats->max_hops_explored = hops;
        const Cost c = cost_table[hops][to];
        if (c < best_cost) {
            best_cost = c;
            best_hops = hops;
        }
    }

    result.cost = best_cost;
    result.hop_length = best_hops;
    result.paths =
        enumerate_min_cost_walks(g, from, to, best_hops, best_cost, max_paths, &result.truncated);
    return result;
}

WeightedQueryResult hierarchical_weighted_paths(const Hierarchy& h, VertexId from, VertexId to,
                                                std::size_t max_paths, std::size_t budget,
                                                HierarchicalStats* stats,
                                                std::optional<std::size_t> start_level) {
    const Graph& base = h.base();
    check_weighted_query(base, from, to);

    WeightedQueryResult result;
    result.scale = base.weight_scale();
    if (from == to) {
        result.cost = 0;
        result.hop_length = 0;
        result.paths = {Path{from}};
        return result;
    }

    const std::size_t start = start_level.value_or(choose_start_level(h));
    if (start >= h.level_count())
        throw std::invalid_argument("start level " + std::to_string(start) + " of " +
                                    std::to_string(h.level_count()));
    if (stats) stats->start_level = start;

    auto flat_fallback = [&]() {
        if (stats) ++stats->fallbacks;
        return shortest_weighted_paths(base, from, to, max_paths);
    };

    // Structural multilevel search settles reachability and seeds the upper
    // bound with the cheapest minimal-hop path.
    const QueryResult structural =
        hierarchical_shortest_paths(h, from, to, budget, budget, nullptr, start);
    if (!structural.hop_length) return result;
    Cost best = kInfiniteCost;
    for (const Path& p : structural.paths) best = std::min(best, path_cost(base, p));

    const Graph& coarse = h.level(start).graph;
    const VertexId c_from = h.class_at(start, from);
    const VertexId c_to = h.class_at(start, to);

    // Candidate pool: every coarse walk of cost <= best, at most order-1
    // hops (optimal base paths are simple and refinement preserves length).
    const std::size_t hop_cap = std::min<std::size_t>(base.order() - 1, best);
    const auto suffix = backward_cost_table(coarse, c_to, hop_cap);
    std::vector<Cost> cheapest_suffix(coarse.order(), kInfiniteCost);
    for (std::size_t j = 0; j <= hop_cap; ++j)
        for (std::size_t v = 0; v < coarse.order(); ++v)
            cheapest_suffix[v] = std::min(cheapest_suffix[v], suffix[j][v]);

    struct Candidate {
        Cost cost = 0;
        Path walk;
    };
    std::vector<Candidate> pool;
    {
        struct Frame {
            std::span<const VertexId> row;
            std::span<const Cost> weights;
            std::size_t next = 0;
        };
        Path walk{c_from};
        std::vector<Cost> prefix{0};
        std::vector<Frame> stack{{coarse.successors(c_from), coarse.successor_weights(c_from), 0}};
        if (c_from == c_to) pool.push_back({0, walk});
        while (!stack.empty()) {
            Frame& frame = stack.back();
            bool descended = false;
            while (frame.next < frame.row.size()) {
                const std::size_t i = frame.next++;
                const VertexId w = frame.row[i];
                const Cost c = prefix.back() + frame.weights[i];
                if (cheapest_suffix[w] == kInfiniteCost || c + cheapest_suffix[w] > best)
                    continue;
                walk.push_back(w);
                prefix.push_back(c);
                if (w == c_to) {
                    if (pool.size() >= budget) return flat_fallback();
                    pool.push_back({c, walk});
                }
                if (walk.size() - 1 < hop_cap) {
                    stack.push_back({coarse.successors(w), coarse.successor_weights(w), 0});
                    descended = true;
                    break;
                }
                walk.pop_back();
                prefix.pop_back();
            }
            if (!descended) {
                stack.pop_back();
                if (!stack.empty()) {
                    walk.pop_back();
                    prefix.pop_back();
                }
            }
        }
    }
    if (stats) stats->coarse_candidates += pool.size();

    std::sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        if (a.walk.size() != b.walk.size()) return a.walk.size() < b.walk.size();
        return a.walk < b.walk;
    });

    // Refine in increasing coarse cost; entries past the best base cost
    // cannot produce anything cheaper or equal-and-new, their refinements
    // costing at least their own coarse cost.
    std::vector<std::pair<Cost, Path>> found;
    for (const Candidate& candidate : pool) {
        if (candidate.cost > best) break;
        std::vector<Path> current{candidate.walk};
        bool overflow = false;
        for (std::size_t li = start; li >= 1 && !current.empty(); --li) {
            const Graph& finer = h.level(li - 1).graph;
            const VertexId f_from = h.class_at(li - 1, from);
            const VertexId f_to = h.class_at(li - 1, to);
            std::vector<Path> refined;
            for (const Path& p : current) {
                bool part_overflow = false;
                std::vector<Path> part =
                    refine_path(h, li, p, f_from, f_to, budget + 1, &part_overflow);
                for (Path& q : part) {
                    if (path_cost(finer, q) > best) continue;  // lower bound already too high
                    refined.push_back(std::move(q));
                }
                if (part_overflow || refined.size() > budget) {
                    overflow = true;
                    break;
                }
            }
            if (overflow) break;
            current = std::move(refined);
        }
        if (overflow) return flat_fallback();
        for (Path& p : current) {
            const Cost c = path_cost(base, p);
            if (c > best) continue;
            best = std::min(best, c);
            found.emplace_back(c, std::move(p));
        }
    }

    std::size_t best_hops = std::numeric_limits<std::size_t>::max();
    for (const auto& [c, p] : found)
        if (c == best) best_hops = std::min(best_hops, p.size() - 1);

    std::vector<Path> paths;
    for (auto& [c, p] : found)
        if (c == best && p.size() - 1 == best_hops) paths.push_back(std::move(p));
    std::sort(paths.begin(), paths.end());

    result.cost = best;
    result.hop_length = best_hops;
    if (paths.size() > max_paths) {
        paths.resize(max_paths);
        result.truncated = true;
    }
    result.paths = std::move(paths);
    return result;
}

}  // namespace bitpath
