#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <deque>
#include <optional>
#include <ranges>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "v3conf/configuration.hpp"

namespace v3conf {

template <class G>
concept AdjacencyGraph = requires(const G& g, int v) {
    { g.vertex_count() } -> std::convertible_to<int>;
    { g.neighbors(v) } -> std::ranges::random_access_range;
};

/// Undirected graph without loops or multi-edges; neighbor lists kept sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(static_cast<std::size_t>(n)) {}

    static SimpleGraph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        SimpleGraph g(n);
        for (auto [a, b] : edges) g.add_edge(a, b);
        return g;
    }

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int a, int b) const {
        const auto& n = neighbors(a);
        return std::binary_search(n.begin(), n.end(), b);
    }

    /// No-op for loops and edges already present.
    void add_edge(int a, int b) {
        if (a == b || has_edge(a, b)) return;
        insert_sorted(adj_[static_cast<std::size_t>(a)], b);
        insert_sorted(adj_[static_cast<std::size_t>(b)], a);
    }

    void remove_edge(int a, int b) {
        erase_value(adj_[static_cast<std::size_t>(a)], b);
        erase_value(adj_[static_cast<std::size_t>(b)], a);
    }

    int add_vertex() {
        adj_.emplace_back();
        return vertex_count() - 1;
    }

    std::size_t edge_count() const noexcept {
        std::size_t twice = 0;
        for (const auto& n : adj_) twice += n.size();
        return twice / 2;
    }

    /// Edges (a, b) with a < b in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < vertex_count(); ++a) {
            for (int b : neighbors(a)) {
                if (a < b) out.emplace_back(a, b);
            }
        }
        return out;
    }

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    static void insert_sorted(std::vector<int>& xs, int x) { xs.insert(std::lower_bound(xs.begin(), xs.end(), x), x); }
    static void erase_value(std::vector<int>& xs, int x) {
        auto it = std::lower_bound(xs.begin(), xs.end(), x);
        if (it != xs.end() && *it == x) xs.erase(it);
    }

    std::vector<std::vector<int>> adj_;
};

enum class Side : std::uint8_t { Point, Block };

constexpr Side opposite(Side s) noexcept { return s == Side::Point ? Side::Block : Side::Point; }

using TenCycle = std::array<int, 10>;

/// Cubic bipartite graph with its bipartition and, when it came out of the
/// extension step, a designated 10-cycle.
struct LeviGraph {
    SimpleGraph graph;
    std::vector<Side> side;
    std::optional<TenCycle> designated_cycle;

    int vertex_count() const noexcept { return graph.vertex_count(); }
    const std::vector<int>& neighbors(int v) const { return graph.neighbors(v); }
};

/// Shortest cycle length; `length` is empty for forests.
struct Girth {
    std::optional<int> length;

    static Girth infinite() { return {}; }
    static Girth of(int n) { return {n}; }
    bool is_infinite() const noexcept { return !length.has_value(); }
    bool at_least(int n) const noexcept { return !length || *length >= n; }

    friend bool operator==(const Girth&, const Girth&) = default;
};

inline std::string to_string(const Girth& g) { return g.length ? std::to_string(*g.length) : "infinite"; }

inline LeviGraph levi_graph(const Configuration& cfg) {
    const int v = cfg.v();
    LeviGraph g{SimpleGraph(2 * v), std::vector<Side>(static_cast<std::size_t>(2 * v), Side::Point), std::nullopt};
    for (int i = 0; i < v; ++i) {
        g.side[static_cast<std::size_t>(v + i)] = Side::Block;
        for (int p : cfg.block(i)) g.graph.add_edge(p, v + i);
    }
    return g;
}

/// Points adjacent iff they share a block. 6-regular for a v_3.
inline SimpleGraph incidence_graph(const Configuration& cfg) {
    SimpleGraph g(cfg.v());
    for (const Block& b : cfg.blocks()) {
        g.add_edge(b[0], b[1]);
        g.add_edge(b[0], b[2]);
        g.add_edge(b[1], b[2]);
    }
    return g;
}

template <AdjacencyGraph G>
Girth girth(const G& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            const int du = dist[static_cast<std::size_t>(u)];
            if (best >= 0 && 2 * du + 1 >= best) break;
            for (int w : g.neighbors(u)) {
                if (w == parent[static_cast<std::size_t>(u)]) continue;
                const int dw = dist[static_cast<std::size_t>(w)];
                if (dw < 0) {
                    dist[static_cast<std::size_t>(w)] = du + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else {
                    const int len = du + dw + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    return best < 0 ? Girth::infinite() : Girth::of(best);
}

/// Number of 6-cycles through edge {a, b}: the edges joining a's distance-2
/// vertices (away from b) to b's distance-2 vertices (away from a).
/// Requires a bipartite graph of girth at least 6; degrees may be below 3.
template <AdjacencyGraph G>
int six_cycles_through_edge(const G& g, int a, int b) {
    auto second_shell = [&g](int x, int y) {
        std::vector<int> shell;
        for (int m : g.neighbors(x)) {
            if (m == y) continue;
            for (int f : g.neighbors(m)) {
                if (f != x) shell.push_back(f);
            }
        }
        std::sort(shell.begin(), shell.end());
        return shell;
    };
    const auto near_a = second_shell(a, b);
    const auto near_b = second_shell(b, a);
    int count = 0;
    for (int x : near_a) {
        for (int y : g.neighbors(x)) {
            if (std::binary_search(near_b.begin(), near_b.end(), y)) ++count;
        }
    }
    return count;
}

struct EdgeCycleCount {
    int a;
    int b;
    int cycles;
};

template <AdjacencyGraph G>
std::vector<EdgeCycleCount> six_cycles_per_edge(const G& g) {
    std::vector<EdgeCycleCount> out;
    for (int a = 0; a < g.vertex_count(); ++a) {
        for (int b : g.neighbors(a)) {
            if (a < b) out.push_back({a, b, six_cycles_through_edge(g, a, b)});
        }
    }
    return out;
}

/// Each 6-cycle has six edges, so the per-edge total is divided by 6.
template <AdjacencyGraph G>
std::int64_t count_six_cycles(const G& g) {
    std::int64_t total = 0;
    for (const auto& e : six_cycles_per_edge(g)) total += e.cycles;
    return total / 6;
}

/// 2-coloring per component, the smallest vertex of each component colored 0.
template <AdjacencyGraph G>
std::optional<std::vector<int>> two_coloring(const G& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

template <AdjacencyGraph G>
bool is_cubic(const G& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (std::ranges::size(g.neighbors(v)) != 3) return false;
    }
    return true;
}

/// True iff `cycle` lists distinct vertices with consecutive (and closing) adjacency.
template <AdjacencyGraph G>
bool is_cycle(const G& g, std::span<const int> cycle) {
    const auto n = cycle.size();
    if (n < 3) return false;
    std::vector<int> seen(cycle.begin(), cycle.end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const int a = cycle[i];
        const int b = cycle[(i + 1) % n];
        if (a < 0 || a >= g.vertex_count()) return false;
        const auto& nb = g.neighbors(a);
        if (std::find(std::ranges::begin(nb), std::ranges::end(nb), b) == std::ranges::end(nb)) return false;
    }
    return true;
}

/// Empty string when every LeviGraph invariant except girth holds, else the first failure.
inline std::string levi_invariant_failure(const LeviGraph& g) {
    if (g.side.size() != static_cast<std::size_t>(g.vertex_count())) return "side table size mismatch";
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.graph.degree(v) != 3) return "vertex " + std::to_string(v) + " has degree " + std::to_string(g.graph.degree(v));
        for (int w : g.neighbors(v)) {
            if (g.side[static_cast<std::size_t>(v)] == g.side[static_cast<std::size_t>(w)]) {
                return "edge " + std::to_string(v) + "-" + std::to_string(w) + " inside one side";
            }
        }
    }
    if (g.designated_cycle && !is_cycle(g, *g.designated_cycle)) return "designated cycle is not a 10-cycle";
    return {};
}

/// Points are the color class of vertex 0 (per component, of its smallest
/// vertex); blocks are the other class. Both are numbered in vertex order.
template <AdjacencyGraph G>
Configuration configuration_from_levi(const G& g) {
    // Sides are compared before degrees: a cubic bipartite graph is always balanced.
    auto coloring = two_coloring(g);
    if (!coloring) throw Error(ErrorKind::NotBipartite, "graph has an odd cycle");
    const auto& color = *coloring;
    const auto points = std::count(color.begin(), color.end(), 0);
    if (points * 2 != g.vertex_count()) {
        throw Error(ErrorKind::UnequalSides, std::to_string(points) + " points vs " +
                                                 std::to_string(g.vertex_count() - points) + " blocks");
    }
    if (!is_cubic(g)) throw Error(ErrorKind::NotCubic, "every vertex must have degree 3");
    const Girth gi = girth(g);
    if (!gi.at_least(6)) {
        throw Error(ErrorKind::GirthTooSmall, "girth " + to_string(gi) + " < 6 covers a pair twice");
    }
    std::vector<int> index(color.size());
    int next_point = 0;
    int next_block = 0;
    for (std::size_t v = 0; v < color.size(); ++v) index[v] = color[v] == 0 ? next_point++ : next_block++;
    std::vector<Block> blocks(static_cast<std::size_t>(next_block));
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (color[static_cast<std::size_t>(v)] == 0) continue;
        Block b{};
        std::size_t j = 0;
        for (int w : g.neighbors(v)) b[j++] = index[static_cast<std::size_t>(w)];
        blocks[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])] = b;
    }
    return Configuration::from_blocks(next_point, std::move(blocks));
}

inline Configuration configuration_from_levi(const LeviGraph& g) { return configuration_from_levi(g.graph); }

// Exports

template <AdjacencyGraph G>
std::string export_adjacency(const G& g) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << v << ':';
        for (int w : g.neighbors(v)) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

inline std::string export_dot(const LeviGraph& g, const std::string& name = "levi") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        const bool point = g.side.empty() || g.side[static_cast<std::size_t>(v)] == Side::Point;
        out << "  " << v << " [shape=" << (point ? "circle" : "box") << "];\n";
    }
    for (auto [a, b] : g.graph.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace v3conf
