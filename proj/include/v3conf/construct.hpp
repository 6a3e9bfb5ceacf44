#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "v3conf/census.hpp"
#include "v3conf/configuration.hpp"
#include "v3conf/graphs.hpp"
#include "v3conf/io.hpp"

namespace v3conf {

/// Points are the 15 pairs of a 6-set, blocks its 15 perfect matchings.
/// The unique triangle-free 15_3; its Levi graph is Tutte's 8-cage.
inline Configuration cremona_richmond() {
    std::array<std::array<int, 6>, 6> pair_id{};
    int next = 0;
    for (int a = 0; a < 6; ++a) {
        for (int b = a + 1; b < 6; ++b) {
            pair_id[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = next;
            pair_id[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = next;
            ++next;
        }
    }
    auto id = [&pair_id](int a, int b) { return pair_id[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    std::vector<Block> blocks;
    // 0 is matched with b; the remaining four elements split three ways.
    for (int b = 1; b < 6; ++b) {
        std::vector<int> rest;
        for (int x = 1; x < 6; ++x) {
            if (x != b) rest.push_back(x);
        }
        const int c = rest[0];
        for (int k = 1; k < 4; ++k) {
            std::vector<int> other;
            for (int j = 1; j < 4; ++j) {
                if (j != k) other.push_back(rest[static_cast<std::size_t>(j)]);
            }
            blocks.push_back(sorted_block({id(0, b), id(c, rest[static_cast<std::size_t>(k)]), id(other[0], other[1])}));
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return Configuration::from_blocks(15, std::move(blocks));
}

namespace detail {

struct SeedListing {
    int v;
    int index;
    std::string_view text;
};

// Triangle-free configurations whose Levi graphs (orders 34, 36, 38, 42) have
// girth 8 and contain a 10-cycle.
inline constexpr std::array<SeedListing, 6> kSeeds{{
    {17, 0, "012 034 056 178 19a 2bc 2de 37b 39d 48e 4af 58c 5df 6ab 6eg 7fg 9cg"},
    {18, 0, "012 034 056 178 19a 2bc 2de 37b 39d 48c 4af 58g 5ae 6ch 6df 7eh 9gh bfg"},
    {18, 1, "012 034 056 178 19a 2bc 2de 37b 39d 48c 4fg 58e 59f 6ch 6dg 7fh abg aeh"},
    {18, 2, "012 034 056 178 19a 2bc 2de 37b 39d 48e 4af 57g 5df 68c 69h acg bfh egh"},
    {19, 0, "012 034 056 178 19a 2bc 2de 37b 39d 48c 4af 57e 5ag 68h 69i bfh cgi dgh efi"},
    {21, 0, "012 034 056 178 19a 2bc 2de 37b 39d 48c 4af 57e 5gh 68i 6fj 9gk ahi bfg cjk dhj eik"},
}};

} // namespace detail

inline Configuration seed_triangle_free(int v, int index = 0) {
    for (const auto& seed : detail::kSeeds) {
        if (seed.v == v && seed.index == index) return parse_compact(seed.text);
    }
    throw Error(ErrorKind::NoSuchSeed, "no embedded triangle-free seed with v=" + std::to_string(v) +
                                           " index=" + std::to_string(index));
}

/// The lexicographically least 10-cycle: smallest start vertex, then the
/// smaller of the two directions, then lexicographic in vertex order.
template <AdjacencyGraph G>
TenCycle find_ten_cycle(const G& g) {
    const int n = g.vertex_count();
    TenCycle path{};
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);

    auto extend = [&](auto&& self, int depth) -> bool {
        const int last = path[static_cast<std::size_t>(depth - 1)];
        if (depth == 10) {
            if (path[1] > path[9]) return false;
            const auto& nb = g.neighbors(last);
            return std::find(std::ranges::begin(nb), std::ranges::end(nb), path[0]) != std::ranges::end(nb);
        }
        for (int w : g.neighbors(last)) {
            if (w <= path[0] || on_path[static_cast<std::size_t>(w)]) continue;
            path[static_cast<std::size_t>(depth)] = w;
            on_path[static_cast<std::size_t>(w)] = 1;
            const bool found = self(self, depth + 1);
            on_path[static_cast<std::size_t>(w)] = 0;
            if (found) return true;
        }
        return false;
    };

    for (int s = 0; s < n; ++s) {
        path[0] = s;
        on_path[static_cast<std::size_t>(s)] = 1;
        const bool found = extend(extend, 1);
        on_path[static_cast<std::size_t>(s)] = 0;
        if (found) return path;
    }
    throw Error(ErrorKind::NoTenCycle, "graph has no 10-cycle");
}

/// Grows a cubic bipartite girth-8 graph by ten vertices around the 10-cycle
/// c0..c9: edges {c1,c2},{c3,c4},{c5,c6},{c7,c8},{c9,c0} are removed, new
/// vertices u0..u9 form the cycle u0 u3 u4 u7 u8 u1 u2 u5 u6 u9 and each ui is
/// joined to ci. The u-cycle becomes the designated cycle of the result.
/// Cubicity, bipartiteness, girth 8 and the new cycle are re-verified.
inline LeviGraph extend_plus_five(const LeviGraph& g, const TenCycle& cycle) {
    if (!is_cycle(g, cycle)) throw Error(ErrorKind::BadCycle, "input is not a 10-cycle of the graph");

    LeviGraph out = g;
    for (int i = 1; i < 10; i += 2) out.graph.remove_edge(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % 10)]);

    TenCycle u{};
    for (std::size_t i = 0; i < 10; ++i) {
        u[i] = out.graph.add_vertex();
        out.side.push_back(opposite(g.side[static_cast<std::size_t>(cycle[i])]));
        out.graph.add_edge(u[i], cycle[i]);
    }
    constexpr std::array<std::size_t, 10> order{0, 3, 4, 7, 8, 1, 2, 5, 6, 9};
    TenCycle designated{};
    for (std::size_t i = 0; i < 10; ++i) {
        designated[i] = u[order[i]];
        out.graph.add_edge(u[order[i]], u[order[(i + 1) % 10]]);
    }
    out.designated_cycle = designated;

    if (auto failure = levi_invariant_failure(out); !failure.empty()) {
        throw Error(ErrorKind::PostconditionFailed, failure);
    }
    if (const auto gi = girth(out); gi != Girth::of(8)) {
        throw Error(ErrorKind::PostconditionFailed, "extended graph has girth " + to_string(gi));
    }
    return out;
}

struct ExtensionTrace {
    int base_v = 0;
    int steps = 0;
    std::vector<TenCycle> cycle_history;

    int final_v() const noexcept { return base_v + 5 * steps; }
};

struct TriangleFreeResult {
    Configuration configuration;
    ExtensionTrace trace;
};

/// A connected triangle-free v_3, which exists exactly for v = 15 and v >= 17.
/// Starts from the seed of the same residue mod 5 and extends by 5 points a step.
inline TriangleFreeResult triangle_free(int v) {
    if (v < 15 || v == 16) {
        throw Error(ErrorKind::NoSuchConfiguration,
                    "no triangle-free " + std::to_string(v) +
                        "_3 exists (none below 15; no cubic bipartite girth-8 graph of order 32)");
    }
    constexpr std::array<int, 5> bases{15, 21, 17, 18, 19}; // indexed by residue mod 5
    const int base = bases[static_cast<std::size_t>(v % 5)];
    if (base > v) {
        throw Error(ErrorKind::NoSuchConfiguration, "no triangle-free " + std::to_string(v) + "_3 exists");
    }
    const Configuration seed = base == 15 ? cremona_richmond() : seed_triangle_free(base, 0);

    ExtensionTrace trace;
    trace.base_v = base;
    trace.steps = (v - base) / 5;
    LeviGraph levi = levi_graph(seed);
    if (trace.steps > 0) {
        TenCycle cycle = find_ten_cycle(levi);
        for (int step = 0; step < trace.steps; ++step) {
            trace.cycle_history.push_back(cycle);
            levi = extend_plus_five(levi, cycle);
            cycle = *levi.designated_cycle;
        }
    }
    Configuration cfg = configuration_from_levi(levi);
    if (cfg.v() != v || count_triangles(cfg) != 0 || !is_connected(cfg)) {
        throw Error(ErrorKind::PostconditionFailed, "triangle-free construction produced a bad configuration");
    }
    return {std::move(cfg), std::move(trace)};
}

/// Levi graph of the Fano plane {i, i+1, i+3} mod 7: points 0..6, blocks 7..13.
inline SimpleGraph heawood_graph() {
    SimpleGraph g(14);
    for (int i = 0; i < 7; ++i) {
        for (int d : {0, 1, 3}) g.add_edge((i + d) % 7, 7 + i);
    }
    return g;
}

/// Heawood graph minus its lexicographically first edge {0, 7}; 0 and 7 are the
/// two degree-2 vertices.
inline SimpleGraph heawood_minus_edge() {
    SimpleGraph g = heawood_graph();
    const auto first = g.edges().front();
    g.remove_edge(first.first, first.second);
    return g;
}

/// n copies of the edge-deleted Heawood graph closed into a ring: the block-side
/// exposed vertex of copy i joins the point-side exposed vertex of copy i+1.
/// 7n points and exactly 20n triangles.
inline Configuration heawood_chain(int n) {
    if (n < 2) throw Error(ErrorKind::NTooSmall, "the chain needs at least two copies, got " + std::to_string(n));
    const SimpleGraph piece = heawood_minus_edge();
    const auto [exposed_point, exposed_block] = heawood_graph().edges().front();
    LeviGraph g{SimpleGraph(14 * n), {}, std::nullopt};
    for (int c = 0; c < n; ++c) {
        for (int x = 0; x < 14; ++x) g.side.push_back(x < 7 ? Side::Point : Side::Block);
        for (auto [a, b] : piece.edges()) g.graph.add_edge(14 * c + a, 14 * c + b);
    }
    for (int c = 0; c < n; ++c) g.graph.add_edge(14 * c + exposed_block, 14 * ((c + 1) % n) + exposed_point);
    return configuration_from_levi(g);
}

} // namespace v3conf
