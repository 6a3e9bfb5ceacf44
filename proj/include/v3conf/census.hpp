#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "v3conf/configuration.hpp"

namespace v3conf {

/// Occurrence counts of the two-block fragments (A1 disjoint pair, A2
/// intersecting pair) and the three-block fragments B1..B5 (3-PPC, hut,
/// 3-star, 3-path, triangle). t is the triangle count and equals b5.
struct FragmentCensus {
    std::int64_t v = 0;
    std::int64_t t = 0;
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    std::int64_t b1 = 0;
    std::int64_t b2 = 0;
    std::int64_t b3 = 0;
    std::int64_t b4 = 0;
    std::int64_t b5 = 0;

    friend bool operator==(const FragmentCensus&, const FragmentCensus&) = default;
};

/// Block triples that pairwise meet in three distinct points.
///
/// For a base block and an unordered pair {p, q} of its points, every block
/// through p and every block through q (other than the base) that meet each
/// other close a triangle; the meeting point cannot lie in the base block since
/// that would cover a pair twice. Each triangle is seen once per member block.
inline std::int64_t count_triangles(const Configuration& cfg) {
    std::int64_t seen = 0;
    auto meets = [&cfg](int x, int y) {
        const Block& bx = cfg.block(x);
        const Block& by = cfg.block(y);
        for (int p : bx) {
            for (int q : by) {
                if (p == q) return true;
            }
        }
        return false;
    };
    for (int base = 0; base < cfg.v(); ++base) {
        const Block& b = cfg.block(base);
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                for (int x : cfg.blocks_through(b[static_cast<std::size_t>(i)])) {
                    if (x == base) continue;
                    for (int y : cfg.blocks_through(b[static_cast<std::size_t>(j)])) {
                        if (y == base) continue;
                        if (meets(x, y)) ++seen;
                    }
                }
            }
        }
    }
    return seen / 3;
}

/// Classifies every block pair and triple by its intersection pattern.
inline FragmentCensus count_fragments_direct(const Configuration& cfg) {
    const int v = cfg.v();
    const auto n = static_cast<std::size_t>(v);
    // meet[x*n+y]: the point shared by blocks x and y, or -1
    std::vector<int> meet(n * n, -1);
    for (int p = 0; p < v; ++p) {
        const auto& through = cfg.blocks_through(p);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (i != j) meet[static_cast<std::size_t>(through[static_cast<std::size_t>(i)]) * n +
                                 static_cast<std::size_t>(through[static_cast<std::size_t>(j)])] = p;
            }
        }
    }

    FragmentCensus c;
    c.v = v;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (meet[x * n + y] >= 0) {
                ++c.a2;
            } else {
                ++c.a1;
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            const int xy = meet[x * n + y];
            for (std::size_t z = y + 1; z < n; ++z) {
                const int xz = meet[x * n + z];
                const int yz = meet[y * n + z];
                const int hits = (xy >= 0) + (xz >= 0) + (yz >= 0);
                switch (hits) {
                case 0: ++c.b1; break;
                case 1: ++c.b2; break;
                case 2: ++c.b4; break;
                default:
                    if (xy == xz && xz == yz) {
                        ++c.b3;
                    } else {
                        ++c.b5;
                    }
                }
            }
        }
    }
    c.t = c.b5;
    return c;
}

/// Fragment counts forced by v and t alone. Throws InfeasiblePair when any
/// count would be negative or b1 is not an integer: no v_3 has that (v, t).
inline FragmentCensus census_from_formulas(std::int64_t v, std::int64_t t) {
    const std::string where = "(v=" + std::to_string(v) + ", t=" + std::to_string(t) + ")";
    if (v < 7) throw Error(ErrorKind::InfeasiblePair, where + ": no v_3 has fewer than 7 points");
    if (t < 0 || t > 4 * v) throw Error(ErrorKind::InfeasiblePair, where + ": t must lie in [0, 4v]");
    FragmentCensus c;
    c.v = v;
    c.t = t;
    c.a2 = 3 * v;
    c.a1 = v * (v - 7) / 2;
    c.b3 = v;
    c.b5 = t;
    c.b4 = 3 * (4 * v - t);
    c.b2 = 3 * (v * (v - 11) + t);
    const std::int64_t b1_times_6 = v * v * v - 21 * v * v + 122 * v - 6 * t;
    if (b1_times_6 % 6 != 0) throw Error(ErrorKind::InfeasiblePair, where + ": b1 is not an integer");
    c.b1 = b1_times_6 / 6;
    for (std::int64_t x : {c.a1, c.a2, c.b1, c.b2, c.b3, c.b4, c.b5}) {
        if (x < 0) throw Error(ErrorKind::InfeasiblePair, where + ": a fragment count would be negative");
    }
    return c;
}

inline bool verify_census(const Configuration& cfg) {
    const auto direct = count_fragments_direct(cfg);
    try {
        return direct == census_from_formulas(cfg.v(), count_triangles(cfg));
    } catch (const Error&) {
        return false;
    }
}

} // namespace v3conf
