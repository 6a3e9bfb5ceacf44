#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "v3conf/canonical.hpp"
#include "v3conf/census.hpp"
#include "v3conf/configuration.hpp"

namespace v3conf {

/// Cyclically ordered triple <a, b, c> with a + b + c = v; the configuration is
/// the orbit of the starter block {0, a, a + b} under i -> i + 1 (mod v).
struct CyclicTriple {
    int v = 0;
    int a = 0;
    int b = 0;
    int c = 0;

    friend bool operator==(const CyclicTriple&, const CyclicTriple&) = default;
    friend auto operator<=>(const CyclicTriple&, const CyclicTriple&) = default;
};

inline std::string to_string(const CyclicTriple& t) {
    return "<" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "> mod " +
           std::to_string(t.v);
}

/// Empty when the triple generates a configuration (connected or not), else the reason.
inline std::string triple_defect(const CyclicTriple& t) {
    if (t.a + t.b + t.c != t.v) return "a + b + c must equal v";
    for (int x : {t.a, t.b, t.c}) {
        if (x < 1 || x > t.v - 3) return "each of a, b, c must lie in [1, v-3]";
    }
    if (t.a == t.b || t.b == t.c || t.a == t.c) return "a, b, c must be pairwise distinct";
    if (t.v % 2 == 0) {
        for (int x : {t.a, t.b, t.c}) {
            if (2 * x == t.v) return "no element may equal v/2";
        }
    }
    return {};
}

inline bool is_connected_triple(const CyclicTriple& t) { return std::gcd(std::gcd(t.a, t.b), t.c) == 1; }

/// The orbit blocks without the connectedness requirement.
inline std::vector<Block> cyclic_orbit(const CyclicTriple& t) {
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(t.v));
    for (int i = 0; i < t.v; ++i) blocks.push_back({i, (i + t.a) % t.v, (i + t.a + t.b) % t.v});
    return blocks;
}

/// True iff i -> i + 1 (mod v) maps the block set onto itself.
inline bool admits_cyclic_shift(const Configuration& cfg) {
    auto blocks = cfg.sorted_blocks();
    std::vector<Block> shifted;
    shifted.reserve(blocks.size());
    for (const Block& b : blocks) {
        shifted.push_back(sorted_block({(b[0] + 1) % cfg.v(), (b[1] + 1) % cfg.v(), (b[2] + 1) % cfg.v()}));
    }
    std::sort(shifted.begin(), shifted.end());
    return shifted == blocks;
}

inline Configuration cyclic_configuration(const CyclicTriple& t) {
    if (auto defect = triple_defect(t); !defect.empty()) {
        throw Error(ErrorKind::InvalidTriple, to_string(t) + ": " + defect);
    }
    if (!is_connected_triple(t)) {
        throw Error(ErrorKind::Disconnected, to_string(t) + ": gcd(a, b, c) > 1");
    }
    auto cfg = Configuration::from_blocks(t.v, cyclic_orbit(t));
    if (!admits_cyclic_shift(cfg) || !is_connected(cfg)) {
        throw Error(ErrorKind::PostconditionFailed, to_string(t) + ": orbit is not a connected cyclic configuration");
    }
    return cfg;
}

/// Triangle count of a cyclic configuration with v >= 10, from its connection
/// set S = {+-a, +-b, +-c} mod v. Every such configuration has v triangles from
/// the reversed orbit; another v appear when some s in S has 2s in S (with
/// 3s != 0, i.e. a genuine doubling rather than s = v/3); and v/3 more appear
/// when v/3 is in S.
inline std::int64_t predict_cyclic_triangles(const CyclicTriple& t) {
    if (t.v < 10) {
        throw Error(ErrorKind::UnsupportedV, "prediction covers v >= 10; count v=" + std::to_string(t.v) + " directly");
    }
    if (auto defect = triple_defect(t); !defect.empty()) {
        throw Error(ErrorKind::InvalidTriple, to_string(t) + ": " + defect);
    }
    if (!is_connected_triple(t)) throw Error(ErrorKind::Disconnected, to_string(t) + ": gcd(a, b, c) > 1");

    const int v = t.v;
    const std::array<int, 6> s{t.a, v - t.a, t.b, v - t.b, t.c, v - t.c};
    auto in_s = [&s](int x) { return std::find(s.begin(), s.end(), x) != s.end(); };

    bool doubling = false;
    for (int x : s) {
        if ((3 * x) % v != 0 && in_s((2 * x) % v)) doubling = true;
    }
    const bool third = v % 3 == 0 && in_s(v / 3);
    if (doubling && third) {
        throw Error(ErrorKind::PostconditionFailed, to_string(t) + ": doubling and v/3 conditions both hold");
    }
    return v + (doubling ? v : 0) + (third ? v / 3 : 0);
}

enum class CyclicEquivalence {
    /// <a,b,c> ~ <b,c,a> ~ <c,a,b> and <a,b,c> ~ <c,b,a>
    RotationReversal,
    /// additionally merge triples whose configurations are isomorphic
    Isomorphism,
};

/// Valid connected triples for v, one per class, each the lexicographically
/// least member of its class; sorted.
inline std::vector<CyclicTriple> enumerate_cyclic(int v,
                                                  CyclicEquivalence equivalence = CyclicEquivalence::RotationReversal) {
    std::vector<CyclicTriple> out;
    for (int a = 1; a <= v - 2; ++a) {
        for (int b = 1; a + b <= v - 1; ++b) {
            const CyclicTriple t{v, a, b, v - a - b};
            if (!triple_defect(t).empty() || !is_connected_triple(t)) continue;
            const std::array<CyclicTriple, 6> members{{{v, t.a, t.b, t.c},
                                                       {v, t.b, t.c, t.a},
                                                       {v, t.c, t.a, t.b},
                                                       {v, t.c, t.b, t.a},
                                                       {v, t.b, t.a, t.c},
                                                       {v, t.a, t.c, t.b}}};
            if (*std::min_element(members.begin(), members.end()) == t) out.push_back(t);
        }
    }
    if (equivalence == CyclicEquivalence::Isomorphism) {
        std::vector<CanonicalForm> seen;
        std::vector<CyclicTriple> kept;
        for (const auto& t : out) {
            auto form = canonical_form(cyclic_configuration(t));
            if (std::find(seen.begin(), seen.end(), form) == seen.end()) {
                seen.push_back(std::move(form));
                kept.push_back(t);
            }
        }
        out = std::move(kept);
    }
    return out;
}

/// Direct triangle counts of every representative for v >= 10, grouped by count.
/// Throws PostconditionFailed if a direct count disagrees with the prediction.
inline std::map<std::int64_t, std::vector<CyclicTriple>> classify_cyclic(int v) {
    if (v < 10) throw Error(ErrorKind::UnsupportedV, "classification covers v >= 10");
    std::map<std::int64_t, std::vector<CyclicTriple>> out;
    for (const auto& t : enumerate_cyclic(v)) {
        const auto direct = count_triangles(cyclic_configuration(t));
        if (direct != predict_cyclic_triangles(t)) {
            throw Error(ErrorKind::PostconditionFailed, to_string(t) + ": direct count " + std::to_string(direct) +
                                                            " disagrees with prediction");
        }
        out[direct].push_back(t);
    }
    return out;
}

} // namespace v3conf
