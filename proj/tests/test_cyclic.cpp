#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace v3conf;

namespace {

ErrorKind kind_of(const CyclicTriple& t) {
    try {
        cyclic_configuration(t);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::PostconditionFailed;
}

} // namespace

TEST(CyclicConfiguration, SmallCases) {
    const auto f = cyclic_configuration({7, 1, 2, 4});
    EXPECT_TRUE(are_isomorphic(f, v3conf::testing::fano()));
    EXPECT_EQ(count_triangles(f), 28);
    EXPECT_EQ(count_triangles(cyclic_configuration({8, 1, 2, 5})), 24);
    EXPECT_EQ(count_triangles(cyclic_configuration({9, 1, 2, 6})), 21);
}

TEST(CyclicConfiguration, StarterOrbit) {
    const auto cfg = cyclic_configuration({13, 1, 3, 9});
    EXPECT_EQ(cfg.block(0), (Block{0, 1, 4}));
    EXPECT_EQ(cfg.block(12), (Block{0, 3, 12}));
    EXPECT_TRUE(admits_cyclic_shift(cfg));
}

TEST(CyclicConfiguration, InvalidTriples) {
    EXPECT_EQ(kind_of({7, 1, 1, 5}), ErrorKind::InvalidTriple);
    EXPECT_EQ(kind_of({7, 1, 2, 5}), ErrorKind::InvalidTriple);
    EXPECT_EQ(kind_of({10, 1, 5, 4}), ErrorKind::InvalidTriple);
    EXPECT_EQ(kind_of({9, 1, 1, 7}), ErrorKind::InvalidTriple);
    EXPECT_EQ(kind_of({12, 2, 4, 6}), ErrorKind::InvalidTriple);
    EXPECT_EQ(kind_of({14, 2, 4, 8}), ErrorKind::Disconnected);
}

TEST(CyclicConfiguration, SharedFactorOrbitIsDisconnected) {
    int checked = 0;
    for (int v = 7; v <= 40; ++v) {
        for (int a = 1; a < v; ++a) {
            for (int b = 1; a + b < v; ++b) {
                const CyclicTriple t{v, a, b, v - a - b};
                if (!triple_defect(t).empty() || is_connected_triple(t)) continue;
                const auto blocks = cyclic_orbit(t);
                EXPECT_TRUE(validate(v, blocks).valid()) << to_string(t);
                EXPECT_FALSE(is_connected(v, blocks)) << to_string(t);
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(Predict, Examples) {
    EXPECT_EQ(predict_cyclic_triangles({13, 1, 3, 9}), 13);
    EXPECT_EQ(predict_cyclic_triangles({10, 1, 2, 7}), 20);
    EXPECT_EQ(predict_cyclic_triangles({12, 1, 4, 7}), 16);
    try {
        predict_cyclic_triangles({9, 1, 2, 6});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedV);
    }
}

TEST(Predict, MatchesDirectCountsUpToSixty) {
    for (int v = 10; v <= 60; ++v) {
        for (int a = 1; a < v; ++a) {
            for (int b = 1; a + b < v; ++b) {
                const CyclicTriple t{v, a, b, v - a - b};
                if (!triple_defect(t).empty() || !is_connected_triple(t)) continue;
                const auto direct = count_triangles(cyclic_configuration(t));
                ASSERT_EQ(predict_cyclic_triangles(t), direct) << to_string(t);
                const bool allowed = direct == v || direct == 2 * v || (v % 3 == 0 && 3 * direct == 4 * v);
                EXPECT_TRUE(allowed) << to_string(t);
            }
        }
    }
}

TEST(EnumerateCyclic, Representatives) {
    EXPECT_EQ(enumerate_cyclic(7), (std::vector<CyclicTriple>{{7, 1, 2, 4}}));
    const auto nine = enumerate_cyclic(9);
    EXPECT_EQ(nine, (std::vector<CyclicTriple>{{9, 1, 2, 6}, {9, 1, 3, 5}, {9, 2, 3, 4}}));
    EXPECT_EQ(enumerate_cyclic(9, CyclicEquivalence::Isomorphism).size(), 1U);
    for (int v = 7; v <= 30; ++v) {
        const auto reps = enumerate_cyclic(v);
        EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end()));
        for (const auto& t : reps) EXPECT_NO_THROW(cyclic_configuration(t));
    }
}

TEST(EnumerateCyclic, RotationAndReversalCoverEveryTriple) {
    const int v = 19;
    const auto reps = enumerate_cyclic(v);
    for (int a = 1; a < v; ++a) {
        for (int b = 1; a + b < v; ++b) {
            const CyclicTriple t{v, a, b, v - a - b};
            if (!triple_defect(t).empty() || !is_connected_triple(t)) continue;
            std::array<int, 3> key{t.a, t.b, t.c};
            std::sort(key.begin(), key.end());
            const auto hit = std::count_if(reps.begin(), reps.end(), [&](const CyclicTriple& r) {
                std::array<int, 3> rk{r.a, r.b, r.c};
                std::sort(rk.begin(), rk.end());
                return rk == key;
            });
            EXPECT_EQ(hit, 1) << to_string(t);
        }
    }
}

TEST(Classify, AllowedValues) {
    for (auto [v, allowed] : std::vector<std::pair<int, std::set<std::int64_t>>>{
             {13, {13, 26}}, {12, {12, 16, 24}}, {10, {10, 20}}}) {
        for (const auto& [t, triples] : classify_cyclic(v)) {
            EXPECT_TRUE(allowed.contains(t)) << "v=" << v << " t=" << t;
            EXPECT_FALSE(triples.empty());
        }
    }
    EXPECT_TRUE(classify_cyclic(12).contains(16));
}
