#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace v3conf;
using v3conf::testing::brute_force_cycles;
using v3conf::testing::fano;

namespace {

SimpleGraph cycle_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph k33() {
    SimpleGraph g(6);
    for (int a = 0; a < 3; ++a) {
        for (int b = 3; b < 6; ++b) g.add_edge(a, b);
    }
    return g;
}

std::vector<Configuration> desk_instances() {
    std::vector<Configuration> out;
    for (int v = 7; v <= 10; ++v) {
        for (auto& cfg : enumerate_all(v)) out.push_back(std::move(cfg));
    }
    out.push_back(cremona_richmond());
    out.push_back(seed_triangle_free(18, 2));
    out.push_back(heawood_chain(2));
    out.push_back(v3conf::testing::double_fano());
    out.push_back(cyclic_configuration({13, 1, 3, 9}));
    return out;
}

} // namespace

TEST(LeviGraph, FanoGivesHeawood) {
    const auto g = levi_graph(fano());
    EXPECT_EQ(g.vertex_count(), 14);
    EXPECT_EQ(g.graph.edge_count(), 21U);
    EXPECT_EQ(girth(g), Girth::of(6));
    EXPECT_TRUE(levi_invariant_failure(g).empty());
    EXPECT_EQ(count_six_cycles(g), 28);
    EXPECT_EQ(count_six_cycles(heawood_graph()), 28);
}

TEST(LeviGraph, PointsThenBlocks) {
    const auto cfg = cremona_richmond();
    const auto g = levi_graph(cfg);
    for (int i = 0; i < 15; ++i) {
        EXPECT_EQ(g.side[static_cast<std::size_t>(i)], Side::Point);
        EXPECT_EQ(g.side[static_cast<std::size_t>(15 + i)], Side::Block);
        for (int p : cfg.block(i)) EXPECT_TRUE(g.graph.has_edge(p, 15 + i));
    }
    EXPECT_FALSE(g.designated_cycle.has_value());
}

TEST(LeviGraph, CremonaRichmondIsTheEightCage) {
    const auto g = levi_graph(cremona_richmond());
    EXPECT_EQ(g.vertex_count(), 30);
    EXPECT_EQ(girth(g), Girth::of(8));
}

TEST(LeviGraph, EightThreeGivesMoebiusKantor) {
    const auto all = enumerate_all(8);
    ASSERT_EQ(all.size(), 1U);
    const auto g = levi_graph(all.front());
    EXPECT_EQ(g.vertex_count(), 16);
    EXPECT_EQ(girth(g), Girth::of(6));
    EXPECT_TRUE(is_cubic(g));
}

TEST(LeviGraph, RoundTripIsIsomorphic) {
    for (const auto& cfg : desk_instances()) {
        const auto back = configuration_from_levi(levi_graph(cfg));
        EXPECT_TRUE(are_isomorphic(back, cfg));
        EXPECT_EQ(back, cfg) << "points stay 0..v-1 in vertex order for connected inputs";
    }
}

TEST(ConfigurationFromLevi, Rejections) {
    auto kind = [](const SimpleGraph& g) {
        try {
            configuration_from_levi(g);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::PostconditionFailed;
    };
    EXPECT_EQ(kind(k33()), ErrorKind::GirthTooSmall);
    EXPECT_EQ(kind(cycle_graph(7)), ErrorKind::NotBipartite);
    EXPECT_EQ(kind(cycle_graph(10)), ErrorKind::NotCubic);
    EXPECT_EQ(kind(heawood_minus_edge()), ErrorKind::NotCubic);
    SimpleGraph star(4);
    for (int i = 1; i < 4; ++i) star.add_edge(0, i);
    EXPECT_EQ(kind(star), ErrorKind::UnequalSides);
}

TEST(IncidenceGraph, Shapes) {
    const auto complete = incidence_graph(fano());
    EXPECT_EQ(complete.edge_count(), 21U);
    const auto twice = incidence_graph(v3conf::testing::double_fano());
    EXPECT_FALSE(twice.has_edge(0, 7));
    EXPECT_EQ(twice.edge_count(), 42U);

    const CyclicTriple t{13, 1, 3, 9};
    const auto circulant = incidence_graph(cyclic_configuration(t));
    for (int i = 0; i < 13; ++i) {
        for (int j = 0; j < 13; ++j) {
            const int d = (j - i + 13) % 13;
            const bool in_s = d == 1 || d == 12 || d == 3 || d == 10 || d == 9 || d == 4;
            EXPECT_EQ(circulant.has_edge(i, j), in_s);
        }
    }
    for (const auto& cfg : desk_instances()) {
        const auto g = incidence_graph(cfg);
        for (int p = 0; p < cfg.v(); ++p) EXPECT_EQ(g.degree(p), 6);
    }
}

TEST(Girth, Basics) {
    EXPECT_EQ(girth(heawood_graph()), Girth::of(6));
    EXPECT_EQ(girth(cycle_graph(10)), Girth::of(10));
    EXPECT_EQ(girth(k33()), Girth::of(4));
    SimpleGraph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    EXPECT_TRUE(girth(path).is_infinite());
    EXPECT_EQ(to_string(girth(path)), "infinite");
}

TEST(SixCycles, HeawoodMinusEdge) {
    const auto g = heawood_minus_edge();
    EXPECT_EQ(g.degree(0), 2);
    EXPECT_EQ(g.degree(7), 2);
    EXPECT_EQ(count_six_cycles(g), 20);
    EXPECT_EQ(brute_force_cycles(g, 6), 20);
}

TEST(SixCycles, AgreesWithBruteForceAndTriangles) {
    for (const auto& cfg : desk_instances()) {
        const auto g = levi_graph(cfg);
        const auto fast = count_six_cycles(g);
        EXPECT_EQ(fast, brute_force_cycles(g, 6));
        EXPECT_EQ(fast, count_triangles(cfg));
    }
}

TEST(SixCycles, PerEdgeCounts) {
    for (const auto& cfg : desk_instances()) {
        const auto g = levi_graph(cfg);
        const auto per_edge = six_cycles_per_edge(g);
        ASSERT_EQ(per_edge.size(), g.graph.edge_count());
        std::int64_t sum = 0;
        bool all_eight = true;
        for (const auto& e : per_edge) {
            EXPECT_LE(e.cycles, 8);
            all_eight = all_eight && e.cycles == 8;
            sum += e.cycles;
        }
        EXPECT_EQ(sum, 6 * count_six_cycles(g));
        if (is_connected(cfg)) EXPECT_EQ(all_eight, cfg.v() == 7);
    }
}

TEST(SixCycles, GirthEightIffTriangleFree) {
    for (const auto& cfg : desk_instances()) {
        EXPECT_EQ(girth(levi_graph(cfg)).at_least(8), count_triangles(cfg) == 0);
    }
}

TEST(Export, Adjacency) {
    const auto text = export_adjacency(levi_graph(fano()));
    std::istringstream in(text);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string id;
        fields >> id;
        EXPECT_EQ(id, std::to_string(lines) + ":");
        int n = 0;
        int x = 0;
        while (fields >> x) ++n;
        EXPECT_EQ(n, 3);
        ++lines;
    }
    EXPECT_EQ(lines, 14);
    EXPECT_EQ(text.substr(0, text.find('\n')), "0: 7 11 13");
}

TEST(Export, Dot) {
    const auto text = export_dot(levi_graph(fano()), "fano");
    EXPECT_EQ(text.rfind("graph fano {", 0), 0U);
    EXPECT_NE(text.find("0 -- 7;"), std::string::npos);
    EXPECT_NE(text.find("[shape=box]"), std::string::npos);
    std::size_t edges = 0;
    for (std::size_t at = text.find(" -- "); at != std::string::npos; at = text.find(" -- ", at + 1)) ++edges;
    EXPECT_EQ(edges, 21U);
}
