#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace v3conf;
using v3conf::testing::fano;

namespace {

ErrorKind kind_of(std::string_view text) {
    try {
        parse_compact(text);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for '" << text << "'";
    return ErrorKind::UnsupportedV;
}

} // namespace

TEST(ParseCompact, SevenThree) {
    const auto cfg = parse_compact("012 034 056 135 146 236 245");
    EXPECT_EQ(cfg.v(), 7);
    EXPECT_EQ(cfg.block(3), (Block{1, 3, 5}));
    EXPECT_TRUE(are_isomorphic(cfg, fano()));
}

TEST(ParseCompact, FirstTriangleFreeListing) {
    const auto cfg = parse_compact("012 034 056 178 19a 2bc 2de 37b 39d 48e 4af 58c 5df 6ab 6eg 7fg 9cg");
    EXPECT_EQ(cfg.v(), 17);
    EXPECT_EQ(count_triangles(cfg), 0);
}

TEST(ParseCompact, Errors) {
    EXPECT_EQ(kind_of("012 013"), ErrorKind::ValidationFailed);
    try {
        parse_compact("012 013");
    } catch (const ValidationError& e) {
        EXPECT_TRUE(e.report().has(Rule::PairOnce));
    }
    EXPECT_EQ(kind_of("012 03"), ErrorKind::TokenLength);
    EXPECT_EQ(kind_of("012 0345"), ErrorKind::TokenLength);
    EXPECT_EQ(kind_of("012 03$"), ErrorKind::UnknownSymbol);
    EXPECT_EQ(kind_of("012 345"), ErrorKind::PointCountMismatch);
    // seven symbols, seven tokens, but degrees are wrong
    EXPECT_EQ(kind_of("012 034 056 135 146 236 456"), ErrorKind::ValidationFailed);
}

TEST(ParseCompact, UppercaseSymbols) {
    EXPECT_EQ(symbol_to_point('A'), 36);
    EXPECT_EQ(symbol_to_point('Z'), 61);
    EXPECT_EQ(point_to_symbol(61), 'Z');
    EXPECT_EQ(point_to_symbol(10), 'a');
}

TEST(FormatCompact, CyclicFano) {
    const auto cfg = cyclic_configuration({7, 1, 2, 4});
    EXPECT_EQ(format_compact(cfg), "013 124 235 346 045 156 026");
}

TEST(FormatCompact, RoundTripKeepsBlockOrder) {
    const std::string text = "012 034 056 178 19a 2bc 2de 37b 39d 48c 4af 57e 5gh 68i 6fj 9gk ahi bfg cjk dhj eik";
    EXPECT_EQ(format_compact(parse_compact(text)), text);
    EXPECT_EQ(format_compact(parse_compact("210 043 065 531 641 632 542")), "012 034 056 135 146 236 245");
}

TEST(FormatCompact, TooManyPoints) {
    const auto cfg = cyclic_configuration({63, 1, 2, 60});
    try {
        format_compact(cfg);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooManyPoints);
    }
}

TEST(FormatCompact, RoundTripProperty) {
    std::mt19937 rng(7);
    for (int v : {7, 13, 24, 40, 62}) {
        const auto triples = enumerate_cyclic(v);
        ASSERT_FALSE(triples.empty());
        const auto cfg = v3conf::testing::shuffled(cyclic_configuration(triples.back()), rng);
        const auto back = parse_compact(format_compact(cfg));
        EXPECT_EQ(back.blocks(), cfg.blocks()) << "v=" << v;
    }
}

TEST(Json, RoundTripAndAutoDetect) {
    const auto cfg = triangle_free(70).configuration;
    const std::string text = to_json(cfg).dump();
    EXPECT_EQ(detect_format("  \n" + text), InputFormat::Json);
    EXPECT_EQ(read_configuration(text).blocks(), cfg.blocks());
    EXPECT_EQ(detect_format("012 034"), InputFormat::Compact);
}

TEST(Json, Malformed) {
    for (const char* text : {"{\"v\": 7}", "{\"v\": 7, \"blocks\": [[0,1]]}", "{\"v\": \"x\", \"blocks\": []}", "{oops"}) {
        try {
            read_configuration(text);
            ADD_FAILURE() << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::MalformedJson) << text;
        }
    }
}

TEST(Json, InvalidBlocksFailValidation) {
    try {
        read_configuration(R"({"v": 4, "blocks": [[0,1,2],[0,1,3]]})");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ValidationFailed);
    }
}
