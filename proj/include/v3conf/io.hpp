#pragma once

#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "v3conf/configuration.hpp"

namespace v3conf {

// Compact format: one token per block, three symbols per token, drawn from
// 0-9 a-z A-Z. A symbol's alphabet position is its point id.

inline constexpr int kCompactAlphabetSize = 62;

constexpr int symbol_to_point(char c) noexcept {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    if (c >= 'A' && c <= 'Z') return 36 + (c - 'A');
    return -1;
}

constexpr char point_to_symbol(int p) noexcept {
    if (p < 10) return static_cast<char>('0' + p);
    if (p < 36) return static_cast<char>('a' + (p - 10));
    return static_cast<char>('A' + (p - 36));
}

/// Tokenizes without checking any axiom. Used where an invalid candidate must
/// still be inspected (the `verify` subcommand).
inline std::vector<Block> parse_compact_blocks(std::string_view text) {
    std::vector<Block> blocks;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token.size() != 3) {
            throw Error(ErrorKind::TokenLength, "token '" + token + "' does not have exactly 3 symbols");
        }
        Block b{};
        for (std::size_t i = 0; i < 3; ++i) {
            b[i] = symbol_to_point(token[i]);
            if (b[i] < 0) {
                throw Error(ErrorKind::UnknownSymbol,
                            std::string("symbol '") + token[i] + "' in token '" + token + "'");
            }
        }
        blocks.push_back(b);
    }
    return blocks;
}

inline Configuration parse_compact(std::string_view text) {
    auto blocks = parse_compact_blocks(text);

    ValidationReport structural;
    detail::check_structure(blocks, 0, false, structural);
    if (!structural.valid()) throw ValidationError(std::move(structural));

    std::set<int> symbols;
    for (const Block& b : blocks) symbols.insert(b.begin(), b.end());
    if (symbols.size() != blocks.size()) {
        throw Error(ErrorKind::PointCountMismatch, std::to_string(symbols.size()) + " distinct symbols but " +
                                                       std::to_string(blocks.size()) + " blocks");
    }
    const int v = static_cast<int>(blocks.size());
    return Configuration::from_blocks(v, std::move(blocks));
}

inline std::string format_compact(const Configuration& cfg) {
    if (cfg.v() > kCompactAlphabetSize) {
        throw Error(ErrorKind::TooManyPoints,
                    std::to_string(cfg.v()) + " points exceed the compact alphabet; use JSON");
    }
    std::string out;
    out.reserve(cfg.blocks().size() * 4);
    for (const Block& b : cfg.blocks()) {
        if (!out.empty()) out += ' ';
        for (int p : b) out += point_to_symbol(p);
    }
    return out;
}

// JSON format: {"v": int, "blocks": [[int,int,int], ...]}

inline nlohmann::json to_json(const Configuration& cfg) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const Block& b : cfg.blocks()) blocks.push_back({b[0], b[1], b[2]});
    return {{"v", cfg.v()}, {"blocks", std::move(blocks)}};
}

/// Reads the JSON object form without checking axioms.
inline std::pair<int, std::vector<Block>> json_candidate(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("v") || !j.contains("blocks") || !j["v"].is_number_integer() ||
        !j["blocks"].is_array()) {
        throw Error(ErrorKind::MalformedJson, "expected {\"v\": int, \"blocks\": [[int,int,int], ...]}");
    }
    std::vector<Block> blocks;
    for (const auto& entry : j["blocks"]) {
        if (!entry.is_array() || entry.size() != 3) {
            throw Error(ErrorKind::MalformedJson, "every block must be an array of three integers");
        }
        Block b{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (!entry[i].is_number_integer()) {
                throw Error(ErrorKind::MalformedJson, "every block must be an array of three integers");
            }
            b[i] = entry[i].get<int>();
        }
        blocks.push_back(b);
    }
    return {j["v"].get<int>(), std::move(blocks)};
}

inline Configuration from_json(const nlohmann::json& j) {
    auto [v, blocks] = json_candidate(j);
    return Configuration::from_blocks(v, std::move(blocks));
}

enum class InputFormat { Auto, Compact, Json };

inline InputFormat detect_format(std::string_view text) noexcept {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? InputFormat::Json : InputFormat::Compact;
    }
    return InputFormat::Compact;
}

/// Unvalidated candidate in either format; the point count of a compact
/// candidate is its token count.
inline std::pair<int, std::vector<Block>> read_candidate(std::string_view text,
                                                         InputFormat format = InputFormat::Auto) {
    if (format == InputFormat::Auto) format = detect_format(text);
    if (format == InputFormat::Json) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorKind::MalformedJson, e.what());
        }
        return json_candidate(j);
    }
    auto blocks = parse_compact_blocks(text);
    const int v = static_cast<int>(blocks.size());
    return {v, std::move(blocks)};
}

inline Configuration read_configuration(std::string_view text, InputFormat format = InputFormat::Auto) {
    if (format == InputFormat::Auto) format = detect_format(text);
    if (format == InputFormat::Compact) return parse_compact(text);
    auto [v, blocks] = read_candidate(text, format);
    return Configuration::from_blocks(v, std::move(blocks));
}

} // namespace v3conf
