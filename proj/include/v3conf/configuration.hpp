#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "v3conf/error.hpp"

namespace v3conf {

/// Three point ids. Inside a Configuration the ids are kept ascending.
using Block = std::array<int, 3>;

inline Block sorted_block(Block b) noexcept {
    std::sort(b.begin(), b.end());
    return b;
}

enum class Rule { BlockSize, PointDegree, PairOnce, Range };

constexpr const char* to_string(Rule rule) noexcept {
    switch (rule) {
    case Rule::BlockSize: return "BlockSize";
    case Rule::PointDegree: return "PointDegree";
    case Rule::PairOnce: return "PairOnce";
    case Rule::Range: return "Range";
    }
    return "?";
}

/// One broken axiom. The meaning of `ids` depends on the rule:
///   BlockSize   -> {block index}
///   PointDegree -> {point, observed degree}
///   PairOnce    -> {p, q} with p < q
///   Range       -> {block index, offending id}  (or {v} when v itself is not positive)
struct Violation {
    Rule rule;
    std::vector<int> ids;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }
    bool has(Rule rule) const noexcept {
        return std::any_of(violations.begin(), violations.end(),
                           [rule](const Violation& x) { return x.rule == rule; });
    }
    std::size_t count(Rule rule) const noexcept {
        return static_cast<std::size_t>(std::count_if(
            violations.begin(), violations.end(), [rule](const Violation& x) { return x.rule == rule; }));
    }
    std::string summary() const {
        std::string out;
        for (const auto& violation : violations) {
            if (!out.empty()) out += "; ";
            out += to_string(violation.rule);
            out += '(';
            for (std::size_t i = 0; i < violation.ids.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(violation.ids[i]);
            }
            out += ')';
        }
        return out;
    }
};

namespace detail {

// Range, BlockSize and PairOnce. Split from the degree check because the compact
// parser needs these before the point count is known.
inline void check_structure(std::span<const Block> blocks, int v, bool check_range,
                            ValidationReport& report) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(blocks.size() * 3);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& raw = blocks[i];
        bool in_range = true;
        if (check_range) {
            for (int p : raw) {
                if (p < 0 || p >= v) {
                    report.violations.push_back({Rule::Range, {static_cast<int>(i), p}});
                    in_range = false;
                }
            }
        }
        const Block b = sorted_block(raw);
        if (b[0] == b[1] || b[1] == b[2]) {
            report.violations.push_back({Rule::BlockSize, {static_cast<int>(i)}});
            continue;
        }
        if (!in_range) continue;
        pairs.emplace_back(b[0], b[1]);
        pairs.emplace_back(b[0], b[2]);
        pairs.emplace_back(b[1], b[2]);
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i] == pairs[i - 1] && (i + 1 == pairs.size() || pairs[i + 1] != pairs[i])) {
            report.violations.push_back({Rule::PairOnce, {pairs[i].first, pairs[i].second}});
        }
    }
}

inline void check_degrees(std::span<const Block> blocks, int v, ValidationReport& report) {
    std::vector<int> degree(static_cast<std::size_t>(std::max(v, 0)), 0);
    for (const Block& raw : blocks) {
        const Block b = sorted_block(raw);
        for (std::size_t j = 0; j < 3; ++j) {
            if (j > 0 && b[j] == b[j - 1]) continue;
            if (b[j] >= 0 && b[j] < v) ++degree[static_cast<std::size_t>(b[j])];
        }
    }
    for (int p = 0; p < v; ++p) {
        if (degree[static_cast<std::size_t>(p)] != 3) {
            report.violations.push_back({Rule::PointDegree, {p, degree[static_cast<std::size_t>(p)]}});
        }
    }
}

} // namespace detail

/// Checks a candidate against the axioms of a symmetric configuration v_3 and
/// reports every violation found.
inline ValidationReport validate(int v, std::span<const Block> blocks) {
    ValidationReport report;
    if (v <= 0) {
        report.violations.push_back({Rule::Range, {v}});
        return report;
    }
    detail::check_structure(blocks, v, true, report);
    detail::check_degrees(blocks, v, report);
    return report;
}

class ValidationError : public Error {
public:
    explicit ValidationError(ValidationReport report)
        : Error(ErrorKind::ValidationFailed, report.summary()), report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// A symmetric configuration v_3. Immutable once built; construction validates.
class Configuration {
public:
    static Configuration from_blocks(int v, std::vector<Block> blocks) {
        auto report = validate(v, blocks);
        if (!report.valid()) throw ValidationError(std::move(report));
        return Configuration(v, std::move(blocks));
    }

    int v() const noexcept { return v_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    const Block& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }

    /// Indices of the three blocks containing `point`, ascending.
    const std::array<int, 3>& blocks_through(int point) const {
        return point_blocks_[static_cast<std::size_t>(point)];
    }

    std::vector<Block> sorted_blocks() const {
        auto out = blocks_;
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Multiset equality of blocks; block order is not significant.
    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.v_ == b.v_ && a.sorted_blocks() == b.sorted_blocks();
    }

private:
    Configuration(int v, std::vector<Block> blocks) : v_(v), blocks_(std::move(blocks)) {
        for (auto& b : blocks_) b = sorted_block(b);
        point_blocks_.assign(static_cast<std::size_t>(v_), {-1, -1, -1});
        std::vector<int> fill(static_cast<std::size_t>(v_), 0);
        for (int i = 0; i < v_; ++i) {
            for (int p : blocks_[static_cast<std::size_t>(i)]) {
                auto& slot = fill[static_cast<std::size_t>(p)];
                point_blocks_[static_cast<std::size_t>(p)][static_cast<std::size_t>(slot++)] = i;
            }
        }
    }

    int v_;
    std::vector<Block> blocks_;
    std::vector<std::array<int, 3>> point_blocks_;
};

/// True iff the Levi graph is connected, i.e. the configuration is indecomposable.
inline bool is_connected(int v, std::span<const Block> blocks) {
    if (v <= 0) return false;
    std::vector<int> parent(static_cast<std::size_t>(v));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& px = parent[static_cast<std::size_t>(x)];
            px = parent[static_cast<std::size_t>(px)];
            x = px;
        }
        return x;
    };
    int components = v;
    for (const Block& b : blocks) {
        for (std::size_t j = 1; j < 3; ++j) {
            const int r0 = find(b[0]);
            const int rj = find(b[j]);
            if (r0 != rj) {
                parent[static_cast<std::size_t>(rj)] = r0;
                --components;
            }
        }
    }
    return components == 1;
}

inline bool is_connected(const Configuration& cfg) { return is_connected(cfg.v(), cfg.blocks()); }

/// Disjoint union with the second configuration's points shifted past the first's.
inline Configuration disjoint_union(const Configuration& a, const Configuration& b) {
    std::vector<Block> blocks = a.blocks();
    for (Block x : b.blocks()) {
        for (int& p : x) p += a.v();
        blocks.push_back(x);
    }
    return Configuration::from_blocks(a.v() + b.v(), std::move(blocks));
}

/// Applies the point relabeling `perm` (old id -> new id).
inline Configuration relabel(const Configuration& cfg, std::span<const int> perm) {
    std::vector<Block> blocks;
    blocks.reserve(cfg.blocks().size());
    for (const Block& b : cfg.blocks()) {
        blocks.push_back({perm[static_cast<std::size_t>(b[0])], perm[static_cast<std::size_t>(b[1])],
                          perm[static_cast<std::size_t>(b[2])]});
    }
    return Configuration::from_blocks(cfg.v(), std::move(blocks));
}

} // namespace v3conf
