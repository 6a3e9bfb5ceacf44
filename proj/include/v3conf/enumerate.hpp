#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "v3conf/canonical.hpp"
#include "v3conf/census.hpp"
#include "v3conf/configuration.hpp"

namespace v3conf {

struct EnumerationOptions {
    bool connected_only = true;
    /// Worker threads; output is identical for every value.
    unsigned threads = 1;
};

namespace detail {

// Orderly generation of v_3 configurations.
//
// Blocks are added in increasing lexicographic order. A partial block list is
// only extended if it is the least image of itself under point relabelings;
// since every prefix of a least complete list is least, each isomorphism class
// is produced exactly once, as its canonical list, in lexicographic order.
//
// Cheap necessary conditions come first: a block's smallest point is the
// smallest point still below degree 3 (no later block can reach it), and
// unused points enter in order of first use.
class OrderlyGenerator {
public:
    using Sink = std::function<void(std::vector<Block>)>;

    OrderlyGenerator(int v, bool connected_only) : v_(v), connected_only_(connected_only) {
        degree_.assign(static_cast<std::size_t>(v_), 0);
        covered_.assign(static_cast<std::size_t>(v_), 0);
    }

    /// Runs the search from `prefix` (itself canonical and consistent).
    /// When `stop_depth` is reached the partial list goes to `sink` instead.
    void run(const std::vector<Block>& prefix, std::size_t stop_depth, const Sink& sink) {
        reset();
        for (const Block& b : prefix) push(b);
        sink_ = &sink;
        stop_depth_ = stop_depth;
        descend();
    }

private:
    void reset() {
        std::fill(degree_.begin(), degree_.end(), 0);
        std::fill(covered_.begin(), covered_.end(), 0);
        blocks_.clear();
        used_ = 0;
    }

    void cover(int a, int b, bool on) {
        const auto bit_b = std::uint64_t{1} << b;
        const auto bit_a = std::uint64_t{1} << a;
        if (on) {
            covered_[static_cast<std::size_t>(a)] |= bit_b;
            covered_[static_cast<std::size_t>(b)] |= bit_a;
        } else {
            covered_[static_cast<std::size_t>(a)] &= ~bit_b;
            covered_[static_cast<std::size_t>(b)] &= ~bit_a;
        }
    }

    void push(const Block& b) {
        blocks_.push_back(b);
        for (int p : b) {
            ++degree_[static_cast<std::size_t>(p)];
            used_ = std::max(used_, p + 1);
        }
        cover(b[0], b[1], true);
        cover(b[0], b[2], true);
        cover(b[1], b[2], true);
    }

    void pop(int used_before) {
        const Block b = blocks_.back();
        blocks_.pop_back();
        for (int p : b) --degree_[static_cast<std::size_t>(p)];
        cover(b[0], b[1], false);
        cover(b[0], b[2], false);
        cover(b[1], b[2], false);
        used_ = used_before;
    }

    bool covered(int a, int b) const {
        return (covered_[static_cast<std::size_t>(a)] >> b) & 1U;
    }

    bool canonical() const {
        MinImageSearch search(v_, blocks_);
        return search.is_minimal(blocks_);
    }

    void descend() {
        const auto depth = blocks_.size();
        if (depth == static_cast<std::size_t>(v_)) {
            if (!connected_only_ || is_connected(v_, blocks_)) (*sink_)(blocks_);
            return;
        }
        if (depth == stop_depth_) {
            (*sink_)(blocks_);
            return;
        }

        int p = 0;
        while (p < v_ && degree_[static_cast<std::size_t>(p)] == 3) ++p;
        if (p >= v_) return;
        // Every used point saturated: the blocks so far form a component.
        if (connected_only_ && depth > 0 && p >= used_) return;
        if (p > used_) return;

        const int used_before = used_;
        const std::optional<Block> last = blocks_.empty() ? std::nullopt : std::optional<Block>(blocks_.back());
        const int q_limit = std::min(v_ - 1, used_ + (p == used_ ? 1 : 0));
        for (int q = p + 1; q <= q_limit; ++q) {
            if (degree_[static_cast<std::size_t>(q)] == 3 || covered(p, q)) continue;
            const int after_q = std::max(used_, std::max(p, q) + 1);
            const int r_limit = std::min(v_ - 1, after_q);
            for (int r = q + 1; r <= r_limit; ++r) {
                if (degree_[static_cast<std::size_t>(r)] == 3 || covered(p, r) || covered(q, r)) continue;
                const Block b{p, q, r};
                if (last && !(*last < b)) continue;
                push(b);
                if (canonical()) descend();
                pop(used_before);
            }
        }
    }

    int v_;
    bool connected_only_;
    std::vector<int> degree_;
    std::vector<std::uint64_t> covered_;
    std::vector<Block> blocks_;
    int used_ = 0;
    const Sink* sink_ = nullptr;
    std::size_t stop_depth_ = 0;
};

inline void check_enumeration_range(int v) {
    if (v < 7) throw Error(ErrorKind::VTooSmall, "no v_3 exists for v=" + std::to_string(v) + " < 7");
    if (v > 64) throw Error(ErrorKind::UnsupportedV, "enumeration supports v <= 64");
}

} // namespace detail

/// Calls `emit` once per isomorphism class of v_3, with the class's canonical
/// configuration, in lexicographic order of canonical block lists.
inline void enumerate_all(int v, const EnumerationOptions& options,
                          const std::function<void(const Configuration&)>& emit) {
    detail::check_enumeration_range(v);
    const auto to_config = [v](std::vector<Block> blocks) { return Configuration::from_blocks(v, std::move(blocks)); };

    if (options.threads <= 1) {
        detail::OrderlyGenerator gen(v, options.connected_only);
        const detail::OrderlyGenerator::Sink sink = [&](std::vector<Block> blocks) { emit(to_config(std::move(blocks))); };
        gen.run({}, static_cast<std::size_t>(-1), sink);
        return;
    }

    // Split the tree at a fixed depth; subtrees are independent and their
    // outputs are concatenated in frontier order, which is DFS order.
    std::vector<std::vector<Block>> frontier;
    std::vector<std::vector<Block>> finished;
    std::size_t split = 4;
    {
        detail::OrderlyGenerator gen(v, options.connected_only);
        for (;; ++split) {
            frontier.clear();
            finished.clear();
            const detail::OrderlyGenerator::Sink sink = [&](std::vector<Block> blocks) {
                if (blocks.size() == static_cast<std::size_t>(v)) {
                    finished.push_back(std::move(blocks));
                } else {
                    frontier.push_back(std::move(blocks));
                }
            };
            gen.run({}, split, sink);
            if (frontier.size() >= 8 * options.threads || split + 1 >= static_cast<std::size_t>(v)) break;
        }
    }
    // Completed lists shorter than the split cannot occur (every leaf has v blocks
    // and v > split), so `finished` stays empty unless the split reached v.
    for (auto& blocks : finished) emit(to_config(std::move(blocks)));

    std::vector<std::vector<std::vector<Block>>> results(frontier.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        detail::OrderlyGenerator gen(v, options.connected_only);
        for (std::size_t i = next++; i < frontier.size(); i = next++) {
            const detail::OrderlyGenerator::Sink sink = [&](std::vector<Block> blocks) {
                results[i].push_back(std::move(blocks));
            };
            gen.run(frontier[i], static_cast<std::size_t>(-1), sink);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(worker);
    }
    for (auto& bucket : results) {
        for (auto& blocks : bucket) emit(to_config(std::move(blocks)));
    }
}

inline std::vector<Configuration> enumerate_all(int v, const EnumerationOptions& options = {}) {
    std::vector<Configuration> out;
    enumerate_all(v, options, [&out](const Configuration& cfg) { out.push_back(cfg); });
    return out;
}

struct TriangleDistribution {
    int v = 0;
    std::map<std::int64_t, std::int64_t> counts;
    std::int64_t total = 0;

    friend bool operator==(const TriangleDistribution&, const TriangleDistribution&) = default;
};

inline TriangleDistribution triangle_distribution(int v, const EnumerationOptions& options = {}) {
    TriangleDistribution dist;
    dist.v = v;
    enumerate_all(v, options, [&dist](const Configuration& cfg) {
        ++dist.counts[count_triangles(cfg)];
        ++dist.total;
    });
    return dist;
}

} // namespace v3conf
