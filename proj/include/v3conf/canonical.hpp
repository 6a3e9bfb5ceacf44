#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "v3conf/configuration.hpp"

namespace v3conf {

namespace detail {

// Finds the lexicographically least sorted block list over all point relabelings,
// or decides whether a given list already is that minimum.
//
// Image blocks are produced in increasing order. With labels 0..m-1 handed out,
// an unplaced block's smallest possible image is its assigned labels followed by
// m, m+1, ...; the least image list must place the block with the smallest such
// bound next and give its unassigned points exactly those fresh labels. Every
// block attaining the bound, and every order of its fresh points, is a branch.
// Branches are cut as soon as their prefix exceeds the incumbent.
//
// A sub-list of the least list consisting of its first k blocks is itself least
// among relabelings of those k blocks, which is what the orderly enumerator needs.
class MinImageSearch {
public:
    MinImageSearch(int v, std::span<const Block> blocks)
        : v_(v), blocks_(blocks.begin(), blocks.end()) {
        for (auto& b : blocks_) b = sorted_block(b);
        label_.assign(static_cast<std::size_t>(v_), -1);
        placed_.assign(blocks_.size(), 0);
        image_.resize(blocks_.size());
        ties_.resize(blocks_.size() + 1);
    }

    /// Least image; `relabeling` receives old id -> new id for one minimizer.
    std::vector<Block> minimum(std::vector<int>* relabeling = nullptr) {
        mode_ = Mode::Minimize;
        incumbent_.clear();
        less_depth_ = kNone;
        abort_ = false;
        search(0, 0);
        if (relabeling) *relabeling = best_label_;
        return incumbent_;
    }

    /// True iff no relabeling maps the blocks to a sorted list below `target`.
    /// `target` must be the sorted block list of the same structure.
    bool is_minimal(std::span<const Block> target) {
        mode_ = Mode::Check;
        incumbent_.assign(target.begin(), target.end());
        less_depth_ = kNone;
        abort_ = false;
        search(0, 0);
        return !abort_;
    }

private:
    enum class Mode { Minimize, Check };
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    Block bound(const Block& b, int next_label, int& fresh) const {
        Block o{};
        int n = 0;
        for (int p : b) {
            const int l = label_[static_cast<std::size_t>(p)];
            if (l >= 0) o[static_cast<std::size_t>(n++)] = l;
        }
        std::sort(o.begin(), o.begin() + n);
        fresh = 3 - n;
        for (int i = 0; n < 3; ++n, ++i) o[static_cast<std::size_t>(n)] = next_label + i;
        return o;
    }

    void record_leaf() {
        if (mode_ == Mode::Check) return;
        if (incumbent_.empty() || less_depth_ != kNone) {
            incumbent_ = image_;
            best_label_ = label_;
            int next = 0;
            for (int l : label_) next = std::max(next, l + 1);
            for (auto& l : best_label_) {
                if (l < 0) l = next++;
            }
            less_depth_ = kNone;
        }
    }

    void search(std::size_t depth, int next_label) {
        if (abort_) return;
        if (depth == blocks_.size()) {
            record_leaf();
            return;
        }

        Block least{std::numeric_limits<int>::max(), 0, 0};
        auto& ties = ties_[depth];
        ties.clear();
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (placed_[i]) continue;
            int fresh = 0;
            const Block o = bound(blocks_[i], next_label, fresh);
            if (o < least) {
                least = o;
                ties.clear();
            }
            if (o == least) ties.push_back(static_cast<int>(i));
        }

        bool set_less_here = false;
        if (!incumbent_.empty() && less_depth_ == kNone) {
            const Block& ref = incumbent_[depth];
            if (least > ref) return;
            if (least < ref) {
                if (mode_ == Mode::Check) {
                    abort_ = true;
                    return;
                }
                less_depth_ = depth;
                set_less_here = true;
            }
        }
        image_[depth] = least;

        for (int bi : ties) {
            const Block& b = blocks_[static_cast<std::size_t>(bi)];
            std::array<int, 3> unassigned{};
            int f = 0;
            for (int p : b) {
                if (label_[static_cast<std::size_t>(p)] < 0) unassigned[static_cast<std::size_t>(f++)] = p;
            }
            std::sort(unassigned.begin(), unassigned.begin() + f);
            placed_[static_cast<std::size_t>(bi)] = 1;
            do {
                for (int j = 0; j < f; ++j) label_[static_cast<std::size_t>(unassigned[static_cast<std::size_t>(j)])] = next_label + j;
                search(depth + 1, next_label + f);
                for (int j = 0; j < f; ++j) label_[static_cast<std::size_t>(unassigned[static_cast<std::size_t>(j)])] = -1;
                if (abort_) break;
                // an improvement found below resets the comparison state; siblings
                // now compare equal at this depth
                if (set_less_here && less_depth_ == kNone) set_less_here = false;
            } while (std::next_permutation(unassigned.begin(), unassigned.begin() + f));
            placed_[static_cast<std::size_t>(bi)] = 0;
            if (abort_) break;
        }
        if (set_less_here && less_depth_ == depth) less_depth_ = kNone;
    }

    int v_;
    std::vector<Block> blocks_;
    std::vector<int> label_;
    std::vector<char> placed_;
    std::vector<Block> image_;
    std::vector<Block> incumbent_;
    std::vector<int> best_label_;
    std::vector<std::vector<int>> ties_;
    std::size_t less_depth_ = kNone;
    bool abort_ = false;
    Mode mode_ = Mode::Minimize;
};

inline std::uint64_t fnv1a(std::span<const Block> blocks) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const Block& b : blocks) {
        for (int p : b) {
            auto x = static_cast<std::uint32_t>(p);
            for (int i = 0; i < 4; ++i) {
                h ^= (x >> (8 * i)) & 0xffU;
                h *= 0x100000001b3ULL;
            }
        }
    }
    return h;
}

} // namespace detail

struct CanonicalForm {
    int v = 0;
    std::vector<Block> canonical_blocks;
    std::uint64_t hash = 0;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.v == b.v && a.canonical_blocks == b.canonical_blocks;
    }
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        if (auto c = a.v <=> b.v; c != 0) return c;
        return a.canonical_blocks <=> b.canonical_blocks;
    }
};

/// Canonical form: the least sorted block list over every point relabeling.
/// Exponential in the worst case; intended for desk-scale v.
inline CanonicalForm canonical_form(const Configuration& cfg) {
    detail::MinImageSearch search(cfg.v(), cfg.blocks());
    CanonicalForm form;
    form.v = cfg.v();
    form.canonical_blocks = search.minimum();
    form.hash = detail::fnv1a(form.canonical_blocks);
    return form;
}

inline Configuration canonical_configuration(const Configuration& cfg) {
    return Configuration::from_blocks(cfg.v(), canonical_form(cfg).canonical_blocks);
}

inline bool are_isomorphic(const Configuration& a, const Configuration& b) {
    if (a.v() != b.v()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace v3conf
