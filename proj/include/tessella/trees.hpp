#pragma once

// Explicit black/white substitution trees spanning the {p,4} / {p+2,3}
// sectors.  Rules, children listed left to right:
//
//     W -> B W^(p-3)        B -> B W^(p-4)
//
// A tree is stored as one color vector per level.  Parents are implicit: the
// children of the i-th node of a level are a contiguous run of the next level.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sequences.hpp"

namespace tessella {

struct TreeTooLarge : Error {
    using Error::Error;
};

enum class Color : std::uint8_t { black, white };
enum class TreeKind { standard, smaller };

inline constexpr std::uint64_t default_node_cap = 10'000'000;

struct SubstitutionRules {
    int p;

    explicit SubstitutionRules(int p_) : p(p_) {
        if (p < 5) throw InvalidFamilyParams("substitution rules need p >= 5, got " + std::to_string(p));
    }

    std::vector<Color> children(Color c) const {
        std::vector<Color> out{Color::black};
        out.insert(out.end(), static_cast<std::size_t>(c == Color::white ? p - 3 : p - 4),
                   Color::white);
        return out;
    }
    int child_count(Color c) const { return c == Color::white ? p - 2 : p - 3; }
};

class SubstitutionTree {
public:
    SubstitutionTree(int p, TreeKind kind, std::vector<std::vector<Color>> levels)
        : p_(p), kind_(kind), levels_(std::move(levels)) {}

    int p() const noexcept { return p_; }
    TreeKind kind() const noexcept { return kind_; }
    int height() const noexcept { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<Color>& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }

    // Breadth-first, left to right, root = 1.
    std::uint64_t number_of(int level_index, std::size_t position) const {
        std::uint64_t before = 0;
        for (int n = 0; n < level_index; ++n) before += levels_[n].size();
        return before + position + 1;
    }

    std::uint64_t node_count() const {
        std::uint64_t total = 0;
        for (const auto& l : levels_) total += l.size();
        return total;
    }

private:
    int p_;
    TreeKind kind_;
    std::vector<std::vector<Color>> levels_;
};

inline SubstitutionTree build_tree(int p, TreeKind kind, int height,
                                   std::uint64_t node_cap = default_node_cap) {
    if (height < 0) throw InvalidFamilyParams("tree height must be non-negative");
    SubstitutionRules rules(p);
    std::vector<std::vector<Color>> levels;
    levels.push_back({kind == TreeKind::standard ? Color::white : Color::black});
    std::uint64_t total = 1;
    for (int n = 1; n <= height; ++n) {
        const auto& prev = levels.back();
        std::uint64_t size = 0;
        for (Color c : prev) size += static_cast<std::uint64_t>(rules.child_count(c));
        total += size;
        if (total > node_cap)
            throw TreeTooLarge("tree p=" + std::to_string(p) + " height=" + std::to_string(height) +
                               " exceeds the node cap of " + std::to_string(node_cap));
        std::vector<Color> next;
        next.reserve(size);
        for (Color c : prev) {
            next.push_back(Color::black);
            next.insert(next.end(), static_cast<std::size_t>(rules.child_count(c) - 1), Color::white);
        }
        levels.push_back(std::move(next));
    }
    return SubstitutionTree(p, kind, std::move(levels));
}

inline std::vector<std::uint64_t> level_counts(const SubstitutionTree& tree) {
    std::vector<std::uint64_t> out;
    for (int n = 0; n <= tree.height(); ++n) out.push_back(tree.level(n).size());
    return out;
}

// First and last breadth-first number on a level: (U_{n-1} + 1, U_n).
inline std::pair<integer, integer> numbering_range(int p, int level) {
    if (level < 0) throw InvalidFamilyParams("level must be non-negative");
    auto spec = make_spec(Family::p4_standard, p);
    auto table = CumulativeTable::build(spec, level);
    integer before = level == 0 ? integer(0) : table.U[level - 1];
    return {before + 1, table.U[level]};
}

struct ColorCount {
    std::uint64_t black = 0;
    std::uint64_t white = 0;
    friend bool operator==(const ColorCount&, const ColorCount&) = default;
};

inline ColorCount color_census(const SubstitutionTree& tree, int level) {
    ColorCount out;
    for (Color c : tree.level(level)) (c == Color::black ? out.black : out.white)++;
    return out;
}

// "n: <black> <white>" per level; with colors, the level's color string is
// appended (only for heights <= 8).
inline void dump(std::ostream& out, const SubstitutionTree& tree, bool colors = false) {
    const bool show = colors && tree.height() <= 8;
    for (int n = 0; n <= tree.height(); ++n) {
        auto cc = color_census(tree, n);
        out << n << ": " << cc.black << ' ' << cc.white;
        if (show) {
            out << ' ';
            for (Color c : tree.level(n)) out << (c == Color::black ? 'B' : 'W');
        }
        out << '\n';
    }
}

}  // namespace tessella
