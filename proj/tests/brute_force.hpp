#pragma once

// Exhaustive tree enumeration for tiny instances. Costs come from the tree evaluators, so these
// minima do not share any recurrence with the exact oracles.

#include <splitlab/gbst.hpp>
#include <splitlab/twcst.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

namespace brute {

using namespace splitlab;

inline std::vector<GbstTree> all_gbst(const Instance& inst, const std::vector<KeyIndex>& queries)
{
    if (queries.empty())
        return {GbstTree{}};
    std::vector<GbstTree> out;
    for (std::size_t e = 0; e < queries.size(); ++e) {
        std::vector<KeyIndex> rest;
        for (std::size_t k = 0; k < queries.size(); ++k)
            if (k != e)
                rest.push_back(queries[k]);
        if (rest.empty()) {
            out.push_back(GbstTree::leaf(queries[e]));
            continue;
        }
        for (std::size_t cut = 0; cut <= rest.size(); ++cut) {
            const std::vector<KeyIndex> left(rest.begin(), rest.begin() + static_cast<long>(cut));
            const std::vector<KeyIndex> right(rest.begin() + static_cast<long>(cut), rest.end());
            const KeyIndex split = cut < rest.size() ? rest[cut] : inst.size() + 1;
            for (const auto& l : all_gbst(inst, left))
                for (const auto& r : all_gbst(inst, right))
                    out.push_back(GbstTree::node(queries[e], split, l, r));
        }
    }
    return out;
}

inline std::vector<TwcstTree> all_twcst(const std::vector<KeyIndex>& queries)
{
    if (queries.size() == 1)
        return {TwcstTree::leaf(queries.front())};
    std::vector<TwcstTree> out;
    for (std::size_t e = 0; e < queries.size(); ++e) {
        std::vector<KeyIndex> rest;
        for (std::size_t k = 0; k < queries.size(); ++k)
            if (k != e)
                rest.push_back(queries[k]);
        for (const auto& no : all_twcst(rest))
            out.push_back(TwcstTree::equal(queries[e], no));
    }
    for (std::size_t cut = 1; cut < queries.size(); ++cut) {
        const std::vector<KeyIndex> yes(queries.begin(), queries.begin() + static_cast<long>(cut));
        const std::vector<KeyIndex> no(queries.begin() + static_cast<long>(cut), queries.end());
        for (const auto& y : all_twcst(yes))
            for (const auto& n : all_twcst(no))
                out.push_back(TwcstTree::less(queries[cut], y, n));
    }
    return out;
}

inline Cost min_gbst_cost(const Instance& inst, Interval iv, HoleSet holes)
{
    Cost best = std::numeric_limits<Cost>::max();
    for (const auto& t : all_gbst(inst, (iv.keys() - holes).members()))
        best = std::min(best, gbst_cost(t, inst));
    return best;
}

inline Cost min_twcst_cost(const Instance& inst, Interval iv, HoleSet holes)
{
    Cost best = std::numeric_limits<Cost>::max();
    for (const auto& t : all_twcst((iv.keys() - holes).members()))
        best = std::min(best, twcst_cost(t, inst));
    return best;
}

/// Hole sets of the given size inside `iv`.
inline std::vector<HoleSet> hole_sets(Interval iv, int size)
{
    std::vector<HoleSet> out;
    const auto keys = iv.keys().members();
    const int n = static_cast<int>(keys.size());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (std::popcount(m) != size)
            continue;
        HoleSet h;
        for (int b = 0; b < n; ++b)
            if ((m >> b) & 1u)
                h = h.with(keys[static_cast<std::size_t>(b)]);
        out.push_back(h);
    }
    return out;
}

} // namespace brute
