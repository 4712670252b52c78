#pragma once

#include <splitlab/instance.hpp>

namespace splitlab {

/// A solver's answer for one subproblem: the tree, its cost, and the keys it resolves.
template <class Tree>
struct SolveResult {
    Cost cost = 0;
    Tree tree;
    /// Equality keys (GBST) or leaf keys (2WCST) present in `tree`.
    KeySet used_keys;
    /// Sum of weights over `used_keys`.
    Weight weight = 0;
};

/// Addresses one (interval, hole count) subproblem of a dynamic program.
struct CellKey {
    Interval interval;
    int holes = 0;
    friend bool operator==(const CellKey&, const CellKey&) = default;
};

} // namespace splitlab
