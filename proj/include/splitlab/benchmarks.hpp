#pragma once

#include <splitlab/gbst.hpp>
#include <splitlab/report.hpp>
#include <splitlab/twcst.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace splitlab {

/// A fixed benchmark instance with the subproblem it is usually solved at.
struct NamedInstance {
    std::string name;
    Instance instance;
    Interval interval;
    int holes = 0;
    std::map<Weight, int> weight_multiset;
    Weight weight_sum = 0;
};

/// "fig1", "I9", "I31", "I8", "I15".
std::vector<std::string> benchmark_names();

/// Throws std::invalid_argument for an unknown name and std::logic_error if the built
/// instance does not match its recorded weight multiset and sum.
NamedInstance build_instance(std::string_view name);

/// Prefix I_l of the fifteen-key comparison instance: 7, then alternating 5, 0, ending with 7 at key 15.
Instance comparison_prefix(int length);

/// Number of positive-weight keys in comparison_prefix(length) for length <= 14: 1 + floor(length / 2).
int positive_key_count(int length);

template <class Tree>
struct Witness {
    std::string name;
    Tree tree;
    Interval interval;
    HoleSet holes;
};

// Split trees. Key indices refer to build_instance("fig1"), ("I9") or ("I31").

Witness<GbstTree> six_key_example();
/// The nine-key subtree Huang-Wong picks for ([A1,E0], 2): holes {A3, B4}.
Witness<GbstTree> nine_key_heavy_subtree();
/// Costlier by one but lighter by two: holes {A3, D1}.
Witness<GbstTree> nine_key_light_subtree();
/// `outer` over `inner` over `subtree`, a chain through left children inside the nine-key instance.
GbstTree nine_key_context(const GbstTree& subtree, KeyIndex outer, KeyIndex inner);
/// Balanced tree over the 7 keys starting at `first` in the 31-key instance.
GbstTree seven_key_block(KeyIndex first);
/// Balanced tree over the 15 keys starting at `first`.
GbstTree fifteen_key_block(KeyIndex first);
/// The tree Huang-Wong returns for the 31-key instance (cost 1763).
Witness<GbstTree> thirty_one_key_recurrence_shape();
/// The cheaper tree (cost 1762).
Witness<GbstTree> thirty_one_key_witness();

// Comparison trees over prefixes of the fifteen-key instance (keys labeled 1..15).

Witness<TwcstTree> prefix8_heavy();
Witness<TwcstTree> prefix8_light_chain();
Witness<TwcstTree> prefix8_light_split();
Witness<TwcstTree> prefix10_heavy();
Witness<TwcstTree> prefix10_light();
/// Shape the Spuler recurrence yields for ([1,15], 2) (cost 116).
Witness<TwcstTree> fifteen_key_recurrence_shape();
/// The cheaper tree (cost 115).
Witness<TwcstTree> fifteen_key_witness();

/// Exact checks over the witness trees and their contexts.
Report verify_figures();
/// Split-tree counterexample: recurrence 1763, witness 1762, lower bound 1757, and the pieces.
Report verify_split_counterexample();
/// Comparison-tree counterexample on the fifteen-key instance.
Report verify_comparison_counterexample();
/// Depth sequences up to m_max (<= 6), the cost and weight of the prefix optima, and the depth
/// bounds on oracle-optimal trees of `trials` random instances (n <= 8, wmax <= 16).
Report verify_depth_claims(int m_max, int trials, std::uint64_t seed);

inline constexpr int kDefaultDepthTrials = 100;

/// `section` is one of figures, thm1, thm2, depth, all. Throws std::invalid_argument otherwise.
Report verify_section(std::string_view section, std::uint64_t seed);

} // namespace splitlab
