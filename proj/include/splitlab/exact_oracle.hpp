#pragma once

#include <splitlab/gbst.hpp>
#include <splitlab/twcst.hpp>

#include <memory>
#include <stdexcept>
#include <vector>

namespace splitlab {

inline constexpr int kDefaultGbstLimit = 16;
inline constexpr int kDefaultTwcstLimit = 18;
/// Ceiling on any configured limit; the memo holds 2^|I| states per interval.
inline constexpr int kHardIntervalLimit = 24;

/// The oracle refuses intervals longer than its configured limit.
class SizeLimitError : public std::runtime_error {
public:
    SizeLimitError(int requested, int limit)
        : std::runtime_error("interval of " + std::to_string(requested) + " keys exceeds the exact-oracle limit of "
                             + std::to_string(limit)),
          requested_(requested), limit_(limit)
    {
    }
    int requested() const { return requested_; }
    int limit() const { return limit_; }

private:
    int requested_;
    int limit_;
};

template <class Tree>
struct OracleSolution {
    Cost cost;
    Tree tree;
};

template <class Tree>
struct OptStarSolution {
    Cost cost;
    Tree tree;
    HoleSet holes;
};

/// Exact minimum-cost generalized binary split trees for (I, H), by exhaustive recursion over
/// split positions s in i..j+1 and equality keys e in I \ H, memoized on (interval, H restricted
/// to the interval). One instance of this class is one solve session: the memo is shared by every
/// query made through it and is not thread-safe.
///
/// Among optimal trees the lexicographically smallest (s, e) is chosen at each node.
class GbstOracle {
public:
    /// Throws std::invalid_argument if max_interval is outside 1..kHardIntervalLimit.
    explicit GbstOracle(Instance inst, int max_interval = kDefaultGbstLimit);
    ~GbstOracle();
    GbstOracle(GbstOracle&&) noexcept;
    GbstOracle& operator=(GbstOracle&&) noexcept;

    const Instance& instance() const;
    int max_interval() const;

    /// opt(I, H). H = I gives 0. Throws SizeLimitError, std::out_of_range, std::invalid_argument.
    Cost cost(Interval iv, HoleSet holes);
    OracleSolution<GbstTree> solve(Interval iv, HoleSet holes);

    /// min over |H| = h of opt(I, H); hole sets are tried in increasing bit-pattern order and the
    /// first minimum wins.
    OptStarSolution<GbstTree> solve_star(Interval iv, int holes);

    /// opt*(I, h) for h = 0..|I|, from one sweep over all 2^|I| hole sets.
    std::vector<Cost> star_costs(Interval iv);

    std::size_t memo_states() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Exact minimum-cost two-way comparison trees for (I, H), H a proper subset of I:
/// opt = w(I \ H) + min(min over e of opt(I, H + e), min over s of opt(left) + opt(right)),
/// with a single query costing 0. With pruning on, equality tests on zero-weight queries are
/// skipped; this never changes the optimal cost.
///
/// Among optimal trees an equality root (lowest e) is preferred over a less-than root (lowest s).
class TwcstOracle {
public:
    explicit TwcstOracle(Instance inst, int max_interval = kDefaultTwcstLimit, bool prune_zero_equality = true);
    ~TwcstOracle();
    TwcstOracle(TwcstOracle&&) noexcept;
    TwcstOracle& operator=(TwcstOracle&&) noexcept;

    const Instance& instance() const;
    int max_interval() const;
    bool prunes_zero_equality() const;

    /// Throws SizeLimitError, std::out_of_range, or std::invalid_argument (H = I or H not in I).
    Cost cost(Interval iv, HoleSet holes);
    OracleSolution<TwcstTree> solve(Interval iv, HoleSet holes);

    /// Requires 0 <= holes <= |I| - 1.
    OptStarSolution<TwcstTree> solve_star(Interval iv, int holes);

    /// opt*(I, h) for h = 0..|I|-1.
    std::vector<Cost> star_costs(Interval iv);

    std::size_t memo_states() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

OracleSolution<GbstTree> gbst_opt(const Instance& inst, Interval iv, HoleSet holes);
OptStarSolution<GbstTree> gbst_opt_star(const Instance& inst, Interval iv, int holes);
OracleSolution<TwcstTree> twcst_opt(const Instance& inst, Interval iv, HoleSet holes);
OptStarSolution<TwcstTree> twcst_opt_star(const Instance& inst, Interval iv, int holes);

/// Lower bound on every split tree's cost: weights sorted descending fill the infinite binary
/// tree level by level (1 slot at depth 0, 2 at depth 1, ...), each costing weight * (depth + 1).
Cost placement_lower_bound(const Instance& inst);

/// Depth sequences d and e, 1-indexed:
///   d1 = 0, d2 = 3, dm = m + min{di + d(m-i)} for m >= 3
///   e1 = 0, e2 = 2, e3 = 6, em = m + min{di + e(m-i)} for m >= 4
/// Any set of m pairwise-separated queries has total leaf depth at least dm in any comparison
/// tree; a nearly separated set has total depth at least em.
struct DepthSeq {
    std::vector<Cost> d;
    std::vector<Cost> e;

    int size() const { return static_cast<int>(d.size()); }
    Cost d_at(int m) const { return d.at(static_cast<std::size_t>(m - 1)); }
    Cost e_at(int m) const { return e.at(static_cast<std::size_t>(m - 1)); }
};

/// Throws std::invalid_argument if m_max < 1.
DepthSeq depth_seq(int m_max);

/// Checks every separated and nearly separated set of leaf queries of `tree` with size up to
/// min(max_m, seq.size()) against the d and e bounds. Queries are separated when another query
/// of the tree lies strictly between each pair; nearly separated when dropping one makes them so.
Verdict check_depth_bounds(const TwcstTree& tree, const DepthSeq& seq, int max_m);

} // namespace splitlab
