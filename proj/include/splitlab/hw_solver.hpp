#pragma once

#include <splitlab/gbst.hpp>
#include <splitlab/solve_result.hpp>

#include <optional>
#include <vector>

namespace splitlab {

/// Backpointer of a Huang-Wong cell: split position, hole counts of the two subtrees,
/// and the equality key chosen for the root.
struct HwChoice {
    KeyIndex split;
    int left_holes;
    int right_holes;
    KeyIndex eq_key;
};

struct HwCell {
    SolveResult<GbstTree> result;
    /// Absent for the empty-tree cells (holes == |I|).
    std::optional<HwChoice> choice;
};

/// Every (interval, holes) cell of Huang and Wong's O(n^5) dynamic program.
///
/// For (I, h) with I = [i, j] the candidates are all (s, h1, h2) with split position
/// s in i..j+1, h1 + h2 = h + 1, h1 <= s - i and h2 <= j - s + 1. A candidate takes the
/// cells ([i, s-1], h1) and ([s, j], h2) as subtrees and puts at the root the least-weight
/// key of I used by neither. The cheapest candidate wins; ties go to the lowest s, then
/// the lowest h1, and the equality key tie goes to the lowest index.
///
/// The result is always a valid tree for (I, I minus its keys), but the recurrence assumes an
/// optimal substructure that does not hold, so it is not always optimal.
class HwTable {
public:
    explicit HwTable(Instance inst);

    const Instance& instance() const { return inst_; }

    /// Throws std::out_of_range for an empty or out-of-bounds interval or holes outside 0..|I|.
    const HwCell& at(Interval iv, int holes) const;

    /// All cells, ordered by interval start, end, then hole count.
    std::vector<CellKey> cells() const;
    std::size_t cell_count() const;

private:
    std::size_t index(Interval iv, int holes) const;
    void fill(Interval iv, int holes);

    Instance inst_;
    std::vector<KeyIndex> by_weight_; // keys sorted by (weight, index)
    std::vector<std::optional<HwCell>> cells_;
};

HwTable hw_table(const Instance& inst);

/// Throws std::out_of_range when holes is outside 0..|I| or I is not a non-empty sub-interval.
SolveResult<GbstTree> hw_solve(const Instance& inst, Interval iv, int holes);

} // namespace splitlab
