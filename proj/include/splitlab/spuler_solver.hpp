#pragma once

#include <splitlab/solve_result.hpp>
#include <splitlab/twcst.hpp>

#include <optional>
#include <vector>

namespace splitlab {

enum class SpulerCandidate { Base, Equal, Less };

struct SpulerChoice {
    SpulerCandidate kind = SpulerCandidate::Base;
    /// Equality key for Equal, split key (first key of the right side) for Less.
    KeyIndex key = 0;
    int left_holes = 0;
    int right_holes = 0;
};

struct SpulerCell {
    SolveResult<TwcstTree> result;
    SpulerChoice choice;
};

/// Every (interval, holes) cell of Spuler's two-way comparison tree dynamic program,
/// 0 <= holes <= |I| - 1.
///
/// Base case |I| - h = 1: a single leaf holding the least-weight key of I.
/// Otherwise the candidates are
///  - an equality root on e, the least-weight key of I that is not a leaf of cell (I, h+1),
///    with that cell as the no-branch (only when h + 1 <= |I| - 1);
///  - for every split key s and h1 + h2 = h with s - i - h1 >= 1 and j - s + 1 - h2 >= 1,
///    a less-than root on s over cells ([i, s-1], h1) and ([s, j], h2).
/// Ties prefer the equality candidate, then the lowest s, then the lowest h1.
class SpulerTable {
public:
    explicit SpulerTable(Instance inst);

    const Instance& instance() const { return inst_; }

    /// Throws std::out_of_range for a bad interval or holes outside 0..|I|-1.
    const SpulerCell& at(Interval iv, int holes) const;

    std::vector<CellKey> cells() const;
    std::size_t cell_count() const;

private:
    std::size_t index(Interval iv, int holes) const;
    void fill(Interval iv, int holes);

    Instance inst_;
    std::vector<KeyIndex> by_weight_;
    std::vector<std::optional<SpulerCell>> cells_;
};

SpulerTable spuler_table(const Instance& inst);

/// Throws std::out_of_range when holes is outside 0..|I|-1 or I is not a non-empty sub-interval.
SolveResult<TwcstTree> spuler_solve(const Instance& inst, Interval iv, int holes);

} // namespace splitlab
