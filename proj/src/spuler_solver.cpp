#include <splitlab/spuler_solver.hpp>

#include <algorithm>
#include <numeric>

namespace splitlab {

SpulerTable::SpulerTable(Instance inst) : inst_(std::move(inst))
{
    const int n = inst_.size();
    by_weight_.resize(static_cast<std::size_t>(n));
    std::iota(by_weight_.begin(), by_weight_.end(), 1);
    std::stable_sort(by_weight_.begin(), by_weight_.end(),
                     [&](KeyIndex a, KeyIndex b) { return inst_.weight(a) < inst_.weight(b); });

    cells_.resize(static_cast<std::size_t>(n) * n * n);
    // T_= at (I, h) reads (I, h+1), so each interval is filled in decreasing h.
    for (int len = 1; len <= n; ++len)
        for (KeyIndex i = 1; i + len - 1 <= n; ++i)
            for (int h = len - 1; h >= 0; --h)
                fill({i, i + len - 1}, h);
}

std::size_t SpulerTable::index(Interval iv, int holes) const
{
    const auto n = static_cast<std::size_t>(inst_.size());
    return ((static_cast<std::size_t>(iv.i) - 1) * n + (static_cast<std::size_t>(iv.j) - 1)) * n
        + static_cast<std::size_t>(holes);
}

const SpulerCell& SpulerTable::at(Interval iv, int holes) const
{
    if (iv.empty() || iv.i < 1 || iv.j > inst_.size())
        throw std::out_of_range("interval " + to_string(iv) + " is not a non-empty sub-interval of the instance");
    if (holes < 0 || holes > iv.size() - 1)
        throw std::out_of_range("hole count " + std::to_string(holes) + " outside 0.."
                                + std::to_string(iv.size() - 1));
    return *cells_[index(iv, holes)];
}

void SpulerTable::fill(Interval iv, int holes)
{
    const KeySet in_interval = iv.keys();
    auto least_weight_outside = [&](KeySet used) {
        for (KeyIndex k : by_weight_)
            if (in_interval.contains(k) && !used.contains(k))
                return k;
        return KeyIndex{0};
    };

    if (iv.size() - holes == 1) {
        const KeyIndex e = least_weight_outside({});
        cells_[index(iv, holes)] = SpulerCell{
            {0, TwcstTree::leaf(e), KeySet{}.with(e), inst_.weight(e)},
            {SpulerCandidate::Base, e, 0, 0},
        };
        return;
    }

    std::optional<SpulerCell> best;
    if (holes + 1 <= iv.size() - 1) {
        const auto& below = cells_[index(iv, holes + 1)]->result;
        const KeyIndex e = least_weight_outside(below.used_keys);
        const Weight weight = below.weight + inst_.weight(e);
        best = SpulerCell{
            {weight + below.cost, TwcstTree::equal(e, below.tree), below.used_keys.with(e), weight},
            {SpulerCandidate::Equal, e, 0, 0},
        };
    }

    for (KeyIndex s = iv.i + 1; s <= iv.j; ++s) {
        const Interval left{iv.i, s - 1};
        const Interval right{s, iv.j};
        for (int h1 = 0; h1 <= holes; ++h1) {
            const int h2 = holes - h1;
            if (left.size() - h1 < 1 || right.size() - h2 < 1)
                continue;
            const auto& a = cells_[index(left, h1)]->result;
            const auto& b = cells_[index(right, h2)]->result;
            const Weight weight = a.weight + b.weight;
            const Cost cost = weight + a.cost + b.cost;
            if (best && cost >= best->result.cost)
                continue;
            best = SpulerCell{
                {cost, TwcstTree::less(s, a.tree, b.tree), a.used_keys | b.used_keys, weight},
                {SpulerCandidate::Less, s, h1, h2},
            };
        }
    }
    cells_[index(iv, holes)] = std::move(best);
}

std::vector<CellKey> SpulerTable::cells() const
{
    std::vector<CellKey> out;
    const int n = inst_.size();
    for (KeyIndex i = 1; i <= n; ++i)
        for (KeyIndex j = i; j <= n; ++j)
            for (int h = 0; h <= j - i; ++h)
                out.push_back({{i, j}, h});
    return out;
}

std::size_t SpulerTable::cell_count() const
{
    const auto n = static_cast<std::size_t>(inst_.size());
    std::size_t total = 0;
    for (std::size_t len = 1; len <= n; ++len)
        total += (n - len + 1) * len;
    return total;
}

SpulerTable spuler_table(const Instance& inst)
{
    return SpulerTable(inst);
}

SolveResult<TwcstTree> spuler_solve(const Instance& inst, Interval iv, int holes)
{
    if (iv.empty() || iv.i < 1 || iv.j > inst.size())
        throw std::out_of_range("interval " + to_string(iv) + " is not a non-empty sub-interval of the instance");
    if (holes < 0 || holes > iv.size() - 1)
        throw std::out_of_range("hole count " + std::to_string(holes) + " outside 0.."
                                + std::to_string(iv.size() - 1));
    return SpulerTable(inst).at(iv, holes).result;
}

} // namespace splitlab
