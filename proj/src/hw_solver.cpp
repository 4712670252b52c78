#include <splitlab/hw_solver.hpp>

#include <algorithm>
#include <numeric>

namespace splitlab {

namespace {

const SolveResult<GbstTree> kEmptyResult{};

} // namespace

HwTable::HwTable(Instance inst) : inst_(std::move(inst))
{
    const int n = inst_.size();
    by_weight_.resize(static_cast<std::size_t>(n));
    std::iota(by_weight_.begin(), by_weight_.end(), 1);
    std::stable_sort(by_weight_.begin(), by_weight_.end(),
                     [&](KeyIndex a, KeyIndex b) { return inst_.weight(a) < inst_.weight(b); });

    cells_.resize(static_cast<std::size_t>(n) * n * (n + 1));
    for (int len = 1; len <= n; ++len)
        for (KeyIndex i = 1; i + len - 1 <= n; ++i)
            for (int h = len; h >= 0; --h)
                fill({i, i + len - 1}, h);
}

std::size_t HwTable::index(Interval iv, int holes) const
{
    const auto n = static_cast<std::size_t>(inst_.size());
    return ((static_cast<std::size_t>(iv.i) - 1) * n + (static_cast<std::size_t>(iv.j) - 1)) * (n + 1)
        + static_cast<std::size_t>(holes);
}

const HwCell& HwTable::at(Interval iv, int holes) const
{
    if (iv.empty() || iv.i < 1 || iv.j > inst_.size())
        throw std::out_of_range("interval " + to_string(iv) + " is not a non-empty sub-interval of the instance");
    if (holes < 0 || holes > iv.size())
        throw std::out_of_range("hole count " + std::to_string(holes) + " outside 0.." + std::to_string(iv.size()));
    return *cells_[index(iv, holes)];
}

void HwTable::fill(Interval iv, int holes)
{
    HwCell cell;
    if (holes == iv.size()) {
        cells_[index(iv, holes)] = std::move(cell);
        return;
    }

    auto sub = [&](Interval part, int h) -> const SolveResult<GbstTree>& {
        return part.empty() ? kEmptyResult : cells_[index(part, h)]->result;
    };

    const KeySet in_interval = iv.keys();
    std::optional<Cost> best;
    for (KeyIndex s = iv.i; s <= iv.j + 1; ++s) {
        const Interval left{iv.i, s - 1};
        const Interval right{s, iv.j};
        for (int h1 = 0; h1 <= std::min(holes + 1, left.size()); ++h1) {
            const int h2 = holes + 1 - h1;
            if (h2 > right.size())
                continue;
            const auto& a = sub(left, h1);
            const auto& b = sub(right, h2);
            const KeySet used = a.used_keys | b.used_keys;

            KeyIndex e = 0;
            for (KeyIndex k : by_weight_) {
                if (in_interval.contains(k) && !used.contains(k)) {
                    e = k;
                    break;
                }
            }

            const Weight weight = a.weight + b.weight + inst_.weight(e);
            const Cost cost = weight + a.cost + b.cost;
            if (best && cost >= *best)
                continue;
            best = cost;
            const bool leaf = a.tree.empty() && b.tree.empty();
            cell.result = SolveResult<GbstTree>{
                cost,
                GbstTree::node(e, leaf ? std::nullopt : std::optional<KeyIndex>(s), a.tree, b.tree),
                used.with(e),
                weight,
            };
            cell.choice = HwChoice{s, h1, h2, e};
        }
    }
    cells_[index(iv, holes)] = std::move(cell);
}

std::vector<CellKey> HwTable::cells() const
{
    std::vector<CellKey> out;
    const int n = inst_.size();
    for (KeyIndex i = 1; i <= n; ++i)
        for (KeyIndex j = i; j <= n; ++j)
            for (int h = 0; h <= j - i + 1; ++h)
                out.push_back({{i, j}, h});
    return out;
}

std::size_t HwTable::cell_count() const
{
    const auto n = static_cast<std::size_t>(inst_.size());
    // sum over intervals of (|I| + 1)
    std::size_t total = 0;
    for (std::size_t len = 1; len <= n; ++len)
        total += (n - len + 1) * (len + 1);
    return total;
}

HwTable hw_table(const Instance& inst)
{
    return HwTable(inst);
}

SolveResult<GbstTree> hw_solve(const Instance& inst, Interval iv, int holes)
{
    if (iv.empty() || iv.i < 1 || iv.j > inst.size())
        throw std::out_of_range("interval " + to_string(iv) + " is not a non-empty sub-interval of the instance");
    if (holes < 0 || holes > iv.size())
        throw std::out_of_range("hole count " + std::to_string(holes) + " outside 0.." + std::to_string(iv.size()));
    return HwTable(inst).at(iv, holes).result;
}

} // namespace splitlab
