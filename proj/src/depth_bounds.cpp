#include <splitlab/exact_oracle.hpp>

#include <algorithm>
#include <functional>
#include <limits>

namespace splitlab {

Cost placement_lower_bound(const Instance& inst)
{
    std::vector<Weight> w(inst.weights().begin(), inst.weights().end());
    std::sort(w.begin(), w.end(), std::greater<>());
    Cost total = 0;
    Cost depth = 0;
    std::size_t level_end = 1; // slots 0..level_end-1 are at depth <= `depth`
    for (std::size_t slot = 0; slot < w.size(); ++slot) {
        if (slot == level_end) {
            ++depth;
            level_end = 2 * level_end + 1;
        }
        total += w[slot] * (depth + 1);
    }
    return total;
}

DepthSeq depth_seq(int m_max)
{
    if (m_max < 1)
        throw std::invalid_argument("depth sequence needs m_max >= 1");
    DepthSeq seq;
    auto& d = seq.d;
    auto& e = seq.e;
    for (int m = 1; m <= m_max; ++m) {
        Cost dm = 0, em = 0;
        if (m == 1) {
            dm = 0;
            em = 0;
        } else if (m == 2) {
            dm = 3;
            em = 2;
        } else {
            dm = std::numeric_limits<Cost>::max();
            for (int i = 1; i < m; ++i)
                dm = std::min(dm, d[static_cast<std::size_t>(i - 1)] + d[static_cast<std::size_t>(m - i - 1)]);
            dm += m;
            if (m == 3) {
                em = 6;
            } else {
                em = std::numeric_limits<Cost>::max();
                for (int i = 1; i < m; ++i)
                    em = std::min(em, d[static_cast<std::size_t>(i - 1)] + e[static_cast<std::size_t>(m - i - 1)]);
                em += m;
            }
        }
        d.push_back(dm);
        e.push_back(em);
    }
    return seq;
}

namespace {

// Q (positions into the sorted query list) is separated iff no two chosen positions are adjacent.
bool separated(const std::vector<int>& positions)
{
    for (std::size_t a = 1; a < positions.size(); ++a)
        if (positions[a] == positions[a - 1] + 1)
            return false;
    return true;
}

// Some f can be dropped so that every remaining consecutive pair has a query outside Q between
// them. Letting f itself act as the separator would make any three adjacent queries qualify,
// and those can sit at total depth 5 < e3.
bool nearly_separated(const std::vector<int>& positions)
{
    for (std::size_t skip = 0; skip < positions.size(); ++skip) {
        bool ok = true;
        int prev = -1;
        for (std::size_t a = 0; a < positions.size() && ok; ++a) {
            if (a == skip)
                continue;
            if (prev >= 0) {
                const int f = positions[skip];
                const int outside = positions[a] - prev - 1 - (f > prev && f < positions[a] ? 1 : 0);
                ok = outside > 0;
            }
            prev = positions[a];
        }
        if (ok)
            return true;
    }
    return false;
}

} // namespace

Verdict check_depth_bounds(const TwcstTree& tree, const DepthSeq& seq, int max_m)
{
    Verdict v;
    const auto queries = tree.leaf_keys().members();
    std::vector<Cost> depth;
    for (KeyIndex q : queries)
        depth.push_back(twcst_leaf_depth(tree, q));

    const int r = static_cast<int>(queries.size());
    const int limit = std::min({max_m, seq.size(), r});
    std::vector<int> chosen;
    std::function<void(int, Cost)> walk = [&](int next, Cost total) {
        const int m = static_cast<int>(chosen.size());
        if (m > 0) {
            if (separated(chosen) && total < seq.d_at(m))
                v.violations.push_back("separated set of " + std::to_string(m) + " queries has total depth "
                                       + std::to_string(total) + " < d=" + std::to_string(seq.d_at(m)));
            else if (nearly_separated(chosen) && total < seq.e_at(m))
                v.violations.push_back("nearly separated set of " + std::to_string(m) + " queries has total depth "
                                       + std::to_string(total) + " < e=" + std::to_string(seq.e_at(m)));
        }
        if (m == limit)
            return;
        for (int p = next; p < r; ++p) {
            chosen.push_back(p);
            walk(p + 1, total + depth[static_cast<std::size_t>(p)]);
            chosen.pop_back();
        }
    };
    walk(0, 0);
    return v;
}

} // namespace splitlab
