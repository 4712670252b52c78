#include <splitlab/exact_oracle.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace splitlab {

namespace {

using Mask = std::uint32_t;

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
constexpr Cost kUnset = -1;

constexpr Mask low_bits(int len) { return len >= 32 ? ~Mask{0} : (Mask{1} << len) - 1; }

Cost add(Cost a, Cost b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

/// Dense memo over (interval start, interval length, hole pattern relative to the start).
/// Blocks are allocated on first touch; references into a block stay valid afterwards.
template <class Entry>
class IntervalMaskMemo {
public:
    explicit IntervalMaskMemo(int n) : n_(n), blocks_(static_cast<std::size_t>(n + 1) * (n + 1)) {}

    Entry& at(KeyIndex i, int len, Mask mask)
    {
        auto& block = blocks_[static_cast<std::size_t>(i - 1) * (n_ + 1) + static_cast<std::size_t>(len)];
        if (block.empty()) {
            block.resize(std::size_t{1} << len);
            states_ += block.size();
        }
        return block[mask];
    }

    std::size_t states() const { return states_; }

private:
    int n_;
    std::vector<std::vector<Entry>> blocks_;
    std::size_t states_ = 0;
};

void check_limit(int limit)
{
    if (limit < 1 || limit > kHardIntervalLimit)
        throw std::invalid_argument("oracle interval limit must be in 1.." + std::to_string(kHardIntervalLimit));
}

void check_interval(const Instance& inst, Interval iv, int limit)
{
    if (iv.i < 1 || iv.j > inst.size() || iv.i > iv.j + 1)
        throw std::out_of_range("interval " + to_string(iv) + " outside the instance");
    if (iv.size() > limit)
        throw SizeLimitError(iv.size(), limit);
}

Mask relative(Interval iv, HoleSet holes)
{
    if (!holes.subset_of(iv.keys()))
        throw std::invalid_argument("hole set is not contained in interval " + to_string(iv));
    return static_cast<Mask>(holes.bits() >> iv.i) & low_bits(iv.size());
}

HoleSet absolute(Interval iv, Mask mask)
{
    return HoleSet::from_bits(static_cast<std::uint64_t>(mask) << iv.i);
}

/// Next mask with the same popcount (Gosper's hack).
Mask next_same_popcount(Mask v)
{
    const Mask t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

template <class Fn>
void for_each_mask_with_popcount(int len, int count, Fn&& fn)
{
    if (count == 0) {
        fn(Mask{0});
        return;
    }
    const Mask last = low_bits(len) & ~low_bits(len - count);
    for (Mask m = low_bits(count);; m = next_same_popcount(m)) {
        fn(m);
        if (m == last)
            break;
    }
}

} // namespace

// ---------------------------------------------------------------------------------------------
// GBST

struct GbstOracle::Impl {
    struct Entry {
        Cost opt = kUnset;
        Cost ext = kUnset; // min over one extra hole e of opt(I, H + e)
        std::int8_t split = 0;
        std::int8_t eq = 0;
        std::int8_t ext_key = 0;
    };

    Instance inst;
    int limit;
    IntervalMaskMemo<Entry> memo;

    Impl(Instance in, int lim) : inst(std::move(in)), limit(lim), memo(inst.size()) {}

    Weight query_weight(KeyIndex i, int len, Mask mask) const
    {
        Weight w = 0;
        for (Mask q = ~mask & low_bits(len); q != 0; q &= q - 1)
            w += inst.weights()[static_cast<std::size_t>(i - 1 + std::countr_zero(q))];
        return w;
    }

    Cost opt(KeyIndex i, int len, Mask mask)
    {
        if (len == 0 || mask == low_bits(len))
            return 0;
        Entry& en = memo.at(i, len, mask);
        if (en.opt != kUnset)
            return en.opt;

        Cost best = kInf;
        for (int s = 0; s <= len; ++s) {
            const Mask lmask = mask & low_bits(s);
            const Mask rmask = mask >> s;
            const int rlen = len - s;
            // equality key on the left side, then on the right side: lowest e first.
            // The side holding e must have a free key, otherwise the other side is (i, len, mask) again.
            if (lmask != low_bits(s)) {
                const Cost a = add(ext(i, s, lmask), opt(i + s, rlen, rmask));
                if (a < best) {
                    best = a;
                    en.split = static_cast<std::int8_t>(s);
                    en.eq = memo.at(i, s, lmask).ext_key;
                }
            }
            if (rmask == low_bits(rlen))
                continue;
            const Cost b = add(opt(i, s, lmask), ext(i + s, rlen, rmask));
            if (b < best) {
                best = b;
                en.split = static_cast<std::int8_t>(s);
                en.eq = static_cast<std::int8_t>(s + memo.at(i + s, rlen, rmask).ext_key);
            }
        }
        en.opt = query_weight(i, len, mask) + best;
        return en.opt;
    }

    Cost ext(KeyIndex i, int len, Mask mask)
    {
        if (len == 0 || mask == low_bits(len))
            return kInf;
        Entry& en = memo.at(i, len, mask);
        if (en.ext != kUnset)
            return en.ext;
        Cost best = kInf;
        for (Mask q = ~mask & low_bits(len); q != 0; q &= q - 1) {
            const int r = std::countr_zero(q);
            const Cost c = opt(i, len, mask | (Mask{1} << r));
            if (c < best) {
                best = c;
                en.ext_key = static_cast<std::int8_t>(r);
            }
        }
        en.ext = best;
        return best;
    }

    GbstTree build(KeyIndex i, int len, Mask mask)
    {
        if (len == 0 || mask == low_bits(len))
            return {};
        opt(i, len, mask);
        const Entry& en = memo.at(i, len, mask);
        const int s = en.split;
        const Mask with_e = mask | (Mask{1} << en.eq);
        GbstTree left = build(i, s, with_e & low_bits(s));
        GbstTree right = build(i + s, len - s, with_e >> s);
        const bool leaf = left.empty() && right.empty();
        return GbstTree::node(i + en.eq, leaf ? std::nullopt : std::optional<KeyIndex>(i + s), std::move(left),
                              std::move(right));
    }
};

GbstOracle::GbstOracle(Instance inst, int max_interval)
{
    check_limit(max_interval);
    impl_ = std::make_unique<Impl>(std::move(inst), max_interval);
}

GbstOracle::~GbstOracle() = default;
GbstOracle::GbstOracle(GbstOracle&&) noexcept = default;
GbstOracle& GbstOracle::operator=(GbstOracle&&) noexcept = default;

const Instance& GbstOracle::instance() const { return impl_->inst; }
int GbstOracle::max_interval() const { return impl_->limit; }
std::size_t GbstOracle::memo_states() const { return impl_->memo.states(); }

Cost GbstOracle::cost(Interval iv, HoleSet holes)
{
    check_interval(impl_->inst, iv, impl_->limit);
    return impl_->opt(iv.i, iv.size(), relative(iv, holes));
}

OracleSolution<GbstTree> GbstOracle::solve(Interval iv, HoleSet holes)
{
    check_interval(impl_->inst, iv, impl_->limit);
    const Mask m = relative(iv, holes);
    const Cost c = impl_->opt(iv.i, iv.size(), m);
    return {c, impl_->build(iv.i, iv.size(), m)};
}

OptStarSolution<GbstTree> GbstOracle::solve_star(Interval iv, int holes)
{
    check_interval(impl_->inst, iv, impl_->limit);
    if (holes < 0 || holes > iv.size())
        throw std::out_of_range("hole count " + std::to_string(holes) + " outside 0.." + std::to_string(iv.size()));
    Cost best = kInf;
    Mask arg = 0;
    for_each_mask_with_popcount(iv.size(), holes, [&](Mask m) {
        const Cost c = impl_->opt(iv.i, iv.size(), m);
        if (c < best) {
            best = c;
            arg = m;
        }
    });
    return {best, impl_->build(iv.i, iv.size(), arg), absolute(iv, arg)};
}

std::vector<Cost> GbstOracle::star_costs(Interval iv)
{
    check_interval(impl_->inst, iv, impl_->limit);
    const int len = iv.size();
    std::vector<Cost> out(static_cast<std::size_t>(len + 1), kInf);
    for (Mask m = 0; m <= low_bits(len); ++m) {
        auto& slot = out[static_cast<std::size_t>(std::popcount(m))];
        slot = std::min(slot, impl_->opt(iv.i, len, m));
        if (m == low_bits(len))
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// 2WCST

struct TwcstOracle::Impl {
    enum : std::int8_t { kLeaf = 0, kEqual = 1, kLess = 2 };

    struct Entry {
        Cost opt = kUnset;
        std::int8_t kind = kLeaf;
        std::int8_t key = 0;
    };

    Instance inst;
    int limit;
    bool prune;
    IntervalMaskMemo<Entry> memo;

    Impl(Instance in, int lim, bool p) : inst(std::move(in)), limit(lim), prune(p), memo(inst.size()) {}

    Weight weight_at(KeyIndex i, int r) const { return inst.weights()[static_cast<std::size_t>(i - 1 + r)]; }

    Cost opt(KeyIndex i, int len, Mask mask)
    {
        const Mask queries = ~mask & low_bits(len);
        if (std::has_single_bit(queries))
            return 0;
        Entry& en = memo.at(i, len, mask);
        if (en.opt != kUnset)
            return en.opt;

        Weight total = 0;
        for (Mask q = queries; q != 0; q &= q - 1)
            total += weight_at(i, std::countr_zero(q));

        Cost best = kInf;
        for (Mask q = queries; q != 0; q &= q - 1) {
            const int r = std::countr_zero(q);
            if (prune && weight_at(i, r) == 0)
                continue;
            const Cost c = opt(i, len, mask | (Mask{1} << r));
            if (c < best) {
                best = c;
                en.kind = kEqual;
                en.key = static_cast<std::int8_t>(r);
            }
        }
        for (int s = 1; s < len; ++s) {
            if ((queries & low_bits(s)) == 0 || (queries >> s) == 0)
                continue;
            const Cost c = opt(i, s, mask & low_bits(s)) + opt(i + s, len - s, mask >> s);
            if (c < best) {
                best = c;
                en.kind = kLess;
                en.key = static_cast<std::int8_t>(s);
            }
        }
        en.opt = total + best;
        return en.opt;
    }

    TwcstTree build(KeyIndex i, int len, Mask mask)
    {
        const Mask queries = ~mask & low_bits(len);
        if (std::has_single_bit(queries))
            return TwcstTree::leaf(i + std::countr_zero(queries));
        opt(i, len, mask);
        const Entry& en = memo.at(i, len, mask);
        if (en.kind == kEqual)
            return TwcstTree::equal(i + en.key, build(i, len, mask | (Mask{1} << en.key)));
        const int s = en.key;
        return TwcstTree::less(i + s, build(i, s, mask & low_bits(s)), build(i + s, len - s, mask >> s));
    }

    void check_proper(Interval iv, Mask m) const
    {
        if (iv.empty() || m == low_bits(iv.size()))
            throw std::invalid_argument("a comparison tree needs at least one query; hole set covers " + to_string(iv));
    }
};

TwcstOracle::TwcstOracle(Instance inst, int max_interval, bool prune_zero_equality)
{
    check_limit(max_interval);
    impl_ = std::make_unique<Impl>(std::move(inst), max_interval, prune_zero_equality);
}

TwcstOracle::~TwcstOracle() = default;
TwcstOracle::TwcstOracle(TwcstOracle&&) noexcept = default;
TwcstOracle& TwcstOracle::operator=(TwcstOracle&&) noexcept = default;

const Instance& TwcstOracle::instance() const { return impl_->inst; }
int TwcstOracle::max_interval() const { return impl_->limit; }
bool TwcstOracle::prunes_zero_equality() const { return impl_->prune; }
std::size_t TwcstOracle::memo_states() const { return impl_->memo.states(); }

Cost TwcstOracle::cost(Interval iv, HoleSet holes)
{
    check_interval(impl_->inst, iv, impl_->limit);
    const Mask m = relative(iv, holes);
    impl_->check_proper(iv, m);
    return impl_->opt(iv.i, iv.size(), m);
}

OracleSolution<TwcstTree> TwcstOracle::solve(Interval iv, HoleSet holes)
{
    check_interval(impl_->inst, iv, impl_->limit);
    const Mask m = relative(iv, holes);
    impl_->check_proper(iv, m);
    const Cost c = impl_->opt(iv.i, iv.size(), m);
    return {c, impl_->build(iv.i, iv.size(), m)};
}

OptStarSolution<TwcstTree> TwcstOracle::solve_star(Interval iv, int holes)
{
    check_interval(impl_->inst, iv, impl_->limit);
    if (iv.empty() || holes < 0 || holes > iv.size() - 1)
        throw std::out_of_range("hole count " + std::to_string(holes) + " outside 0.."
                                + std::to_string(iv.size() - 1));
    Cost best = kInf;
    Mask arg = 0;
    for_each_mask_with_popcount(iv.size(), holes, [&](Mask m) {
        const Cost c = impl_->opt(iv.i, iv.size(), m);
        if (c < best) {
            best = c;
            arg = m;
        }
    });
    return {best, impl_->build(iv.i, iv.size(), arg), absolute(iv, arg)};
}

std::vector<Cost> TwcstOracle::star_costs(Interval iv)
{
    check_interval(impl_->inst, iv, impl_->limit);
    if (iv.empty())
        throw std::invalid_argument("empty interval has no comparison tree");
    const int len = iv.size();
    std::vector<Cost> out(static_cast<std::size_t>(len), kInf);
    for (Mask m = 0; m < low_bits(len); ++m) {
        auto& slot = out[static_cast<std::size_t>(std::popcount(m))];
        slot = std::min(slot, impl_->opt(iv.i, len, m));
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

OracleSolution<GbstTree> gbst_opt(const Instance& inst, Interval iv, HoleSet holes)
{
    return GbstOracle(inst).solve(iv, holes);
}

OptStarSolution<GbstTree> gbst_opt_star(const Instance& inst, Interval iv, int holes)
{
    return GbstOracle(inst).solve_star(iv, holes);
}

OracleSolution<TwcstTree> twcst_opt(const Instance& inst, Interval iv, HoleSet holes)
{
    return TwcstOracle(inst).solve(iv, holes);
}

OptStarSolution<TwcstTree> twcst_opt_star(const Instance& inst, Interval iv, int holes)
{
    return TwcstOracle(inst).solve_star(iv, holes);
}

} // namespace splitlab
