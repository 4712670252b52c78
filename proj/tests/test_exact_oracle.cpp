#include <doctest.h>

#include "brute_force.hpp"

#include <splitlab/benchmarks.hpp>
#include <splitlab/exact_oracle.hpp>
#include <splitlab/falsifier.hpp>

using namespace splitlab;

TEST_CASE("split-tree oracle matches exhaustive enumeration")
{
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const Instance inst = random_instance(1 + static_cast<int>(seed % 5), 9, seed);
        GbstOracle oracle(inst);
        const Interval all = inst.full();
        for (int h = 0; h <= all.size(); ++h)
            for (const HoleSet holes : brute::hole_sets(all, h)) {
                const auto sol = oracle.solve(all, holes);
                CHECK(sol.cost == brute::min_gbst_cost(inst, all, holes));
                CHECK(gbst_cost(sol.tree, inst) == sol.cost);
                CHECK(gbst_validate(sol.tree, all, holes, inst).valid());
            }
    }
}

TEST_CASE("comparison-tree oracle matches exhaustive enumeration, with and without pruning")
{
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const Instance inst = random_instance(1 + static_cast<int>(seed % 5), 9, seed);
        TwcstOracle pruned(inst, kDefaultTwcstLimit, true);
        TwcstOracle full(inst, kDefaultTwcstLimit, false);
        const Interval all = inst.full();
        for (int h = 0; h < all.size(); ++h)
            for (const HoleSet holes : brute::hole_sets(all, h)) {
                const Cost expected = brute::min_twcst_cost(inst, all, holes);
                const auto sol = pruned.solve(all, holes);
                CHECK(sol.cost == expected);
                CHECK(full.cost(all, holes) == expected);
                CHECK(twcst_cost(sol.tree, inst) == sol.cost);
                CHECK(twcst_validate(sol.tree, all, holes, inst).valid());
            }
    }
}

TEST_CASE("split-tree optimum of the nine-key instance")
{
    const Instance inst = build_instance("I9").instance;
    const auto star = gbst_opt_star(inst, inst.full(), 2);
    CHECK(star.cost == 209);
    CHECK(star.holes.size() == 2);
    CHECK(gbst_weight(star.tree, inst) == 97);
    CHECK(gbst_opt(inst, inst.full(), KeySet::of({3, 5})).cost == 209);
    CHECK(gbst_opt(inst, inst.full(), KeySet::of({3, 8})).cost == 210);
}

TEST_CASE("comparison-tree optima on prefixes")
{
    const Instance i8 = comparison_prefix(8);
    CHECK(twcst_opt(i8, i8.full(), KeySet::of({1})).cost == 50);
    const auto star = twcst_opt_star(i8, i8.full(), 1);
    CHECK(star.cost == 49);
    CHECK(twcst_weight(star.tree, i8) == 22);

    const Instance i15 = build_instance("I15").instance;
    const auto s15 = twcst_opt_star(i15, i15.full(), 2);
    CHECK(s15.cost == 115);
    CHECK(twcst_validate(s15.tree, i15.full(), s15.holes, i15).valid());
    CHECK(twcst_opt(i15, i15.full(), KeySet::of({1, 15})).cost == 115);
    CHECK(twcst_opt(i15, i15.full(), KeySet::of({8, 15})).cost == 116);
    CHECK(twcst_opt(i15, i15.full(), {}).cost == 167);
}

TEST_CASE("opt star never increases with more holes")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Instance inst = random_instance(7, 16, seed);
        GbstOracle g(inst);
        TwcstOracle t(inst);
        const auto gs = g.star_costs(inst.full());
        const auto ts = t.star_costs(inst.full());
        for (std::size_t h = 0; h + 1 < gs.size(); ++h)
            CHECK(gs[h + 1] <= gs[h]);
        for (std::size_t h = 0; h + 1 < ts.size(); ++h)
            CHECK(ts[h + 1] <= ts[h]);
        CHECK(gs.back() == 0);
        CHECK(ts.back() == 0);
    }
}

TEST_CASE("star sweep agrees with per-hole-count solves")
{
    const Instance inst = random_instance(6, 16, 99);
    GbstOracle g(inst);
    TwcstOracle t(inst);
    const auto gs = g.star_costs({2, 6});
    const auto ts = t.star_costs({2, 6});
    for (int h = 0; h <= 5; ++h)
        CHECK(g.solve_star({2, 6}, h).cost == gs[static_cast<std::size_t>(h)]);
    for (int h = 0; h <= 4; ++h)
        CHECK(t.solve_star({2, 6}, h).cost == ts[static_cast<std::size_t>(h)]);
}

TEST_CASE("size limits and invalid requests")
{
    const Instance big = build_instance("I31").instance;
    GbstOracle g(big);
    CHECK_THROWS_AS(g.cost(big.full(), {}), SizeLimitError);
    CHECK_NOTHROW(g.cost({1, 16}, {}));
    CHECK_THROWS_AS(GbstOracle(big, 25), std::invalid_argument);
    CHECK_THROWS_AS(GbstOracle(big, 0), std::invalid_argument);
    try {
        TwcstOracle(big).cost(big.full(), {});
        FAIL("expected a refusal");
    } catch (const SizeLimitError& e) {
        CHECK(e.requested() == 31);
        CHECK(e.limit() == kDefaultTwcstLimit);
    }

    const Instance small = Instance::from_weights({1, 2, 3});
    TwcstOracle t(small);
    CHECK_THROWS_AS(t.cost(small.full(), small.full().keys()), std::invalid_argument);
    CHECK_THROWS_AS(t.cost({1, 2}, KeySet::of({3})), std::invalid_argument);
    CHECK_THROWS_AS(t.solve_star(small.full(), 3), std::out_of_range);
    GbstOracle gs(small);
    CHECK(gs.cost(small.full(), small.full().keys()) == 0);
    CHECK_THROWS_AS(gs.cost({1, 4}, {}), std::out_of_range);
    CHECK_THROWS_AS(gs.solve_star(small.full(), 4), std::out_of_range);
}

TEST_CASE("memo is shared across queries of one session")
{
    const Instance inst = build_instance("I15").instance;
    TwcstOracle t(inst);
    t.cost(inst.full(), KeySet::of({1, 15}));
    const auto states = t.memo_states();
    CHECK(states > 0);
    t.cost(inst.full(), KeySet::of({1, 15}));
    CHECK(t.memo_states() == states);
}

TEST_CASE("placement lower bound")
{
    CHECK(placement_lower_bound(build_instance("I31").instance) == 1757);
    CHECK(placement_lower_bound(Instance::from_weights({5})) == 5);
    // 3 at depth 0, 2 and 1 at depth 1
    CHECK(placement_lower_bound(Instance::from_weights({1, 2, 3})) == 3 + 2 * 2 + 1 * 2);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Instance inst = random_instance(6, 16, seed);
        CHECK(placement_lower_bound(inst) <= gbst_opt(inst, inst.full(), {}).cost);
    }
}

TEST_CASE("depth sequences")
{
    const DepthSeq s = depth_seq(6);
    CHECK(s.d == std::vector<Cost>{0, 3, 6, 10, 14, 18});
    CHECK(s.e == std::vector<Cost>{0, 2, 6, 9, 13, 18});
    CHECK(depth_seq(1).size() == 1);
    CHECK_THROWS_AS(depth_seq(0), std::invalid_argument);
}

TEST_CASE("depth bounds hold for every comparison tree on up to six queries")
{
    const DepthSeq seq = depth_seq(6);
    for (int n = 1; n <= 6; ++n) {
        std::vector<KeyIndex> keys;
        for (int k = 1; k <= n; ++k)
            keys.push_back(k);
        for (const auto& t : brute::all_twcst(keys))
            CHECK(check_depth_bounds(t, seq, 6).valid());
    }
}

TEST_CASE("nearly separated sets need separators outside the set")
{
    // Eq(2) then Less(2): queries 1, 2, 3 at depths 2, 1, 2. If 2 could separate 1 and 3 for
    // itself, {1, 2, 3} would count as nearly separated with total depth 5 < e3 = 6.
    const auto t = TwcstTree::equal(2, TwcstTree::less(2, TwcstTree::leaf(1), TwcstTree::leaf(3)));
    CHECK(twcst_leaf_depth(t, 1) + twcst_leaf_depth(t, 2) + twcst_leaf_depth(t, 3) == 5);
    CHECK(check_depth_bounds(t, depth_seq(3), 3).valid());

    // a separated pair at depth 1 + 1 is impossible, so a hand-made violation must be flagged
    const DepthSeq strict{{0, 5}, {0, 2}};
    const auto pair = TwcstTree::less(2, TwcstTree::leaf(1), TwcstTree::less(3, TwcstTree::leaf(2), TwcstTree::leaf(3)));
    CHECK_FALSE(check_depth_bounds(pair, strict, 2).valid());
}
