#include <doctest.h>

#include <splitlab/benchmarks.hpp>
#include <splitlab/exact_oracle.hpp>
#include <splitlab/falsifier.hpp>
#include <splitlab/hw_solver.hpp>

using namespace splitlab;

TEST_CASE("nine-key instance at two holes")
{
    const Instance inst = build_instance("I9").instance;
    const auto r = hw_solve(inst, inst.full(), 2);
    CHECK(r.cost == 209);
    CHECK(r.weight == 97);
    CHECK(r.used_keys.size() == 7);
    CHECK(inst.full().keys() - r.used_keys == KeySet::of({3, 5}));
    CHECK(gbst_cost(r.tree, inst) == 209);
    CHECK(gbst_validate(r.tree, inst.full(), KeySet::of({3, 5}), inst).valid());
}

TEST_CASE("thirty-one-key instance")
{
    const Instance inst = build_instance("I31").instance;
    const auto r = hw_solve(inst, inst.full(), 0);
    CHECK(r.cost == 1763);
    CHECK(gbst_validate(r.tree, inst.full(), {}, inst).valid());
    CHECK(r.cost > gbst_cost(thirty_one_key_witness().tree, inst));
}

TEST_CASE("every cell holds a valid tree with its recorded cost")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Instance inst = random_instance(1 + static_cast<int>(seed % 7), 12, seed);
        const HwTable table(inst);
        CHECK(table.cell_count() == table.cells().size());
        for (const auto& c : table.cells()) {
            const auto& cell = table.at(c.interval, c.holes);
            const auto& r = cell.result;
            CHECK(r.used_keys.size() == c.interval.size() - c.holes);
            CHECK(r.used_keys.subset_of(c.interval.keys()));
            CHECK(gbst_cost(r.tree, inst) == r.cost);
            CHECK(inst.weight_of(r.used_keys) == r.weight);
            CHECK(gbst_validate(r.tree, c.interval, c.interval.keys() - r.used_keys, inst).valid());
            CHECK(cell.choice.has_value() == (c.holes < c.interval.size()));
        }
    }
}

TEST_CASE("a cell never beats the exact optimum")
{
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        const Instance inst = random_instance(6, 16, seed);
        const HwTable table(inst);
        GbstOracle oracle(inst);
        for (const auto& c : table.cells())
            CHECK(table.at(c.interval, c.holes).result.cost >= oracle.star_costs(c.interval)[static_cast<std::size_t>(c.holes)]);
    }
}

TEST_CASE("edge cases")
{
    const Instance one = Instance::from_weights({4});
    CHECK(hw_solve(one, one.full(), 0).cost == 4);
    CHECK(hw_solve(one, one.full(), 1).cost == 0);
    CHECK(hw_solve(one, one.full(), 1).tree.empty());

    const Instance inst = build_instance("I9").instance;
    CHECK_THROWS_AS(hw_solve(inst, inst.full(), 10), std::out_of_range);
    CHECK_THROWS_AS(hw_solve(inst, inst.full(), -1), std::out_of_range);
    CHECK_THROWS_AS(hw_solve(inst, {0, 3}, 0), std::out_of_range);
    CHECK_THROWS_AS(hw_solve(inst, {2, 10}, 0), std::out_of_range);
    CHECK_THROWS_AS(hw_solve(inst, {5, 4}, 0), std::out_of_range);
}

TEST_CASE("zero weights give zero cost")
{
    const Instance z = Instance::from_weights({0, 0, 0, 0});
    CHECK(hw_solve(z, z.full(), 0).cost == 0);
}

TEST_CASE("cost scales linearly and the table is deterministic")
{
    const Instance inst = random_instance(7, 9, 77);
    std::vector<Weight> w(inst.weights().begin(), inst.weights().end());
    for (auto& x : w)
        x *= 3;
    const Instance scaled = Instance::from_weights(w);
    const HwTable a(inst), b(scaled), again(inst);
    for (const auto& c : a.cells()) {
        CHECK(b.at(c.interval, c.holes).result.cost == 3 * a.at(c.interval, c.holes).result.cost);
        CHECK(again.at(c.interval, c.holes).result.tree == a.at(c.interval, c.holes).result.tree);
    }
}
