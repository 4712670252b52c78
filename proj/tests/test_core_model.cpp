#include <doctest.h>

#include <splitlab/benchmarks.hpp>
#include <splitlab/gbst.hpp>
#include <splitlab/twcst.hpp>

using namespace splitlab;

namespace {

Instance six() { return build_instance("fig1").instance; }

} // namespace

TEST_CASE("key sets")
{
    const KeySet s = KeySet::of({2, 5, 9});
    CHECK(s.size() == 3);
    CHECK(s.contains(5));
    CHECK_FALSE(s.contains(4));
    CHECK(s.min() == 2);
    CHECK(s.max() == 9);
    CHECK(s.members() == std::vector<KeyIndex>{2, 5, 9});
    CHECK((s - KeySet::of({5})) == KeySet::of({2, 9}));
    CHECK(KeySet::range(3, 5) == KeySet::of({3, 4, 5}));
    CHECK(KeySet::range(5, 4).empty());
    CHECK(KeySet::range(1, 63).size() == 63);
    CHECK(KeySet::of({2}).subset_of(s));
}

TEST_CASE("intervals")
{
    const Interval iv{3, 7};
    CHECK(iv.size() == 5);
    CHECK(iv.contains(3));
    CHECK_FALSE(iv.contains(8));
    CHECK(Interval{4, 3}.empty());
    CHECK(to_string(iv) == "[3,7]");
}

TEST_CASE("label order is natural")
{
    CHECK(label_less("2", "10"));
    CHECK(label_less("A3", "B0"));
    CHECK(label_less("A9", "A10"));
    CHECK_FALSE(label_less("B0", "A3"));
    CHECK_FALSE(label_less("x", "x"));
}

TEST_CASE("instance construction rejects bad input")
{
    CHECK_THROWS_AS(Instance({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Instance({"a", "b"}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Instance({"a"}, {-1}), std::invalid_argument);
    CHECK_THROWS_AS(Instance({"b", "a"}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Instance({"a", "a"}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Instance({"a-b"}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Instance::from_weights(std::vector<Weight>(64, 1)), std::invalid_argument);
    CHECK_NOTHROW(Instance::from_weights(std::vector<Weight>(63, 1)));
}

TEST_CASE("instance accessors")
{
    const Instance inst = six();
    CHECK(inst.size() == 6);
    CHECK(inst.weight(4) == 3);
    CHECK(inst.label(4) == "D");
    CHECK(inst.find("E") == 5);
    CHECK_FALSE(inst.find("Z"));
    CHECK_THROWS_AS(inst.weight(0), std::out_of_range);
    CHECK_THROWS_AS(inst.weight(7), std::out_of_range);
    CHECK(inst.weight_of(KeySet::of({1, 4})) == 4);
}

TEST_CASE("instance text round trip and errors")
{
    const Instance inst = parse_instance("# comment\nA1 20\n\n  A2 5  \nB0 0\n");
    CHECK(inst.size() == 3);
    CHECK(inst.weight(2) == 5);
    CHECK(parse_instance(format_instance(inst)) == inst);

    auto line_of = [](const char* text) {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("A 1\nB\n") == 2);
    CHECK(line_of("A 1\n# x\nB x\n") == 3);
    CHECK(line_of("A 1\nB -3\n") == 2);
    CHECK(line_of("A 1\nB 2 3\n") == 2);
    CHECK(line_of("A$ 1\n") == 1);
    CHECK_THROWS(parse_instance("# only comments\n"));
    CHECK_THROWS(parse_instance("B 1\nA 1\n"));
}

TEST_CASE("key lists")
{
    const Instance inst = build_instance("I9").instance;
    const KeySet k = parse_key_list(inst, "A3, B4");
    CHECK(k == KeySet::of({3, 5}));
    CHECK(format_key_list(inst, k) == "A3,B4");
    CHECK(parse_key_list(inst, "").empty());
    CHECK_THROWS_AS(parse_key_list(inst, "A3,Z9"), std::invalid_argument);
}

TEST_CASE("split tree cost on the six-key example")
{
    const Instance inst = six();
    const auto w = six_key_example();
    CHECK(gbst_cost(w.tree, inst) == 20);
    CHECK(gbst_weight(w.tree, inst) == 10);
    CHECK(w.tree.node_count() == 6);
    CHECK(w.tree.height() == 3);
    CHECK(gbst_validate(w.tree, inst.full(), {}, inst).valid());
    CHECK(check_order_property(w.tree).valid());
}

TEST_CASE("split tree cost scales linearly with the weights")
{
    const Instance inst = six();
    std::vector<Weight> w(inst.weights().begin(), inst.weights().end());
    for (auto& x : w)
        x *= 7;
    const Instance scaled({inst.labels().begin(), inst.labels().end()}, w);
    const auto t = six_key_example().tree;
    CHECK(gbst_cost(t, scaled) == 7 * gbst_cost(t, inst));
}

TEST_CASE("split tree validation")
{
    const Instance inst = six();
    const Interval all = inst.full();

    SUBCASE("empty tree is valid only when every key is a hole")
    {
        CHECK(gbst_validate({}, all, all.keys(), inst).valid());
        CHECK_FALSE(gbst_validate({}, all, {}, inst).valid());
    }
    SUBCASE("missing key")
    {
        auto t = GbstTree::node(4, 4, GbstTree::leaf(2), GbstTree::leaf(5));
        CHECK_FALSE(gbst_validate(t, all, {}, inst).valid());
        CHECK(gbst_validate(t, all, KeySet::of({1, 3, 6}), inst).valid());
    }
    SUBCASE("duplicate key")
    {
        auto t = GbstTree::node(2, 2, GbstTree::leaf(1), GbstTree::leaf(2));
        CHECK_FALSE(gbst_validate(t, {1, 2}, {}, inst).valid());
    }
    SUBCASE("search routed the wrong way")
    {
        auto t = GbstTree::node(2, 2, GbstTree{}, GbstTree::leaf(1));
        CHECK_FALSE(gbst_validate(t, {1, 2}, {}, inst).valid());
        auto ok = GbstTree::node(2, 2, GbstTree::leaf(1), GbstTree{});
        CHECK(gbst_validate(ok, {1, 2}, {}, inst).valid());
    }
    SUBCASE("children need a split key")
    {
        auto t = GbstTree::node(2, std::nullopt, GbstTree::leaf(1), GbstTree{});
        CHECK_FALSE(gbst_validate(t, {1, 2}, {}, inst).valid());
    }
    SUBCASE("split key out of range")
    {
        auto t = GbstTree::node(1, 9, GbstTree::leaf(2), GbstTree{});
        CHECK_FALSE(gbst_validate(t, {1, 2}, {}, inst).valid());
        auto sentinel = GbstTree::node(1, 7, GbstTree::leaf(2), GbstTree{});
        CHECK(gbst_validate(sentinel, {1, 2}, {}, inst).valid());
    }
    SUBCASE("key outside the interval")
    {
        auto t = GbstTree::leaf(3);
        CHECK_FALSE(gbst_validate(t, {1, 2}, KeySet::of({1, 2}), inst).valid());
    }
}

TEST_CASE("order property detects crossing subtrees")
{
    // left subtree holds C, right subtree holds B
    auto t = GbstTree::node(4, 3, GbstTree::leaf(3), GbstTree::leaf(2));
    CHECK_FALSE(check_order_property(t).valid());
}

TEST_CASE("subtree replacement")
{
    const auto t = six_key_example().tree;
    const std::vector<Side> path = {Side::Left, Side::Right};
    const auto r = replace_subtree(t, path, GbstTree::leaf(6));
    CHECK(r.left().right().eq_key() == 6);
    CHECK(t.left().right().eq_key() == 3);
    CHECK(replace_subtree(t, {}, GbstTree::leaf(1)) == GbstTree::leaf(1));

    const std::vector<Side> into_empty = {Side::Right, Side::Left};
    CHECK(replace_subtree(t, into_empty, GbstTree::leaf(1)).right().left().eq_key() == 1);
    const std::vector<Side> through_empty = {Side::Right, Side::Left, Side::Left};
    CHECK_THROWS_AS(replace_subtree(t, through_empty, GbstTree::leaf(1)), std::out_of_range);
}

TEST_CASE("comparison tree cost, weight and depth")
{
    const Instance inst = comparison_prefix(8);
    const auto w = prefix8_heavy();
    CHECK(twcst_cost(w.tree, inst) == 49);
    CHECK(twcst_weight(w.tree, inst) == 22);
    CHECK(w.tree.leaf_count() == 7);
    CHECK(w.tree.internal_count() == 6);
    CHECK(twcst_leaf_depth(w.tree, 1) == 2);
    CHECK(twcst_leaf_depth(w.tree, 6) == 3);
    CHECK(twcst_leaf_depth(w.tree, 8) == -1);
    CHECK(twcst_cost(TwcstTree::leaf(1), inst) == 0);
}

TEST_CASE("comparison tree validation")
{
    const Instance inst = comparison_prefix(4);
    const Interval all = inst.full();
    const auto good = TwcstTree::less(3, TwcstTree::equal(1, TwcstTree::leaf(2)), TwcstTree::leaf(3));
    CHECK(twcst_validate(good, all, KeySet::of({4}), inst).valid());
    CHECK_FALSE(twcst_validate(good, all, {}, inst).valid());

    SUBCASE("equality node whose yes-branch is not its key")
    {
        auto bad = TwcstTree::internal(Comparison::Equal, 1, TwcstTree::leaf(2), TwcstTree::leaf(1));
        CHECK_FALSE(twcst_validate(bad, {1, 2}, {}, inst).valid());
    }
    SUBCASE("less-than routing")
    {
        auto bad = TwcstTree::less(1, TwcstTree::leaf(1), TwcstTree::leaf(2));
        CHECK_FALSE(twcst_validate(bad, {1, 2}, {}, inst).valid());
    }
    SUBCASE("duplicate leaf")
    {
        auto bad = TwcstTree::less(2, TwcstTree::leaf(1), TwcstTree::equal(2, TwcstTree::leaf(2)));
        CHECK_FALSE(twcst_validate(bad, {1, 2}, {}, inst).valid());
    }
    SUBCASE("structural equality")
    {
        auto a = TwcstTree::less(2, TwcstTree::leaf(1), TwcstTree::leaf(2));
        auto b = TwcstTree::less(2, TwcstTree::leaf(1), TwcstTree::leaf(2));
        CHECK(a == b);
        CHECK_FALSE(a == TwcstTree::equal(1, TwcstTree::leaf(2)));
    }
}
