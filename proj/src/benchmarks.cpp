#include <splitlab/benchmarks.hpp>

#include <splitlab/exact_oracle.hpp>
#include <splitlab/falsifier.hpp>
#include <splitlab/hw_solver.hpp>
#include <splitlab/spuler_solver.hpp>

#include <algorithm>
#include <optional>
#include <tuple>

namespace splitlab {

namespace {

struct Spec {
    const char* name;
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    int holes;
    std::map<Weight, int> multiset;
    Weight sum;
};

const std::vector<Weight> kComparisonWeights = {7, 5, 0, 5, 0, 5, 0, 5, 0, 5, 0, 5, 0, 5, 7};

std::vector<std::string> numbered(int n)
{
    std::vector<std::string> out;
    for (int k = 1; k <= n; ++k)
        out.push_back(std::to_string(k));
    return out;
}

const std::vector<std::string> kNineLabels = {"A1", "A2", "A3", "B0", "B4", "C0", "D0", "D1", "E0"};
const std::vector<Weight> kNineWeights = {20, 20, 20, 10, 20, 5, 10, 22, 10};

Spec spec_for(std::string_view name)
{
    if (name == "fig1")
        return {"fig1", {"A", "B", "C", "D", "E", "F"}, {1, 2, 1, 3, 2, 1}, 0, {{1, 3}, {2, 2}, {3, 1}}, 10};
    if (name == "I9")
        return {"I9", kNineLabels, kNineWeights, 2, {{5, 1}, {10, 3}, {20, 4}, {22, 1}}, 137};
    if (name == "I31") {
        auto labels = kNineLabels;
        for (const char* l : {"E1", "E2", "F0", "G0", "G1", "H0", "I0", "I1", "I2", "I3", "J0", "K0",
                              "K1", "L0", "M0", "M1", "M2", "N0", "O0", "O1", "P0", "Q0"})
            labels.emplace_back(l);
        auto weights = kNineWeights;
        const std::vector<Weight> block = {20, 20, 10, 10, 20, 10, 10};
        weights.insert(weights.end(), block.begin(), block.end());
        weights.push_back(20);
        for (int rep = 0; rep < 2; ++rep)
            weights.insert(weights.end(), block.begin(), block.end());
        return {"I31", labels, weights, 0, {{5, 1}, {10, 15}, {20, 14}, {22, 1}}, 457};
    }
    if (name == "I8")
        return {"I8", numbered(8), {kComparisonWeights.begin(), kComparisonWeights.begin() + 8}, 1,
                {{0, 3}, {5, 4}, {7, 1}}, 27};
    if (name == "I15")
        return {"I15", numbered(15), kComparisonWeights, 2, {{0, 6}, {5, 7}, {7, 2}}, 49};
    throw std::invalid_argument("unknown benchmark instance '" + std::string(name) + "'");
}

TwcstTree leaf(KeyIndex k) { return TwcstTree::leaf(k); }
TwcstTree eq(KeyIndex k, TwcstTree no) { return TwcstTree::equal(k, std::move(no)); }
TwcstTree lt(KeyIndex k, TwcstTree yes, TwcstTree no) { return TwcstTree::less(k, std::move(yes), std::move(no)); }

GbstTree gleaf(KeyIndex k) { return GbstTree::leaf(k); }
GbstTree gnode(KeyIndex k, KeyIndex split, GbstTree left, GbstTree right)
{
    return GbstTree::node(k, split, std::move(left), std::move(right));
}

// Less(5)[3, Less(7)[5, ... Less(m)[m-2, m]]] over the odd keys 3..m.
TwcstTree odd_chain(KeyIndex first, KeyIndex last)
{
    TwcstTree t = leaf(last);
    for (KeyIndex k = last; k > first + 2; k -= 2)
        t = lt(k, leaf(k - 2), std::move(t));
    return lt(first + 2, leaf(first), std::move(t));
}

TwcstTree equality_chain(std::vector<KeyIndex> keys, TwcstTree bottom)
{
    for (auto it = keys.rbegin(); it != keys.rend(); ++it)
        bottom = eq(*it, std::move(bottom));
    return bottom;
}

/// (depth, weight) multiset of the equality keys.
std::vector<std::pair<int, Weight>> depth_profile(const GbstTree& t, const Instance& inst, int depth = 0)
{
    std::vector<std::pair<int, Weight>> out;
    if (t.empty())
        return out;
    out.emplace_back(depth, inst.weight(t.eq_key()));
    for (const GbstTree* c : {&t.left(), &t.right()}) {
        auto sub = depth_profile(*c, inst, depth + 1);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

void expect_gbst(Report& r, const std::string& prefix, const Witness<GbstTree>& w, const Instance& inst,
                 std::optional<Cost> cost, std::optional<Weight> weight)
{
    if (cost)
        r.expect(prefix + ".cost", *cost, gbst_cost(w.tree, inst));
    if (weight)
        r.expect(prefix + ".weight", *weight, gbst_weight(w.tree, inst));
    r.expect_true(prefix + ".valid", gbst_validate(w.tree, w.interval, w.holes, inst).valid());
}

void expect_twcst(Report& r, const std::string& prefix, const Witness<TwcstTree>& w, const Instance& inst,
                  Cost cost, std::optional<Weight> weight)
{
    r.expect(prefix + ".cost", cost, twcst_cost(w.tree, inst));
    if (weight)
        r.expect(prefix + ".weight", *weight, twcst_weight(w.tree, inst));
    r.expect_true(prefix + ".valid", twcst_validate(w.tree, w.interval, w.holes, inst).valid());
}

} // namespace

std::vector<std::string> benchmark_names()
{
    return {"fig1", "I9", "I31", "I8", "I15"};
}

NamedInstance build_instance(std::string_view name)
{
    Spec s = spec_for(name);
    Instance inst(s.labels, s.weights);
    std::map<Weight, int> multiset;
    Weight sum = 0;
    for (Weight w : inst.weights()) {
        ++multiset[w];
        sum += w;
    }
    if (multiset != s.multiset || sum != s.sum)
        throw std::logic_error("benchmark instance " + std::string(name) + " does not match its checksum");
    return {s.name, std::move(inst), {1, static_cast<KeyIndex>(s.weights.size())}, s.holes, std::move(multiset), sum};
}

Instance comparison_prefix(int length)
{
    if (length < 1 || length > 15)
        throw std::out_of_range("prefix length must be in 1..15");
    return Instance(numbered(length), {kComparisonWeights.begin(), kComparisonWeights.begin() + length});
}

int positive_key_count(int length)
{
    if (length < 1 || length > 14)
        throw std::out_of_range("positive key count is defined for prefix lengths 1..14");
    return 1 + length / 2;
}

// ---------------------------------------------------------------------------------------------
// split trees

Witness<GbstTree> six_key_example()
{
    // A B C D E F = 1..6
    auto t = gnode(4, 4, gnode(2, 3, gleaf(1), gleaf(3)), gnode(5, 6, {}, gleaf(6)));
    return {"fig1", t, {1, 6}, {}};
}

// I9 keys: A1=1 A2=2 A3=3 B0=4 B4=5 C0=6 D0=7 D1=8 E0=9

Witness<GbstTree> nine_key_heavy_subtree()
{
    auto t = gnode(2, 7, gnode(1, 6, gleaf(4), gleaf(6)), gnode(8, 9, gleaf(7), gleaf(9)));
    return {"T_a", t, {1, 9}, KeySet::of({3, 5})};
}

Witness<GbstTree> nine_key_light_subtree()
{
    auto t = gnode(1, 5, gnode(2, 4, {}, gleaf(4)), gnode(5, 9, gnode(7, 7, gleaf(6), {}), gleaf(9)));
    return {"T_b", t, {1, 9}, KeySet::of({3, 8})};
}

GbstTree nine_key_context(const GbstTree& subtree, KeyIndex outer, KeyIndex inner)
{
    return gnode(outer, 10, gnode(inner, 10, subtree, {}), {});
}

GbstTree seven_key_block(KeyIndex f)
{
    return gnode(f, f + 4, gnode(f + 1, f + 3, gleaf(f + 2), gleaf(f + 3)),
                 gnode(f + 4, f + 6, gleaf(f + 5), gleaf(f + 6)));
}

GbstTree fifteen_key_block(KeyIndex f)
{
    return gnode(f, f + 8, seven_key_block(f + 1), seven_key_block(f + 8));
}

Witness<GbstTree> thirty_one_key_recurrence_shape()
{
    auto t = gnode(5, 17, gnode(3, 10, nine_key_heavy_subtree().tree, seven_key_block(10)), fifteen_key_block(17));
    return {"recurrence_shape", t, {1, 31}, {}};
}

Witness<GbstTree> thirty_one_key_witness()
{
    auto t = gnode(8, 17, gnode(3, 10, nine_key_light_subtree().tree, seven_key_block(10)), fifteen_key_block(17));
    return {"witness", t, {1, 31}, {}};
}

// ---------------------------------------------------------------------------------------------
// comparison trees

Witness<TwcstTree> prefix8_heavy()
{
    auto t = lt(3, lt(2, leaf(1), leaf(2)), equality_chain({4, 6}, odd_chain(3, 7)));
    return {"T_a", t, {1, 8}, KeySet::of({8})};
}

Witness<TwcstTree> prefix8_light_chain()
{
    auto t = equality_chain({2, 4, 6, 8}, odd_chain(3, 7));
    return {"T_b", t, {1, 8}, KeySet::of({1})};
}

Witness<TwcstTree> prefix8_light_split()
{
    auto t = lt(5, eq(2, lt(4, leaf(3), leaf(4))), eq(6, lt(8, lt(7, leaf(5), leaf(7)), leaf(8))));
    return {"T_c", t, {1, 8}, KeySet::of({1})};
}

Witness<TwcstTree> prefix10_heavy()
{
    auto t = lt(3, lt(2, leaf(1), leaf(2)), equality_chain({4, 6, 8}, odd_chain(3, 9)));
    return {"T_a", t, {1, 10}, KeySet::of({10})};
}

Witness<TwcstTree> prefix10_light()
{
    auto t = lt(5, eq(2, lt(4, leaf(3), leaf(4))), equality_chain({6, 8, 10}, odd_chain(5, 9)));
    return {"T_b", t, {1, 10}, KeySet::of({1})};
}

namespace {

TwcstTree fifteen_key_right_half()
{
    return equality_chain({10, 12, 14}, odd_chain(9, 13));
}

} // namespace

Witness<TwcstTree> fifteen_key_recurrence_shape()
{
    return {"recurrence_shape", lt(9, prefix8_heavy().tree, fifteen_key_right_half()), {1, 15}, KeySet::of({8, 15})};
}

Witness<TwcstTree> fifteen_key_witness()
{
    return {"witness", lt(9, prefix8_light_split().tree, fifteen_key_right_half()), {1, 15}, KeySet::of({1, 15})};
}

// ---------------------------------------------------------------------------------------------
// verification

Report verify_figures()
{
    Report r;
    const auto six = build_instance("fig1").instance;
    expect_gbst(r, "fig1", six_key_example(), six, 20, std::nullopt);

    const auto nine = build_instance("I9").instance;
    const auto ta = nine_key_heavy_subtree();
    const auto tb = nine_key_light_subtree();
    expect_gbst(r, "fig2.T_a", ta, nine, 209, 97);
    expect_gbst(r, "fig2.T_b", tb, nine, 210, 95);
    r.expect("fig2.weight.delta", 2, gbst_weight(ta.tree, nine) - gbst_weight(tb.tree, nine));
    r.expect_true("fig2.T_a.order", check_order_property(ta.tree).valid());
    r.expect_true("fig2.T_b.order", check_order_property(tb.tree).valid());

    // B4 over A3 over T_a; swap in T_b, and re-key the top node to the weight-22 key D1
    const KeyIndex a3 = 3, b4 = 5, d1 = 8;
    const GbstTree ctx_a = nine_key_context(ta.tree, b4, a3);
    const std::vector<Side> to_subtree = {Side::Left, Side::Left};
    const GbstTree swapped = replace_subtree(ctx_a, to_subtree, tb.tree);
    const GbstTree ctx_b = GbstTree::node(d1, swapped.split_key(), swapped.left(), swapped.right());
    const Cost ca = gbst_cost(ctx_a, nine);
    const Cost cb = gbst_cost(ctx_b, nine);
    r.expect("fig2.context_a.cost", 463, ca);
    r.expect("fig2.context_b.cost", 462, cb);
    r.expect_true("fig2.context_a.valid", gbst_validate(ctx_a, nine.full(), {}, nine).valid());
    r.expect_true("fig2.context_b.valid", gbst_validate(ctx_b, nine.full(), {}, nine).valid());
    r.expect("fig2.replacement.delta", -1, cb - ca);

    const auto i8 = comparison_prefix(8);
    expect_twcst(r, "fig4.T_a", prefix8_heavy(), i8, 49, 22);
    expect_twcst(r, "fig4.T_b", prefix8_light_chain(), i8, 50, 20);
    expect_twcst(r, "fig4.T_c", prefix8_light_split(), i8, 50, 20);

    const auto i10 = comparison_prefix(10);
    expect_twcst(r, "fig5.T_a", prefix10_heavy(), i10, 69, 27);
    expect_twcst(r, "fig5.T_b", prefix10_light(), i10, 70, 25);
    return r;
}

Report verify_split_counterexample()
{
    Report r;
    const auto named = build_instance("I31");
    const Instance& inst = named.instance;
    r.expect("thm1.sum", 457, named.weight_sum);

    const auto hw = hw_solve(inst, inst.full(), 0);
    r.expect("thm1.hw.cost", 1763, hw.cost);
    r.expect_true("thm1.hw.valid", gbst_validate(hw.tree, inst.full(), {}, inst).valid());

    expect_gbst(r, "thm1.recurrence_shape", thirty_one_key_recurrence_shape(), inst, 1763, std::nullopt);
    const auto witness = thirty_one_key_witness();
    expect_gbst(r, "thm1.witness", witness, inst, 1762, std::nullopt);

    // depth 0: the 22; depths 1-3: fourteen 20s; depth 4: fifteen 10s; depth 5: the 5
    std::vector<std::pair<int, Weight>> expected_profile = {{0, 22}};
    for (int d = 1; d <= 3; ++d)
        for (int k = 0; k < (1 << d); ++k)
            expected_profile.emplace_back(d, 20);
    for (int k = 0; k < 15; ++k)
        expected_profile.emplace_back(4, 10);
    expected_profile.emplace_back(5, 5);
    auto profile = depth_profile(witness.tree, inst);
    std::sort(profile.begin(), profile.end());
    std::sort(expected_profile.begin(), expected_profile.end());
    r.expect_true("thm1.witness.profile", profile == expected_profile);

    r.expect("thm1.placement", 1757, placement_lower_bound(inst));
    r.expect_true("thm1.suboptimal", hw.cost > gbst_cost(witness.tree, inst));

    const Interval nine{1, 9};
    const HwTable table(inst);
    r.expect("thm1.I9.hw.cost", 209, table.at(nine, 2).result.cost);
    GbstOracle oracle(inst);
    const auto star = oracle.solve_star(nine, 2);
    r.expect("thm1.I9.oracle.cost", 209, star.cost);
    r.expect_true("thm1.I9.oracle.valid", gbst_validate(star.tree, nine, star.holes, inst).valid());

    const Interval block7{10, 16};
    const Interval block15{17, 31};
    r.expect("thm1.block7.balanced.cost", 220, gbst_cost(seven_key_block(10), inst));
    r.expect("thm1.block7.opt", 220, oracle.cost(block7, {}));
    r.expect("thm1.block15.balanced.cost", 660, gbst_cost(fifteen_key_block(17), inst));
    r.expect("thm1.block15.opt", 660, oracle.cost(block15, {}));
    return r;
}

Report verify_comparison_counterexample()
{
    Report r;
    const Instance inst = build_instance("I15").instance;
    const Interval full = inst.full();

    const SpulerTable table(inst);
    r.expect("thm2.spuler.cost", 116, table.at(full, 2).result.cost);
    r.expect_true("thm2.spuler.valid",
                  twcst_validate(table.at(full, 2).result.tree, full, full.keys() - table.at(full, 2).result.used_keys,
                                 inst)
                      .valid());

    TwcstOracle oracle(inst);
    const auto star = oracle.solve_star(full, 2);
    r.expect("thm2.oracle.cost", 115, star.cost);
    r.expect_true("thm2.oracle.valid", twcst_validate(star.tree, full, star.holes, inst).valid());

    expect_twcst(r, "thm2.recurrence_shape", fifteen_key_recurrence_shape(), inst, 116, std::nullopt);
    expect_twcst(r, "thm2.witness", fifteen_key_witness(), inst, 115, std::nullopt);

    const auto bad = audit_subproblems(Model::Twcst, inst);
    r.expect_true("thm2.bad_cell.exists", !bad.empty());
    r.expect("thm2.full.gap", 0, table.at(full, 0).result.cost - oracle.cost(full, {}));
    return r;
}

Report verify_depth_claims(int m_max, int trials, std::uint64_t seed)
{
    if (m_max < 1 || m_max > 6)
        throw std::invalid_argument("m_max must be in 1..6");
    Report r;
    const DepthSeq seq = depth_seq(m_max);
    const Cost d_ref[] = {0, 3, 6, 10, 14, 18};
    const Cost e_ref[] = {0, 2, 6, 9, 13, 18};
    for (int m = 1; m <= m_max; ++m)
        r.expect("depth.d" + std::to_string(m), d_ref[m - 1], seq.d_at(m));
    for (int m = 1; m <= m_max; ++m)
        r.expect("depth.e" + std::to_string(m), e_ref[m - 1], seq.e_at(m));

    for (int len = 1; len <= 14; ++len) {
        const Instance prefix = comparison_prefix(len);
        TwcstOracle oracle(prefix);
        const int q = positive_key_count(len);
        for (const auto& [gap, tag, cost, weight] :
             {std::tuple{4, "lemmaT4", Cost{49}, Weight{22}}, std::tuple{5, "lemmaT5", Cost{69}, Weight{27}}}) {
            const int h = q - gap;
            if (h < 0 || h > len - 1)
                continue;
            const std::string name = std::string(tag) + ".I" + std::to_string(len) + ".h" + std::to_string(h);
            const auto best = oracle.solve_star(prefix.full(), h);
            r.expect(name + ".cost", cost, best.cost);
            r.expect(name + ".weight", weight, twcst_weight(best.tree, prefix));
        }
    }

    CampaignConfig cfg;
    cfg.n_min = 1;
    cfg.n_max = 8;
    cfg.wmax = 16;
    cfg.trials = trials;
    cfg.seed = seed;
    std::int64_t violations = 0;
    for (int t = 0; t < trials; ++t) {
        const Instance inst = trial_instance(cfg, t);
        TwcstOracle oracle(inst);
        for (int i = 1; i <= inst.size(); ++i)
            for (int j = i; j <= inst.size(); ++j)
                for (int h = 0; h <= j - i; ++h) {
                    const auto best = oracle.solve_star({i, j}, h);
                    violations += static_cast<std::int64_t>(check_depth_bounds(best.tree, seq, m_max).violations.size());
                }
    }
    r.expect("depth.random.violations", 0, violations);
    return r;
}

Report verify_section(std::string_view section, std::uint64_t seed)
{
    const bool all = section == "all";
    if (!all && section != "figures" && section != "thm1" && section != "thm2" && section != "depth")
        throw std::invalid_argument("unknown section '" + std::string(section) + "'");
    Report r;
    if (all || section == "figures")
        r.append(verify_figures());
    if (all || section == "thm1")
        r.append(verify_split_counterexample());
    if (all || section == "thm2")
        r.append(verify_comparison_counterexample());
    if (all || section == "depth")
        r.append(verify_depth_claims(6, kDefaultDepthTrials, seed));
    return r;
}

} // namespace splitlab
