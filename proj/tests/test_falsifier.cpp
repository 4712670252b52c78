#include <doctest.h>

#include <splitlab/benchmarks.hpp>
#include <splitlab/falsifier.hpp>

#include <sstream>

using namespace splitlab;

namespace {

std::string text(const CampaignReport& r)
{
    std::ostringstream out;
    write_campaign(out, r);
    return out.str();
}

} // namespace

TEST_CASE("random instances")
{
    CHECK(random_instance(5, 10, 42) == random_instance(5, 10, 42));
    CHECK(random_instance(1, 10, 3).size() == 1);
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const Instance inst = random_instance(6, 10, s);
        CHECK(inst.size() == 6);
        for (Weight w : inst.weights())
            CHECK((w >= 0 && w <= 10));
    }
    const Instance zeros = random_instance(20, 10, 1, 1.0);
    for (Weight w : zeros.weights())
        CHECK(w == 0);
    CHECK_THROWS_AS(random_instance(0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_instance(3, 10, 1, 1.5), std::invalid_argument);
}

TEST_CASE("model names")
{
    CHECK(parse_model("gbsplit") == Model::GbSplit);
    CHECK(parse_model("twcst") == Model::Twcst);
    CHECK_FALSE(parse_model("bst"));
    CHECK(to_string(Model::GbSplit) == "gbsplit");
}

TEST_CASE("auditing the fifteen-key instance finds the bad cell")
{
    const auto bad = audit_subproblems(Model::Twcst, build_instance("I15").instance);
    REQUIRE_FALSE(bad.empty());
    bool found = false;
    for (const auto& d : bad) {
        CHECK(d.gap() > 0);
        if (d.cell == CellKey{{1, 15}, 2}) {
            found = true;
            CHECK(d.flawed_cost == 116);
            CHECK(d.reference_cost == 115);
        }
    }
    CHECK(found);
    for (std::size_t k = 1; k < bad.size(); ++k)
        CHECK(bad[k - 1].gap() >= bad[k].gap());
}

TEST_CASE("auditing the nine-key instance")
{
    const auto bad = audit_subproblems(Model::GbSplit, build_instance("I9").instance);
    for (const auto& d : bad)
        CHECK_FALSE(d.cell == CellKey{{1, 9}, 2});
}

TEST_CASE("single-key audits are empty")
{
    const Instance one = Instance::from_weights({3});
    CHECK(audit_subproblems(Model::GbSplit, one).empty());
    CHECK(audit_subproblems(Model::Twcst, one).empty());
}

TEST_CASE("audits refuse instances above the oracle limit")
{
    CHECK_THROWS_AS(audit_subproblems(Model::GbSplit, build_instance("I31").instance), SizeLimitError);
    CHECK_THROWS_AS(audit_subproblems(Model::Twcst, build_instance("I15").instance, std::nullopt, 10),
                    SizeLimitError);
}

TEST_CASE("campaign over one-key instances")
{
    CampaignConfig cfg;
    cfg.n_min = cfg.n_max = 1;
    cfg.trials = 50;
    const auto r = campaign(cfg);
    CHECK(r.discrepancies.empty());
    CHECK(r.trials == 50);
    CHECK(r.cells_audited == 50);
}

TEST_CASE("injected thirty-one-key instance is a witness-certified whole-instance discrepancy")
{
    CampaignConfig cfg;
    cfg.model = Model::GbSplit;
    cfg.n_max = 5;
    cfg.trials = 20;
    const Instance i31 = build_instance("I31").instance;
    cfg.injected.push_back({"I31", i31, gbst_cost(thirty_one_key_witness().tree, i31)});
    const auto r = campaign(cfg);
    REQUIRE_FALSE(r.discrepancies.empty());
    const auto& d = r.discrepancies.front();
    CHECK(d.trial == 0);
    CHECK(d.whole_instance);
    CHECK(d.certification == Certification::Witness);
    CHECK(d.gap() == 1);
    CHECK(r.whole_instance_discrepancy());
    CHECK(r.refusals.size() == 1);
}

TEST_CASE("injected fifteen-key instance is audited by the oracle")
{
    CampaignConfig cfg;
    cfg.trials = 10;
    cfg.injected.push_back({"I15", build_instance("I15").instance, std::nullopt});
    const auto r = campaign(cfg);
    CHECK(r.count(Certification::Oracle) >= 1);
    CHECK(r.max_gap() >= 1);
    CHECK(r.refusals.empty());
}

TEST_CASE("campaigns are deterministic, thread-independent and replayable")
{
    CampaignConfig cfg;
    cfg.model = Model::Twcst;
    cfg.n_max = 9;
    cfg.trials = 150;
    cfg.seed = 7;
    cfg.injected.push_back({"I15", build_instance("I15").instance, std::nullopt});
    const auto a = campaign(cfg);
    cfg.threads = 4;
    const auto b = campaign(cfg);
    CHECK(text(a) == text(b));
    REQUIRE_FALSE(a.discrepancies.empty());
    for (const auto& d : a.discrepancies) {
        const auto again = replay_trial(cfg, d.trial);
        bool same = false;
        for (const auto& e : again)
            same = same || (e.cell == d.cell && e.gap() == d.gap() && e.instance == d.instance);
        CHECK(same);
    }
    CHECK(trial_instance(cfg, 5) == trial_instance(cfg, 5));
    CHECK_THROWS_AS(trial_instance(cfg, 151), std::out_of_range);
}

TEST_CASE("campaign configuration is validated")
{
    CampaignConfig cfg;
    cfg.n_min = 0;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = {};
    cfg.n_max = 30;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = {};
    cfg.threads = 0;
    CHECK_THROWS_AS(campaign(cfg), std::invalid_argument);
    cfg = {};
    cfg.oracle_limit = 40;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("random trials above the oracle limit are refused, not fatal")
{
    CampaignConfig cfg;
    cfg.n_min = 5;
    cfg.n_max = 5;
    cfg.oracle_limit = 4;
    cfg.trials = 3;
    const auto r = campaign(cfg);
    CHECK(r.refusals.size() == 3);
    CHECK(r.discrepancies.empty());
}
