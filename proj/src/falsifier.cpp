#include <splitlab/falsifier.hpp>

#include <splitlab/hw_solver.hpp>
#include <splitlab/spuler_solver.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>
#include <tuple>

namespace splitlab {

std::string_view to_string(Model m)
{
    return m == Model::GbSplit ? "gbsplit" : "twcst";
}

std::optional<Model> parse_model(std::string_view text)
{
    if (text == "gbsplit" || text == "gbst")
        return Model::GbSplit;
    if (text == "twcst" || text == "2wcst")
        return Model::Twcst;
    return std::nullopt;
}

namespace {

// std::uniform_int_distribution is implementation-defined; this keeps streams portable.
std::uint64_t bounded(std::mt19937_64& g, std::uint64_t range)
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    for (;;) {
        const std::uint64_t x = g();
        if (x < limit)
            return x % range;
    }
}

double unit(std::mt19937_64& g)
{
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

int oracle_limit_for(Model m, int configured)
{
    if (configured > 0)
        return configured;
    return m == Model::GbSplit ? kDefaultGbstLimit : kDefaultTwcstLimit;
}

bool discrepancy_order(const Discrepancy& a, const Discrepancy& b)
{
    if (a.gap() != b.gap())
        return a.gap() > b.gap();
    const auto& x = a.cell;
    const auto& y = b.cell;
    return std::tie(x.interval.i, x.interval.j, x.holes) < std::tie(y.interval.i, y.interval.j, y.holes);
}

template <class Table, class Oracle>
std::vector<Discrepancy> audit_table(const Table& table, Oracle& oracle, std::optional<int> holes_max,
                                     std::size_t* audited)
{
    const Instance& inst = table.instance();
    std::vector<Discrepancy> out;
    for (int i = 1; i <= inst.size(); ++i) {
        for (int j = i; j <= inst.size(); ++j) {
            const Interval iv{i, j};
            const std::vector<Cost> star = oracle.star_costs(iv);
            for (std::size_t h = 0; h < star.size(); ++h) {
                if (holes_max && static_cast<int>(h) > *holes_max)
                    break;
                const Cost flawed = table.at(iv, static_cast<int>(h)).result.cost;
                if (audited)
                    ++*audited;
                if (flawed < star[h])
                    throw std::logic_error("flawed cost " + std::to_string(flawed) + " undercuts the oracle ("
                                           + std::to_string(star[h]) + ") at " + to_string(iv) + " h="
                                           + std::to_string(h));
                if (flawed > star[h]) {
                    Discrepancy d{inst, {iv, static_cast<int>(h)}, flawed, star[h]};
                    d.whole_instance = iv == inst.full() && h == 0;
                    out.push_back(std::move(d));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), discrepancy_order);
    return out;
}

std::vector<Discrepancy> audit_counted(Model model, const Instance& inst, std::optional<int> holes_max, int limit,
                                       std::size_t* audited)
{
    limit = oracle_limit_for(model, limit);
    if (inst.size() > limit)
        throw SizeLimitError(inst.size(), limit);
    if (model == Model::GbSplit) {
        GbstOracle oracle(inst, limit);
        return audit_table(HwTable(inst), oracle, holes_max, audited);
    }
    TwcstOracle oracle(inst, limit);
    return audit_table(SpulerTable(inst), oracle, holes_max, audited);
}

Cost flawed_whole_cost(Model model, const Instance& inst)
{
    if (model == Model::GbSplit)
        return hw_solve(inst, inst.full(), 0).cost;
    return spuler_solve(inst, inst.full(), 0).cost;
}

std::uint64_t trial_seed(const CampaignConfig& cfg, int trial)
{
    return cfg.seed + static_cast<std::uint64_t>(trial - static_cast<int>(cfg.injected.size()));
}

struct TrialResult {
    std::vector<Discrepancy> discrepancies;
    std::size_t audited = 0;
    std::optional<std::string> refusal;
};

TrialResult run_trial(const CampaignConfig& cfg, int trial)
{
    TrialResult r;
    const int injected = static_cast<int>(cfg.injected.size());
    const bool is_injected = trial < injected;
    const Instance inst = is_injected ? cfg.injected[static_cast<std::size_t>(trial)].instance
                                      : trial_instance(cfg, trial);
    const std::uint64_t seed = is_injected ? 0 : trial_seed(cfg, trial);
    try {
        r.discrepancies = audit_counted(cfg.model, inst, cfg.holes_max, cfg.oracle_limit, &r.audited);
    } catch (const SizeLimitError& e) {
        const std::string name = is_injected ? cfg.injected[static_cast<std::size_t>(trial)].name : "random";
        r.refusal = "trial " + std::to_string(trial) + " (" + name + "): " + e.what();
        if (is_injected) {
            const auto& inj = cfg.injected[static_cast<std::size_t>(trial)];
            if (inj.witness_cost) {
                const Cost flawed = flawed_whole_cost(cfg.model, inst);
                ++r.audited;
                // a witness only bounds the optimum from above, so only a positive gap is certified
                if (flawed > *inj.witness_cost) {
                    Discrepancy d{inst, {inst.full(), 0}, flawed, *inj.witness_cost, true, Certification::Witness};
                    r.discrepancies.push_back(std::move(d));
                }
            }
        }
    }
    for (auto& d : r.discrepancies) {
        d.trial = trial;
        d.seed = seed;
    }
    return r;
}

} // namespace

std::vector<Discrepancy> audit_subproblems(Model model, const Instance& inst, std::optional<int> holes_max,
                                           int oracle_limit)
{
    return audit_counted(model, inst, holes_max, oracle_limit, nullptr);
}

Instance random_instance(int n, Weight wmax, std::uint64_t seed, double zero_probability)
{
    if (n < 1 || n > kMaxKeys)
        throw std::invalid_argument("random instance size must be in 1.." + std::to_string(kMaxKeys));
    if (wmax < 0)
        throw std::invalid_argument("wmax must be nonnegative");
    if (!(zero_probability >= 0.0 && zero_probability <= 1.0))
        throw std::invalid_argument("zero probability must be in [0, 1]");
    std::mt19937_64 g(seed);
    std::vector<Weight> w;
    for (int k = 0; k < n; ++k) {
        const bool zero = unit(g) < zero_probability;
        const auto v = static_cast<Weight>(bounded(g, static_cast<std::uint64_t>(wmax) + 1));
        w.push_back(zero ? 0 : v);
    }
    return Instance::from_weights(std::move(w));
}

void validate(const CampaignConfig& cfg)
{
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
        throw std::invalid_argument("need 1 <= n_min <= n_max");
    if (cfg.n_max > kHardIntervalLimit)
        throw std::invalid_argument("n_max exceeds " + std::to_string(kHardIntervalLimit));
    if (cfg.wmax < 0)
        throw std::invalid_argument("wmax must be nonnegative");
    if (cfg.trials < 0)
        throw std::invalid_argument("trial count must be nonnegative");
    if (cfg.holes_max && *cfg.holes_max < 0)
        throw std::invalid_argument("holes_max must be nonnegative");
    if (!(cfg.zero_probability >= 0.0 && cfg.zero_probability <= 1.0))
        throw std::invalid_argument("zero probability must be in [0, 1]");
    if (cfg.oracle_limit != -1 && (cfg.oracle_limit < 1 || cfg.oracle_limit > kHardIntervalLimit))
        throw std::invalid_argument("oracle limit must be in 1.." + std::to_string(kHardIntervalLimit));
    if (cfg.threads < 1)
        throw std::invalid_argument("thread count must be at least 1");
}

Instance trial_instance(const CampaignConfig& cfg, int trial)
{
    const int injected = static_cast<int>(cfg.injected.size());
    if (trial < 0 || trial >= injected + cfg.trials)
        throw std::out_of_range("trial " + std::to_string(trial) + " outside the campaign");
    if (trial < injected)
        return cfg.injected[static_cast<std::size_t>(trial)].instance;
    const std::uint64_t seed = trial_seed(cfg, trial);
    // the size comes from a separate stream so the weights depend only on (n, seed)
    std::mt19937_64 g(seed ^ 0x9e3779b97f4a7c15ULL);
    const int n = cfg.n_min + static_cast<int>(bounded(g, static_cast<std::uint64_t>(cfg.n_max - cfg.n_min + 1)));
    return random_instance(n, cfg.wmax, seed, cfg.zero_probability);
}

std::vector<Discrepancy> replay_trial(const CampaignConfig& cfg, int trial)
{
    validate(cfg);
    if (trial < 0 || trial >= static_cast<int>(cfg.injected.size()) + cfg.trials)
        throw std::out_of_range("trial " + std::to_string(trial) + " outside the campaign");
    return run_trial(cfg, trial).discrepancies;
}

CampaignReport campaign(const CampaignConfig& cfg)
{
    validate(cfg);
    const int total = static_cast<int>(cfg.injected.size()) + cfg.trials;
    std::vector<TrialResult> results(static_cast<std::size_t>(total));

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int t = next++; t < total; t = next++) {
            try {
                results[static_cast<std::size_t>(t)] = run_trial(cfg, t);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const int threads = std::min(cfg.threads, std::max(total, 1));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    CampaignReport rep;
    rep.model = cfg.model;
    rep.trials = total;
    for (auto& r : results) {
        rep.cells_audited += r.audited;
        for (auto& d : r.discrepancies)
            rep.discrepancies.push_back(std::move(d));
        if (r.refusal)
            rep.refusals.push_back(std::move(*r.refusal));
    }
    return rep;
}

Cost CampaignReport::max_gap() const
{
    Cost g = 0;
    for (const auto& d : discrepancies)
        g = std::max(g, d.gap());
    return g;
}

bool CampaignReport::whole_instance_discrepancy() const
{
    return std::any_of(discrepancies.begin(), discrepancies.end(), [](const Discrepancy& d) { return d.whole_instance; });
}

std::size_t CampaignReport::count(Certification c) const
{
    return static_cast<std::size_t>(std::count_if(discrepancies.begin(), discrepancies.end(),
                                                  [c](const Discrepancy& d) { return d.certification == c; }));
}

void write_campaign(std::ostream& out, const CampaignReport& r)
{
    out << "model: " << to_string(r.model) << '\n'
        << "trials: " << r.trials << '\n'
        << "cells_audited: " << r.cells_audited << '\n'
        << "discrepancies: " << r.discrepancies.size() << '\n'
        << "oracle_certified: " << r.count(Certification::Oracle) << '\n'
        << "witness_certified: " << r.count(Certification::Witness) << '\n'
        << "max_gap: " << r.max_gap() << '\n'
        << "whole_instance: " << (r.whole_instance_discrepancy() ? 1 : 0) << '\n'
        << "refusals: " << r.refusals.size() << '\n';
    for (const auto& d : r.discrepancies) {
        out << "discrepancy trial=" << d.trial << " seed=" << d.seed << " n=" << d.instance.size()
            << " cell=" << to_string(d.cell.interval) << " h=" << d.cell.holes << " flawed=" << d.flawed_cost
            << " reference=" << d.reference_cost << " gap=" << d.gap() << " whole=" << (d.whole_instance ? 1 : 0)
            << " certified=" << (d.certification == Certification::Oracle ? "oracle" : "witness") << " weights=";
        const auto w = d.instance.weights();
        for (std::size_t k = 0; k < w.size(); ++k)
            out << (k ? "," : "") << w[k];
        out << '\n';
    }
    for (const auto& s : r.refusals)
        out << "refusal " << s << '\n';
}

} // namespace splitlab
