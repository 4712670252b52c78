#pragma once

#include <splitlab/exact_oracle.hpp>
#include <splitlab/solve_result.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace splitlab {

enum class Model { GbSplit, Twcst };

std::string_view to_string(Model m);
std::optional<Model> parse_model(std::string_view text);

/// Deterministic in (n, wmax, seed, zero_probability): each weight is 0 with probability
/// `zero_probability`, otherwise uniform in 0..wmax. Labels are "1".."n".
Instance random_instance(int n, Weight wmax, std::uint64_t seed, double zero_probability = 0.25);

enum class Certification { Oracle, Witness };

/// A subproblem where a flawed dynamic program returned a strictly costlier tree than the reference.
struct Discrepancy {
    Instance instance;
    CellKey cell;
    Cost flawed_cost = 0;
    /// Exact optimum, or a witness tree's cost when the oracle refused the instance.
    Cost reference_cost = 0;
    bool whole_instance = false;
    Certification certification = Certification::Oracle;
    std::uint64_t seed = 0;
    int trial = -1;

    Cost gap() const { return flawed_cost - reference_cost; }
};

/// Compares every cell of the flawed table (Huang-Wong for GbSplit, Spuler for Twcst) against
/// the exact opt*, optionally only cells with at most `holes_max` holes. Returns cells with a
/// positive gap, largest gap first. Throws SizeLimitError when n exceeds the oracle limit and
/// std::logic_error if a flawed cost ever undercuts the oracle.
std::vector<Discrepancy> audit_subproblems(Model model, const Instance& inst, std::optional<int> holes_max = {},
                                           int oracle_limit = -1);

/// A fixed instance run ahead of the random trials, e.g. a known counterexample.
struct InjectedCase {
    std::string name;
    Instance instance;
    /// Best known full-instance cost, used when the oracle refuses the instance.
    std::optional<Cost> witness_cost;
};

struct CampaignConfig {
    Model model = Model::Twcst;
    int n_min = 1;
    int n_max = 8;
    Weight wmax = 16;
    int trials = 100;
    std::uint64_t seed = 1;
    std::optional<int> holes_max;
    double zero_probability = 0.25;
    /// Oracle interval limit; -1 selects the model's default.
    int oracle_limit = -1;
    int threads = 1;
    /// Occupy trial indices 0..k-1; random trial t (counting from k) uses seed + t.
    std::vector<InjectedCase> injected;
};

/// Throws std::invalid_argument on an inconsistent configuration.
void validate(const CampaignConfig& cfg);

struct CampaignReport {
    Model model = Model::Twcst;
    int trials = 0;
    std::size_t cells_audited = 0;
    std::vector<Discrepancy> discrepancies;
    std::vector<std::string> refusals;

    Cost max_gap() const;
    bool whole_instance_discrepancy() const;
    std::size_t count(Certification c) const;
};

/// Runs every trial and aggregates in trial order, so the result does not depend on `threads`.
CampaignReport campaign(const CampaignConfig& cfg);

/// Re-runs a single trial of `cfg` and returns its discrepancies.
std::vector<Discrepancy> replay_trial(const CampaignConfig& cfg, int trial);

/// Instance a random trial would use.
Instance trial_instance(const CampaignConfig& cfg, int trial);

void write_campaign(std::ostream& out, const CampaignReport& report);

} // namespace splitlab
