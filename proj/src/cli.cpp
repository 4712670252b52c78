#include <splitlab/cli.hpp>

#include <splitlab/benchmarks.hpp>
#include <splitlab/exact_oracle.hpp>
#include <splitlab/falsifier.hpp>
#include <splitlab/hw_solver.hpp>
#include <splitlab/render.hpp>
#include <splitlab/spuler_solver.hpp>
#include <splitlab/tree_io.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

namespace splitlab {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw InputError("cannot write " + path);
}

Instance load_instance(const std::string& path)
{
    try {
        return parse_instance(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

Model model_from(const std::string& text)
{
    auto m = parse_model(text);
    if (!m)
        throw UsageError("unknown model '" + text + "'");
    return *m;
}

RenderFormat format_from(const std::string& text)
{
    auto f = parse_render_format(text);
    if (!f)
        throw UsageError("unknown render format '" + text + "'");
    return *f;
}

// ---- solve

struct SolveArgs {
    std::string model, alg, instance, render, out;
    std::vector<int> interval;
    std::optional<int> holes;
    std::optional<std::string> holeset;
};

template <class Tree>
void emit_solution(const SolveArgs& a, const Instance& inst, Cost cost, const Tree& tree, Weight weight,
                   KeySet holes, std::ostream& out)
{
    out << "cost: " << cost << '\n' << "weight: " << weight << '\n' << "holes: " << format_key_list(inst, holes)
        << '\n';
    const std::string text = format_tree(tree, inst);
    out << "tree: " << text;
    if (!a.render.empty()) {
        const std::string rendered = render(tree, inst, format_from(a.render));
        if (a.out.empty())
            out << rendered;
        else
            write_file(a.out, rendered);
    } else if (!a.out.empty()) {
        write_file(a.out, text);
    }
}

int run_solve(const SolveArgs& a, std::ostream& out)
{
    const Model model = model_from(a.model);
    if (a.alg != "hw" && a.alg != "spuler" && a.alg != "exact")
        throw UsageError("unknown algorithm '" + a.alg + "'");
    if (a.alg == "hw" && model != Model::GbSplit)
        throw UsageError("--alg hw solves the gbsplit model");
    if (a.alg == "spuler" && model != Model::Twcst)
        throw UsageError("--alg spuler solves the twcst model");
    if (!a.render.empty())
        format_from(a.render);

    const Instance inst = load_instance(a.instance);
    Interval iv = inst.full();
    if (!a.interval.empty()) {
        iv = {a.interval[0], a.interval[1]};
        if (iv.i < 1 || iv.j > inst.size() || iv.empty())
            throw UsageError("interval " + to_string(iv) + " outside 1.." + std::to_string(inst.size()));
    }
    const int max_holes = model == Model::GbSplit ? iv.size() : iv.size() - 1;

    std::optional<HoleSet> explicit_holes;
    if (a.holeset) {
        if (a.alg != "exact")
            throw UsageError("--holeset needs --alg exact");
        try {
            explicit_holes = parse_key_list(inst, *a.holeset);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (!explicit_holes->subset_of(iv.keys()))
            throw UsageError("hole set is not inside interval " + to_string(iv));
        if (explicit_holes->size() > max_holes)
            throw UsageError("hole set leaves no query");
    }
    const int h = a.holes.value_or(0);
    if (h < 0 || h > max_holes)
        throw UsageError("--holes " + std::to_string(h) + " outside 0.." + std::to_string(max_holes));

    if (a.alg == "hw") {
        const auto r = hw_solve(inst, iv, h);
        emit_solution(a, inst, r.cost, r.tree, r.weight, iv.keys() - r.used_keys, out);
    } else if (a.alg == "spuler") {
        const auto r = spuler_solve(inst, iv, h);
        emit_solution(a, inst, r.cost, r.tree, r.weight, iv.keys() - r.used_keys, out);
    } else if (model == Model::GbSplit) {
        GbstOracle oracle(inst);
        if (explicit_holes) {
            const auto r = oracle.solve(iv, *explicit_holes);
            emit_solution(a, inst, r.cost, r.tree, gbst_weight(r.tree, inst), *explicit_holes, out);
        } else {
            const auto r = oracle.solve_star(iv, h);
            emit_solution(a, inst, r.cost, r.tree, gbst_weight(r.tree, inst), r.holes, out);
        }
    } else {
        TwcstOracle oracle(inst);
        if (explicit_holes) {
            const auto r = oracle.solve(iv, *explicit_holes);
            emit_solution(a, inst, r.cost, r.tree, twcst_weight(r.tree, inst), *explicit_holes, out);
        } else {
            const auto r = oracle.solve_star(iv, h);
            emit_solution(a, inst, r.cost, r.tree, twcst_weight(r.tree, inst), r.holes, out);
        }
    }
    return kExitOk;
}

// ---- fuzz

struct FuzzArgs {
    std::string model = "twcst";
    CampaignConfig cfg;
    std::vector<std::string> inject;
    std::string export_dir;
    bool fail_on_discrepancy = false;
};

int run_fuzz(FuzzArgs a, std::ostream& out)
{
    a.cfg.model = model_from(a.model);
    for (const auto& name : a.inject) {
        NamedInstance named = [&] {
            try {
                return build_instance(name);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }();
        InjectedCase c{name, named.instance, std::nullopt};
        if (name == "I31" && a.cfg.model == Model::GbSplit)
            c.witness_cost = gbst_cost(thirty_one_key_witness().tree, named.instance);
        a.cfg.injected.push_back(std::move(c));
    }
    try {
        validate(a.cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const CampaignReport rep = campaign(a.cfg);
    write_campaign(out, rep);
    if (!a.export_dir.empty()) {
        std::filesystem::create_directories(a.export_dir);
        std::vector<int> done;
        for (const auto& d : rep.discrepancies) {
            if (std::find(done.begin(), done.end(), d.trial) != done.end())
                continue;
            done.push_back(d.trial);
            const std::string path = (std::filesystem::path(a.export_dir) / ("trial_" + std::to_string(d.trial) + ".txt")).string();
            write_file(path, "# trial " + std::to_string(d.trial) + " seed " + std::to_string(d.seed) + "\n"
                                 + format_instance(d.instance));
        }
    }
    return a.fail_on_discrepancy && !rep.discrepancies.empty() ? kExitFail : kExitOk;
}

// ---- render

int run_render(const std::string& instance_path, const std::string& tree_path, const std::string& format,
               std::ostream& out)
{
    const RenderFormat f = format_from(format);
    const Instance inst = load_instance(instance_path);
    AnyTree tree = [&] {
        try {
            return parse_tree(read_file(tree_path), inst);
        } catch (const ParseError& e) {
            throw InputError(tree_path + ": " + e.what());
        }
    }();
    try {
        out << std::visit([&](const auto& t) { return render(t, inst, f); }, tree);
    } catch (const std::invalid_argument& e) {
        throw InputError(tree_path + ": " + e.what());
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Split-tree and comparison-tree solvers, exact oracles and counterexample checks", "splitlab"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Solve one (interval, holes) subproblem");
    solve->add_option("--model", solve_args.model, "gbsplit or twcst")->required();
    solve->add_option("--alg", solve_args.alg, "hw, spuler or exact")->required();
    solve->add_option("--instance", solve_args.instance, "Instance file")->required();
    solve->add_option("--interval", solve_args.interval, "1-based inclusive key range I J")->expected(2);
    auto* holes_opt = solve->add_option("--holes", solve_args.holes, "Number of holes (opt*)");
    solve->add_option("--holeset", solve_args.holeset, "Comma-separated hole labels (exact only)")->excludes(holes_opt);
    solve->add_option("--render", solve_args.render, "dot, ascii or ifelse");
    solve->add_option("--out", solve_args.out, "Write the tree (or its rendering) to this file");

    std::string section = "all";
    std::uint64_t verify_seed = 1;
    auto* verify = app.add_subcommand("verify-paper", "Reproduce the fixed counterexample numbers");
    verify->add_option("--section", section, "figures, thm1, thm2, depth or all")
        ->check(CLI::IsMember({"figures", "thm1", "thm2", "depth", "all"}));
    verify->add_option("--seed", verify_seed, "Seed for the randomized depth checks");

    FuzzArgs fz;
    auto* fuzz = app.add_subcommand("fuzz", "Random campaign comparing a flawed recurrence with the exact oracle");
    fuzz->add_option("--model", fz.model, "gbsplit or twcst");
    fuzz->add_option("--n-min", fz.cfg.n_min);
    fuzz->add_option("--n-max", fz.cfg.n_max);
    fuzz->add_option("--wmax", fz.cfg.wmax);
    fuzz->add_option("--trials", fz.cfg.trials);
    fuzz->add_option("--seed", fz.cfg.seed);
    fuzz->add_option("--holes-max", fz.cfg.holes_max);
    fuzz->add_option("--zero-prob", fz.cfg.zero_probability, "Probability that a key gets weight 0");
    fuzz->add_option("--threads", fz.cfg.threads);
    fuzz->add_option("--oracle-limit", fz.cfg.oracle_limit);
    fuzz->add_option("--inject", fz.inject, "Benchmark instance run before the random trials (repeatable)");
    fuzz->add_option("--export", fz.export_dir, "Write each discrepancy's instance file into this directory");
    fuzz->add_flag("--fail-on-discrepancy", fz.fail_on_discrepancy);

    bool placement = false;
    std::string bound_instance;
    auto* bound = app.add_subcommand("bound", "Lower bounds on split-tree cost");
    bound->add_flag("--placement", placement, "Level-by-level placement bound");
    bound->add_option("--instance", bound_instance)->required();

    int depth_m = 0;
    auto* depth = app.add_subcommand("depth-seq", "Print the d and e depth sequences");
    depth->add_option("M", depth_m)->required()->check(CLI::Range(1, 1000));

    std::string render_instance, render_tree, render_format;
    auto* rend = app.add_subcommand("render", "Render a tree file");
    rend->add_option("--instance", render_instance)->required();
    rend->add_option("--tree", render_tree)->required();
    rend->add_option("--format", render_format)->required();

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("splitlab");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve)
            return run_solve(solve_args, out);
        if (*verify) {
            const Report r = verify_section(section, verify_seed);
            write_report(out, r);
            err << r.checks().size() << " checks, " << r.failures() << " failed\n";
            return r.passed() ? kExitOk : kExitFail;
        }
        if (*fuzz)
            return run_fuzz(fz, out);
        if (*bound) {
            if (!placement)
                throw UsageError("bound needs --placement");
            out << "placement: " << placement_lower_bound(load_instance(bound_instance)) << '\n';
            return kExitOk;
        }
        if (*depth) {
            const DepthSeq seq = depth_seq(depth_m);
            for (int m = 1; m <= depth_m; ++m)
                out << "d[" << m << "]=" << seq.d_at(m) << '\n';
            for (int m = 1; m <= depth_m; ++m)
                out << "e[" << m << "]=" << seq.e_at(m) << '\n';
            return kExitOk;
        }
        if (*rend)
            return run_render(render_instance, render_tree, render_format, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitUsage;
}

} // namespace splitlab
