#include "evoc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "evoc/harness.hpp"

namespace evoc {

namespace {

struct RunOptions {
    std::string config;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<int> replicates;
    std::optional<int> iterations;
    std::optional<std::string> sr;
    std::optional<std::string> chaining;
    std::optional<unsigned> jobs;
    bool charts = false;
};

void add_run_options(CLI::App& cmd, RunOptions& o) {
    cmd.add_option("--config", o.config, "Experiment config (JSON)")->required();
    cmd.add_option("--out", o.out, "Output directory");
    cmd.add_option("--seed", o.seed, "Base seed");
    cmd.add_option("--replicates", o.replicates, "Replicates per variant");
    cmd.add_option("--iterations", o.iterations, "Iterations per run");
    cmd.add_option("--sr", o.sr, "Run a single variant with self-regulation on or off")
        ->check(CLI::IsMember({"on", "off"}));
    cmd.add_option("--chaining", o.chaining, "Chaining on or off for every variant")
        ->check(CLI::IsMember({"on", "off"}));
    cmd.add_option("--jobs", o.jobs, "Worker threads (0 = available parallelism)");
    cmd.add_flag("--charts", o.charts, "Also write SVG charts");
}

ExperimentConfig resolve(const RunOptions& o) {
    ExperimentConfig cfg = load_config(o.config);
    if (o.out) cfg.output_dir = *o.out;
    if (o.replicates) cfg.replicates = *o.replicates;
    if (o.jobs) cfg.jobs = *o.jobs;
    if (o.charts) cfg.charts = true;

    const auto patch = [&](SimParams& p) {
        if (o.seed) p.seed = *o.seed;
        if (o.iterations) p.iterations = *o.iterations;
        if (o.chaining) p.chaining_enabled = *o.chaining == "on";
    };
    patch(cfg.base);
    if (o.sr) {
        SimParams p = cfg.base;
        p.sr_enabled = *o.sr == "on";
        cfg.variants = {{*o.sr == "on" ? "sr_on" : "sr_off", p}};
    } else {
        for (Variant& v : cfg.variants) patch(v.params);
    }
    validate(cfg);
    return cfg;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int do_run(const RunOptions& o, bool compare, std::ostream& out, std::ostream& err) {
    const ExperimentConfig cfg = resolve(o);
    const auto start = std::chrono::steady_clock::now();
    const ExperimentResult result = run_experiment(cfg);
    write_outputs(cfg, result);
    for (const VariantResult& v : result.variants) {
        const AggregatePoint& last = v.aggregate.points.back();
        out << v.variant.name << ": final mean fitness " << last.mean_fitness.mean
            << ", diversity " << last.diversity.mean << ", mean p(C) " << last.mean_p_create.mean
            << '\n';
    }
    if (compare) {
        const ComparisonReport report =
            compare_sr(result, cfg.bootstrap_resamples, cfg.base.seed);
        write_comparison(cfg.output_dir, report);
        out << to_json(report).dump(2) << '\n';
    }
    err << "elapsed " << seconds_since(start) << " s, outputs in " << cfg.output_dir.string()
        << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Agent-based cultural evolution simulator with self-regulated invention", "evoc"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    RunOptions run_opts;
    auto* run_cmd = app.add_subcommand("run", "Run every variant and write aggregate outputs");
    add_run_options(*run_cmd, run_opts);

    RunOptions cmp_opts;
    auto* cmp_cmd = app.add_subcommand("compare", "Run sr_on and sr_off and compare them");
    add_run_options(*cmp_cmd, cmp_opts);

    app.add_subcommand("oracle", "Exhaustively check the single-action fitness landscape");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << version() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (run_cmd->parsed()) return do_run(run_opts, false, out, err);
        if (cmp_cmd->parsed()) return do_run(cmp_opts, true, out, err);
        const OracleReport report = verify_oracle();
        out << format_oracle(report);
        return report.ok() ? kExitOk : kExitOracle;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kExitIo;
    }
}

}  // namespace evoc
