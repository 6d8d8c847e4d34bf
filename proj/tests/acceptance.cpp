// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "evoc/cli.hpp"
#include "evoc/harness.hpp"
#include "evoc/world.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace evoc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Thresholds
constexpr double kOracleSeconds = 1.0;
constexpr int kMonotoneChains = 1000;
constexpr int kPlateauRuns = 50;
constexpr int kPlateauRequired = 45;
constexpr int kPlateauIterations = 500;
constexpr double kPlateauLevel = 9.9;
constexpr double kPlateauSeconds = 60.0;
constexpr int kSrReplicates = 100;
constexpr int kSrIterations = 100;
constexpr std::size_t kBootstrapResamples = 10000;
constexpr double kSegregationFloor = 0.7;
constexpr long kPropertyCases = 10000;

Outcome oracle() {
    const auto t0 = Clock::now();
    const OracleResult prose = oracle_max_and_argmax(HeadRule::Prose);
    const OracleResult literal = oracle_max_and_argmax(HeadRule::Literal);
    const double secs = seconds_since(t0);
    bool heads = true;
    for (const Action& a : prose.argmax) heads = heads && a[BodyPart::Head] == Position::Neutral;
    const bool pass = prose.max == 10.0 && prose.argmax.size() == 8 && heads &&
                      literal.max == 11.0 && secs < kOracleSeconds;
    return {pass, fmt("prose max %.1f with %zu optima (heads neutral: %s), literal max %.1f, %.3f s",
                      prose.max, prose.argmax.size(), heads ? "yes" : "no", literal.max, secs)};
}

Outcome chain_monotonicity() {
    RandomStream rng(2024);
    long checks = 0;
    long violations = 0;
    long single_mismatch = 0;
    const auto all = enumerate_actions();
    for (int i = 0; i < kMonotoneChains; ++i) {
        const Chain c = testing::random_chain(rng, 20);
        const double base = chain_fitness(c);
        for (const Action& s : all) {
            Chain longer = c;
            longer.push_back(s);
            ++checks;
            violations += !(chain_fitness(longer) > base);
        }
        const Action a = c.back();
        single_mismatch += chain_fitness(Chain(a)) != single_fitness(a);
    }
    return {violations == 0 && single_mismatch == 0,
            fmt("%ld extensions of %d random chains, %ld not strictly fitter; %ld length-1 mismatches",
                checks, kMonotoneChains, violations, single_mismatch)};
}

Outcome convergence_plateau() {
    const auto t0 = Clock::now();
    SimParams p;
    p.chaining_enabled = false;
    p.sr_enabled = false;
    p.iterations = kPlateauIterations;
    const std::vector<TimeSeries> runs = run_replicates(p, kPlateauRuns, 0);
    int good = 0;
    int monotone_breaks = 0;
    for (const TimeSeries& ts : runs) {
        bool reached = false;
        bool monotone = true;
        for (std::size_t t = 0; t < ts.records.size(); ++t) {
            reached = reached || ts.records[t].mean_fitness >= kPlateauLevel;
            if (t > 0 && ts.records[t].mean_fitness < ts.records[t - 1].mean_fitness) monotone = false;
        }
        monotone_breaks += !monotone;
        good += reached && monotone;
    }
    const double secs = seconds_since(t0);
    return {good >= kPlateauRequired && secs < kPlateauSeconds,
            fmt("%d/%d runs reach mean fitness >= %.1f within %d iterations without decrease "
                "(need %d); %d runs with a decrease; %.1f s",
                good, kPlateauRuns, kPlateauLevel, kPlateauIterations, kPlateauRequired,
                monotone_breaks, secs)};
}

ExperimentConfig sr_config(bool chaining) {
    ExperimentConfig cfg = default_config();
    cfg.replicates = kSrReplicates;
    cfg.bootstrap_resamples = kBootstrapResamples;
    for (Variant& v : cfg.variants) {
        v.params.chaining_enabled = chaining;
        v.params.iterations = kSrIterations;
    }
    return cfg;
}

struct SrBatch {
    ExperimentResult result;
    ComparisonReport report;
};

SrBatch sr_batch(bool chaining) {
    const ExperimentConfig cfg = sr_config(chaining);
    SrBatch b;
    b.result = run_experiment(cfg);
    b.report = compare_sr(b.result, cfg.bootstrap_resamples, cfg.base.seed);
    return b;
}

std::string benefit_line(const char* regime, const SrBatch& b) {
    const auto& on = b.result.find("sr_on")->aggregate.points.back();
    const auto& off = b.result.find("sr_off")->aggregate.points.back();
    const BootstrapInterval& ci = b.report.final_difference;
    return fmt("%s: final mean fitness sr_on %.4f vs sr_off %.4f, diff %.4f, 95%% CI [%.4f, %.4f]",
               regime, on.mean_fitness.mean, off.mean_fitness.mean, ci.estimate, ci.lower, ci.upper);
}

bool benefit_holds(const SrBatch& b) {
    return b.report.final_difference.estimate > 0.0 && b.report.final_difference.lower > 0.0;
}

Outcome sr_benefit(const SrBatch& chained, const SrBatch* unchained) {
    std::string detail = benefit_line("chaining on", chained);
    if (benefit_holds(chained)) return {true, detail};
    detail += "; " + benefit_line("chaining off", *unchained);
    return {benefit_holds(*unchained), detail};
}

Outcome diversity_dynamics(const SrBatch& b) {
    const Peak on = b.report.diversity_peak_on;
    const Peak off = b.report.diversity_peak_off;
    const int last = static_cast<int>(b.report.fitness_difference.size()) - 1;
    const auto interior = [&](const Peak& p) { return p.iteration > 0 && p.iteration < last; };
    const bool pass = interior(on) && interior(off) && on.iteration < off.iteration;
    std::string detail = fmt("peak sr_on t=%d (%.1f), sr_off t=%d (%.1f), final t=%d", on.iteration,
                             on.value, off.iteration, off.value, last);
    if (on.value < off.value) detail += "; WARN sr_on peak lower than sr_off";
    return {pass, detail};
}

Outcome segregation(const SrBatch& b) {
    const auto& points = b.result.find("sr_on")->aggregate.points;
    const AggregatePoint& first = points.front();
    const double total = b.report.final_frac_imitators_on + b.report.final_frac_creators_on;
    bool zero_at_start = true;
    for (const TimeSeries& ts : b.result.find("sr_on")->replicates) {
        zero_at_start = zero_at_start && ts.records[0].frac_imitators == 0.0 &&
                        ts.records[0].frac_creators == 0.0;
    }
    zero_at_start = zero_at_start && first.frac_imitators.mean == 0.0 && first.frac_creators.mean == 0.0;
    return {total >= kSegregationFloor && zero_at_start,
            fmt("final sr_on imitators %.3f + creators %.3f = %.3f (need >= %.2f); "
                "iteration-0 fractions zero: %s",
                b.report.final_frac_imitators_on, b.report.final_frac_creators_on, total,
                kSegregationFloor, zero_at_start ? "yes" : "no")};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    const fs::path root = fs::temp_directory_path() / "evoc_acceptance_determinism";
    fs::remove_all(root);
    fs::create_directories(root);
    const fs::path cfg = root / "config.json";
    std::ofstream(cfg) << R"({"replicates": 16, "base": {"iterations": 60}})";

    const auto invoke = [&](const std::string& out, const std::string& jobs) {
        std::ostringstream o;
        std::ostringstream e;
        return run_cli({"run", "--config", cfg.string(), "--out", (root / out).string(), "--jobs",
                        jobs},
                       o, e);
    };
    int codes = invoke("a", "1") | invoke("b", "1") | invoke("c", "8");
    int files = 0;
    int mismatches = 0;
    for (const auto& entry : fs::directory_iterator(root / "a")) {
        const std::string name = entry.path().filename().string();
        ++files;
        const std::string ref = slurp(entry.path());
        mismatches += ref != slurp(root / "b" / name);
        mismatches += ref != slurp(root / "c" / name);
    }
    return {codes == 0 && files == 4 && mismatches == 0,
            fmt("%d output files compared across two serial runs and a --jobs 8 run, %d mismatches",
                files, mismatches)};
}

Outcome invariants() {
    testing::CampaignResult r;
    RandomStream rng(777);
    testing::agent_properties(r, rng, kPropertyCases);
    testing::metric_properties(r, rng, kPropertyCases / 10);
    testing::world_properties(r, rng, 200, 20);
    std::string detail = fmt("%ld generated checks", r.cases);
    for (const std::string& f : r.failures) detail += "; " + f;
    return {r.ok() && r.cases >= kPropertyCases, detail};
}

}  // namespace

int main() {
    int failed = 0;
    const auto report = [&](int id, const char* name, const Outcome& o) {
        std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    };

    report(1, "oracle", oracle());
    report(2, "chained-fitness monotonicity", chain_monotonicity());
    report(3, "convergence plateau", convergence_plateau());

    const SrBatch chained = sr_batch(true);
    std::optional<SrBatch> unchained;
    if (!benefit_holds(chained)) unchained = sr_batch(false);
    report(4, "SR benefit", sr_benefit(chained, unchained ? &*unchained : nullptr));
    report(5, "diversity dynamics", diversity_dynamics(chained));
    report(6, "segregation", segregation(chained));
    report(7, "determinism", determinism());
    report(8, "invariant suite", invariants());

    std::printf("%d of 8 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
