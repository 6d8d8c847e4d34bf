#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "evoc/cli.hpp"
#include "evoc/harness.hpp"

using namespace evoc;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path write_config(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / ("evoc_cli_" + name + ".json");
    std::ofstream(p) << text;
    return p;
}

const char* kSmall =
    R"({"base": {"grid_width": 6, "grid_height": 6, "iterations": 10}, "replicates": 3})";

}  // namespace

TEST_CASE("cli: version and oracle") {
    Result r = cli({"--version"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find(version()) != std::string::npos);

    r = cli({"oracle"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("max=10.000000 optima=8") != std::string::npos);
    CHECK(r.out.find("max=11.000000") != std::string::npos);
}

TEST_CASE("cli: usage and config errors exit 1") {
    CHECK(cli({}).code == kExitConfig);
    CHECK(cli({"run"}).code == kExitConfig);
    CHECK(cli({"run", "--config", "/nonexistent.json"}).code == kExitConfig);
    CHECK(cli({"frobnicate"}).code == kExitConfig);
    const fs::path cfg = write_config("bad", R"({"replicates": -2})");
    CHECK(cli({"run", "--config", cfg.string()}).code == kExitConfig);
    const fs::path broken = write_config("broken", "{not json");
    CHECK(cli({"run", "--config", broken.string()}).code == kExitConfig);
    const fs::path ok = write_config("ok", kSmall);
    CHECK(cli({"run", "--config", ok.string(), "--sr", "maybe"}).code == kExitConfig);
    CHECK(cli({"compare", "--config", ok.string(), "--sr", "on"}).code == kExitConfig);
}

TEST_CASE("cli: I/O errors exit 2") {
    const fs::path blocker = fs::temp_directory_path() / "evoc_cli_blocker";
    fs::remove_all(blocker);
    std::ofstream(blocker) << "x";
    const fs::path cfg = write_config("io", kSmall);
    const Result r = cli({"run", "--config", cfg.string(), "--out", (blocker / "o").string()});
    CHECK(r.code == kExitIo);
    CHECK(r.err.find("evoc_cli_blocker") != std::string::npos);
}

TEST_CASE("cli: run with overrides") {
    const fs::path out = fs::temp_directory_path() / "evoc_cli_run";
    fs::remove_all(out);
    const fs::path cfg = write_config("run", kSmall);
    const Result r = cli({"run", "--config", cfg.string(), "--out", out.string(), "--sr", "off",
                          "--iterations", "7", "--replicates", "2", "--chaining", "off",
                          "--seed", "77", "--jobs", "2"});
    REQUIRE(r.code == kExitOk);
    CHECK(fs::exists(out / "sr_off_aggregate.csv"));
    CHECK_FALSE(fs::exists(out / "sr_on_aggregate.csv"));
    std::ifstream meta_in(out / "sr_off_meta.json");
    const auto meta = nlohmann::json::parse(meta_in);
    CHECK(meta["params"]["iterations"] == 7);
    CHECK(meta["params"]["chaining_enabled"] == false);
    CHECK(meta["params"]["sr_enabled"] == false);
    CHECK(meta["params"]["seed"] == 77);
    CHECK(meta["replicates"] == 2);

    std::ifstream csv(out / "sr_off_aggregate.csv");
    int lines = 0;
    for (std::string l; std::getline(csv, l);) ++lines;
    CHECK(lines == 1 + 8);
}

TEST_CASE("cli: compare writes the comparison report") {
    const fs::path out = fs::temp_directory_path() / "evoc_cli_cmp";
    fs::remove_all(out);
    const fs::path cfg = write_config("cmp", kSmall);
    const Result r = cli({"compare", "--config", cfg.string(), "--out", out.string(), "--charts"});
    REQUIRE(r.code == kExitOk);
    CHECK(fs::exists(out / "comparison.json"));
    CHECK(fs::exists(out / "comparison.csv"));
    CHECK(fs::exists(out / "mean_fitness.svg"));
    CHECK(r.out.find("final_fitness_difference") != std::string::npos);

    const fs::path one = write_config(
        "one", R"({"base": {"grid_width": 4, "grid_height": 4, "iterations": 3},
                  "replicates": 2, "variants": [{"name": "solo"}]})");
    CHECK(cli({"compare", "--config", one.string(), "--out", out.string()}).code == kExitConfig);
}
