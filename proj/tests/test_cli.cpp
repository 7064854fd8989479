#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = RWRE_CLI_PATH;

int run(const std::string& args) {
    const int rc = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

fs::path fresh_dir(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / ("rwre_cli_test_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::string write_config(const fs::path& dir, const std::string& body) {
    const fs::path p = dir / "config.json";
    std::ofstream(p) << body;
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ostringstream ss;
    ss << std::ifstream(p).rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("help and argument errors") {
    CHECK(run("--help") == 0);
    CHECK(run("moments --help") == 0);
    CHECK(run("no-such-subcommand") == 2);
    CHECK(run("") == 2);   // a subcommand is required
}

TEST_CASE("config errors exit with code 2") {
    const fs::path d = fresh_dir("cfg_errors");
    const std::string bad_json = write_config(d, "{ this is not json");
    CHECK(run("constants --config " + bad_json + " --out " + d.string()) == 2);
    // Parity violation inside a module: odd t for the Pfaffian driver.
    const std::string bad_parity = write_config(d, R"({"t_list": [3]})");
    CHECK(run("pfaffian --config " + bad_parity + " --out " + d.string()) == 2);
    CHECK(run("constants --config /nonexistent/path.json") == 2);
    fs::remove_all(d);
}

TEST_CASE("constants subcommand hits the closed-form anchor") {
    const fs::path d = fresh_dir("constants");
    const std::string cfg = write_config(d, R"({"mu": 1.0, "theta": 2.0})");
    CHECK(run("constants --config " + cfg + " --out " + d.string()) == 0);
    const json v = json::parse(slurp(d / "constants_verdict.json"));
    CHECK(v.contains("config_hash"));
    CHECK(std::abs(v["x_theta"].get<double>() - 0.6) < 1e-10);
    fs::remove_all(d);
}

TEST_CASE("moments subcommand on a reduced grid, reruns byte-identical") {
    const fs::path d1 = fresh_dir("moments1");
    const fs::path d2 = fresh_dir("moments2");
    const std::string body =
        R"({"k_max": 2, "t_min": 2, "t_max": 4, "x_max": 3, "mc_replicas": 4000})";
    const std::string cfg1 = write_config(d1, body);
    CHECK(run("moments --config " + cfg1 + " --seed 9 --out " + d1.string()) == 0);
    const std::string cfg2 = write_config(d2, body);
    CHECK(run("moments --config " + cfg2 + " --seed 9 --out " + d2.string()) == 0);
    const std::string csv1 = slurp(d1 / "moments.csv");
    CHECK(csv1 == slurp(d2 / "moments.csv"));
    CHECK(csv1.find("k,t,") == 0);   // header row first
    const json v = json::parse(slurp(d1 / "moments_verdict.json"));
    CHECK(v["pass"].get<bool>());
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST_CASE("pfaffian subcommand on a reduced grid") {
    const fs::path d = fresh_dir("pfaffian");
    const std::string cfg = write_config(
        d, R"({"t_list": [2, 4], "zeta_grid": [0.0, -0.25, 0.25], "nodes": 256})");
    CHECK(run("pfaffian --config " + cfg + " --out " + d.string()) == 0);
    const json v = json::parse(slurp(d / "pfaffian_verdict.json"));
    CHECK(v["pass"].get<bool>());
    CHECK(v["max_disc"].get<double>() < 1e-6);
    fs::remove_all(d);
}

TEST_CASE("llt subcommand: diagnostic scale run emits verdict and samples") {
    const fs::path d = fresh_dir("llt");
    const std::string cfg = write_config(d, R"({"t": 200, "replicas": 200})");
    CHECK(run("llt --config " + cfg + " --seed 4 --out " + d.string()) == 0);
    const json v = json::parse(slurp(d / "llt_half_verdict.json"));
    CHECK(v["ks11"]["p"].get<double>() > 0.01);
    CHECK(fs::exists(d / "llt_half_samples.csv"));
    fs::remove_all(d);
}

TEST_CASE("conjecture subcommands always exit 0 with CONJECTURE labels") {
    const fs::path d = fresh_dir("zconj");
    const std::string cfg =
        write_config(d, R"({"t": 32, "L_max": 32, "replicas": 60, "closure_n": 20000})");
    CHECK(run("zconj --config " + cfg + " --out " + d.string()) == 0);
    CHECK(run("zconj-full --config " + cfg + " --out " + d.string()) == 0);
    const json v = json::parse(slurp(d / "zconj_half_verdict.json"));
    CHECK(v["label"].get<std::string>() == "CONJECTURE");
    fs::remove_all(d);
}

TEST_CASE("poly and env-dump subcommands") {
    const fs::path d = fresh_dir("poly");
    CHECK(run("poly --config " + write_config(d, R"({"k": 3, "k_grid": 4})") +
              " --out " + d.string()) == 0);
    const json v = json::parse(slurp(d / "poly_verdict.json"));
    CHECK(v["witness"]["residual"].get<std::string>() == "0");
    CHECK(run("env-dump --out " + d.string()) == 0);
    CHECK(fs::exists(d / "env.csv"));
    fs::remove_all(d);
}
