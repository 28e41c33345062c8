// End-to-end checks of the command line tool: exit-code contract, byte-stable
// reports, format and seed plumbing, and config diagnostics.  The binary path
// comes from the build system through ZAREMBA_CLI_PATH.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "catch2/catch_amalgamated.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli_path() {
#ifdef ZAREMBA_CLI_PATH
    return ZAREMBA_CLI_PATH;
#else
    const char* p = std::getenv("ZAREMBA_CLI_PATH");
    REQUIRE(p != nullptr);
    return p;
#endif
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    f << content;
}

struct run_result {
    int exit_code = -1;
    std::string out, err;
};

run_result run_cli(const std::string& args) {
    static int counter = 0;
    fs::create_directories("cli_scratch");
    std::string so = "cli_scratch/stdout_" + std::to_string(counter) + ".txt";
    std::string se = "cli_scratch/stderr_" + std::to_string(counter) + ".txt";
    ++counter;
    std::string cmd = "\"" + cli_path() + "\" " + args + " > " + so + " 2> " + se;
    int rc = std::system(cmd.c_str());
    run_result r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(so);
    r.err = slurp(se);
    return r;
}

const char* cube_quermass_cfg = R"({
  "kind": "quermass",
  "shape": {"type": "box", "lo": [0, 0, 0], "hi": [1, 1, 1]},
  "seed": 11
})";

}  // namespace

TEST_CASE("passing run exits 0 with a self-describing JSON report", "[cli]") {
    fs::create_directories("cli_scratch");
    write_file("cli_scratch/quermass.json", cube_quermass_cfg);
    auto r = run_cli("quermass --config cli_scratch/quermass.json");
    REQUIRE(r.exit_code == 0);

    auto doc = json::parse(r.out);
    REQUIRE(doc["tool"] == "zaremba");
    REQUIRE(doc["kind"] == "quermass");
    REQUIRE(doc["seed"] == 11);
    REQUIRE(doc["pass"] == true);
    std::string hash = doc["config_hash"];
    REQUIRE(hash.size() == 16);
    REQUIRE(hash.find_first_not_of("0123456789abcdef") == std::string::npos);
    bool found_chain = false;
    for (const auto& v : doc["verdicts"]) {
        if (v["check"] == "alexandrov_fenchel_chain") {
            found_chain = true;
            REQUIRE(v["verdict"] == "pass");
        }
    }
    REQUIRE(found_chain);
    REQUIRE(doc["scalars"].contains("w2"));
    REQUIRE(std::fabs(doc["scalars"]["w2"].get<double>() - 3.14159265358979) < 1e-9);
}

TEST_CASE("reports are byte-stable for a fixed seed", "[cli]") {
    write_file("cli_scratch/quermass.json", cube_quermass_cfg);
    auto a = run_cli("quermass --config cli_scratch/quermass.json --seed 21");
    auto b = run_cli("quermass --config cli_scratch/quermass.json --seed 21");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);

    auto c = run_cli("quermass --config cli_scratch/quermass.json --seed 22");
    REQUIRE(c.exit_code == 0);
    REQUIRE(a.out != c.out);  // the seed is part of the report

    // timing lives on stderr so it cannot break byte stability
    REQUIRE(a.err.find("runtime_seconds") != std::string::npos);
    REQUIRE(a.out.find("runtime_seconds") == std::string::npos);
}

TEST_CASE("seed and format flags override the config", "[cli]") {
    write_file("cli_scratch/quermass.json", cube_quermass_cfg);
    auto r = run_cli("quermass --config cli_scratch/quermass.json --seed 99");
    REQUIRE(json::parse(r.out)["seed"] == 99);

    auto csv = run_cli("quermass --config cli_scratch/quermass.json --format csv");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(csv.out.rfind("record,name,value,parameter,lhs,rhs,slack,verdict\n", 0) == 0);
    REQUIRE(csv.out.find("meta,tool,zaremba") != std::string::npos);
    REQUIRE(csv.out.find("meta,seed,11") != std::string::npos);
    REQUIRE(csv.out.find("scalar,w1,2,") != std::string::npos);
}

TEST_CASE("--output writes the report to a file", "[cli]") {
    write_file("cli_scratch/quermass.json", cube_quermass_cfg);
    auto r = run_cli(
        "quermass --config cli_scratch/quermass.json --output cli_scratch/report.json");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.empty());
    auto doc = json::parse(slurp("cli_scratch/report.json"));
    REQUIRE(doc["kind"] == "quermass");
}

TEST_CASE("radial eigensolve through the CLI", "[cli]") {
    write_file("cli_scratch/eig.json", R"({
      "kind": "eig",
      "annulus": {"dim": 2, "r": 1.0, "R": 2.0, "dirichlet_on": "inner"},
      "mesh_nodes": 256,
      "seed": 3
    })");
    auto r = run_cli("eig --config cli_scratch/eig.json");
    REQUIRE(r.exit_code == 0);
    auto doc = json::parse(r.out);
    REQUIRE(std::fabs(doc["scalars"]["tau"].get<double>() - 1.851715092444625) < 1e-3);
    REQUIRE(doc["scalars"]["fd_relative_gap"].get<double>() < 1e-5);
    REQUIRE(doc["scalars"]["monotone"] == 1.0);
}

TEST_CASE("the published-example windows fail honestly with exit 2", "[cli][slow]") {
    auto r = run_cli("paper-example --seed 1");
    REQUIRE(r.exit_code == 2);
    auto doc = json::parse(r.out);
    REQUIRE(doc["pass"] == false);
    double tau_ann = doc["scalars"]["tau_annulus"].get<double>();
    double tau_dom = doc["scalars"]["tau_grid_h025"].get<double>();
    REQUIRE(std::fabs(tau_ann - 207.48879492086033) / 207.48879492086033 < 1e-3);
    REQUIRE(std::fabs(tau_dom - 132.21973593463244) / 132.21973593463244 < 1e-2);
    for (const auto& v : doc["verdicts"]) {
        if (v["check"] == "published_annulus_window") REQUIRE(v["verdict"] == "fail");
        if (v["check"] == "published_domain_window") REQUIRE(v["verdict"] == "fail");
        if (v["check"] == "eigenvalue_comparison") REQUIRE(v["verdict"] == "pass");
        if (v["check"] == "richardson_consistency") REQUIRE(v["verdict"] == "pass");
    }
}

TEST_CASE("configuration problems exit 1 with a diagnostic", "[cli][errors]") {
    // supercritical exponents are rejected up front
    write_file("cli_scratch/badq.json", R"({
      "kind": "eig",
      "annulus": {"dim": 2, "r": 1.0, "R": 2.0, "dirichlet_on": "inner"},
      "p": 2.0, "q": 3.0, "seed": 1
    })");
    auto r = run_cli("eig --config cli_scratch/badq.json");
    REQUIRE(r.exit_code == 1);
    REQUIRE(r.err.find("config-error") != std::string::npos);
    REQUIRE(r.err.find("config.q") != std::string::npos);

    // grid pitch that does not tile the boxes
    write_file("cli_scratch/badh.json", R"({
      "kind": "rfk",
      "domain": {
        "outer": {"type": "box", "lo": [-0.5, -0.75, -1], "hi": [0.5, 0.75, 1]},
        "inner": {"type": "box", "lo": [-0.4, -0.65, -0.9], "hi": [0.4, 0.65, 0.9]},
        "dirichlet_on": "inner"
      },
      "rule": "AI", "h": 0.03, "seed": 1
    })");
    r = run_cli("rfk --config cli_scratch/badh.json");
    REQUIRE(r.exit_code == 1);
    REQUIRE(r.err.find("config-error") != std::string::npos);

    // the certified chain cannot run on the equal-area inner rule
    write_file("cli_scratch/aiweb.json", R"({
      "kind": "rfk",
      "domain": {
        "outer": {"type": "box", "lo": [-0.5, -0.75, -1], "hi": [0.5, 0.75, 1]},
        "inner": {"type": "box", "lo": [-0.4, -0.65, -0.9], "hi": [0.4, 0.65, 0.9]},
        "dirichlet_on": "inner"
      },
      "rule": "AI", "p": 2.5, "q": 2.0, "seed": 1
    })");
    r = run_cli("rfk --config cli_scratch/aiweb.json");
    REQUIRE(r.exit_code == 1);
    REQUIRE(r.err.find("AItilde") != std::string::npos);

    // subcommand and config kind must agree
    write_file("cli_scratch/quermass.json", cube_quermass_cfg);
    r = run_cli("nagy --config cli_scratch/quermass.json");
    REQUIRE(r.exit_code == 1);

    // a seed is mandatory
    write_file("cli_scratch/noseed.json", R"({
      "kind": "quermass",
      "shape": {"type": "box", "lo": [0, 0, 0], "hi": [1, 1, 1]}
    })");
    r = run_cli("quermass --config cli_scratch/noseed.json");
    REQUIRE(r.exit_code == 1);
    REQUIRE(r.err.find("seed") != std::string::npos);

    // missing and malformed config files
    r = run_cli("quermass --config cli_scratch/does_not_exist.json");
    REQUIRE(r.exit_code == 1);
    REQUIRE(r.err.find("io-error") != std::string::npos);
    write_file("cli_scratch/broken.json", "{not json");
    r = run_cli("quermass --config cli_scratch/broken.json");
    REQUIRE(r.exit_code == 1);
}
