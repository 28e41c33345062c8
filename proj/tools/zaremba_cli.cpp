// Command line front end.  Every subcommand maps one-to-one onto a report
// kind; the JSON config carries the problem description and the flags only
// override delivery details (seed, output path, format).  Reports are byte
// stable for a fixed seed and config, so timing goes to stderr only.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "zaremba/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for mixed-boundary shell eigenvalue comparisons"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_path;
    std::string format;
    std::uint64_t seed = 0;

    struct entry {
        const char* name;
        const char* blurb;
    };
    const entry entries[] = {
        {"quermass", "quermassintegrals, matched-ball radii and the radius chain of a body"},
        {"nagy", "parallel-set perimeter inequalities for a convex body"},
        {"annulus", "comparison annulus of a shell under a matching rule"},
        {"eig", "one eigenvalue solve (radial annulus or grid box shell)"},
        {"torsion", "torsional rigidity comparison against the matched annulus"},
        {"rfk", "eigenvalue comparison tau(domain) <= tau(annulus)"},
        {"suite", "randomized property sweep over bodies and shells"},
        {"paper-example", "the pinned three-dimensional box shell example"},
    };
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.blurb);
        sub->add_option("--config", config_path, "JSON configuration file");
        sub->add_option("--output", output_path, "report file (default: stdout)");
        sub->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", seed, "random seed recorded in the report");
    }

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();

    try {
        zaremba::experiment_config cfg;
        if (!config_path.empty()) cfg = zaremba::load_config(config_path);
        if (cfg.kind.empty())
            cfg.kind = sub->get_name();
        else if (cfg.kind != sub->get_name())
            throw zaremba::error("config-error", "config.kind: the config selects '" + cfg.kind +
                                                     "' but the subcommand is '" +
                                                     sub->get_name() + "'");
        if (sub->count("--seed") > 0) {
            cfg.seed = seed;
            cfg.seed_set = true;
        }
        if (sub->count("--output") > 0) cfg.output = output_path;
        if (sub->count("--format") > 0) cfg.format = format;

        auto t0 = std::chrono::steady_clock::now();
        zaremba::run_report rep = zaremba::run_experiment(cfg);
        zaremba::write_report(rep, cfg.output, cfg.format);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::fprintf(stderr, "runtime_seconds %.3f\n", secs);
        return rep.pass() ? 0 : 2;
    } catch (const zaremba::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: unexpected: %s\n", e.what());
        return 1;
    }
}
