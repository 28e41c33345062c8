#pragma once
// Report assembly and byte-stable serialization.
//
// A run report carries the canonical config echo, the seed, scalar results
// and inequality verdicts.  Serialization is deterministic for a fixed
// (config, seed): scalars keep insertion order, JSON uses the ordered dump of
// nlohmann::json, CSV is printf-formatted with 10 significant digits.
// Wall-clock timing never enters the report (the CLI prints it to stderr), so
// reruns of the same configuration are byte-identical.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zaremba/common.hpp"
#include "zaremba/inequalities.hpp"

namespace zaremba {

inline constexpr const char* library_version = "1.0.0";

// 64-bit FNV-1a over the canonical config dump; embedded in every report so
// archived results can be matched to the exact configuration that made them.
inline std::string config_hash(const nlohmann::ordered_json& config) {
    std::string dump = config.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct run_verdict {
    std::string name;
    double parameter = 0.0;  // worst-sample coordinate
    double lhs = 0.0, rhs = 0.0;
    double slack = 0.0;
    bool pass = true;
};

struct run_report {
    std::string kind;
    std::uint64_t seed = 0;
    nlohmann::ordered_json config;
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<run_verdict> verdicts;

    void add_scalar(const std::string& name, double value) { scalars.push_back({name, value}); }

    void add_verdict(run_verdict v) { verdicts.push_back(std::move(v)); }

    // fold an inequality report into one verdict row at its worst sample
    void add_verdict(const inequality_report& rep) {
        run_verdict v;
        v.name = rep.name;
        v.pass = rep.pass;
        double worst = std::numeric_limits<double>::infinity();
        for (const auto& s : rep.samples)
            if (s.slack < worst) {
                worst = s.slack;
                v.parameter = s.parameter;
                v.lhs = s.lhs;
                v.rhs = s.rhs;
                v.slack = s.slack;
            }
        verdicts.push_back(std::move(v));
    }

    bool pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }
};

namespace detail {

inline std::string fmt10(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const run_report& rep) {
    nlohmann::ordered_json j;
    j["tool"] = "zaremba";
    j["version"] = library_version;
    j["kind"] = rep.kind;
    j["seed"] = rep.seed;
    j["config_hash"] = config_hash(rep.config);
    j["config"] = rep.config;
    nlohmann::ordered_json sc = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.scalars) sc[k] = v;
    j["scalars"] = sc;
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const auto& v : rep.verdicts) {
        nlohmann::ordered_json e;
        e["check"] = v.name;
        e["parameter"] = v.parameter;
        e["lhs"] = v.lhs;
        e["rhs"] = v.rhs;
        e["slack"] = v.slack;
        e["verdict"] = v.pass ? "pass" : "fail";
        vs.push_back(e);
    }
    j["verdicts"] = vs;
    j["pass"] = rep.pass();
    return j;
}

inline std::string render_report(const run_report& rep, const std::string& format) {
    if (format == "json") return report_to_json(rep).dump(2) + "\n";
    if (format != "csv") throw error("config-error", "format must be csv or json");
    std::string out = "record,name,value,parameter,lhs,rhs,slack,verdict\n";
    auto meta = [&](const std::string& k, const std::string& v) {
        out += "meta," + k + "," + v + ",,,,,\n";
    };
    meta("tool", "zaremba");
    meta("version", library_version);
    meta("kind", rep.kind);
    meta("seed", std::to_string(rep.seed));
    meta("config_hash", config_hash(rep.config));
    for (const auto& [k, v] : rep.scalars)
        out += "scalar," + k + "," + detail::fmt10(v) + ",,,,,\n";
    for (const auto& v : rep.verdicts)
        out += "verdict," + v.name + ",," + detail::fmt10(v.parameter) + "," +
               detail::fmt10(v.lhs) + "," + detail::fmt10(v.rhs) + "," + detail::fmt10(v.slack) +
               "," + (v.pass ? "pass" : "fail") + "\n";
    return out;
}

// empty path -> stdout
inline void write_report(const run_report& rep, const std::string& path,
                         const std::string& format) {
    std::string body = render_report(rep, format);
    if (path.empty()) {
        if (std::fwrite(body.data(), 1, body.size(), stdout) != body.size())
            throw error("io-error", "could not write the report to stdout");
        std::fflush(stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw error("io-error", "could not open the report file: " + path);
    f.write(body.data(), std::streamsize(body.size()));
    if (!f) throw error("io-error", "could not write the report file: " + path);
}

}  // namespace zaremba
