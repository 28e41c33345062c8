#pragma once
// Experiment configuration: a single JSON document selects the computation
// kind, the domain or body it runs on, exponents, comparison rule, solver
// method and resolution, seed and output destination.  Validation happens at
// parse time with field-path diagnostics; numerical tolerances live here with
// documented defaults so reports are self-describing.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zaremba/common.hpp"
#include "zaremba/domain.hpp"
#include "zaremba/geometry.hpp"

namespace zaremba {

struct experiment_config {
    std::string kind;
    std::optional<domain_spec> domain;
    std::optional<convex_body> shape;    // body-only kinds (quermass, nagy)
    std::optional<annulus> annulus_cfg;  // explicit annulus for eig/torsion
    double p = 2.0, q = 2.0;
    annulus_rule rule = annulus_rule::AI;
    bool rule_set = false;
    std::string method = "radial";  // radial | grid
    double h = 0.05;                // grid pitch
    int mesh_nodes = 512;           // radial mesh cells
    int grid_size = 64;             // profile depth-grid cells
    long long samples = 200000;     // Monte Carlo samples per profile
    int count = 200;                // random bodies per dimension (suite)
    int spec_count = 8;             // random shell specs for profile lemmas (suite)
    std::vector<double> deltas;     // explicit parallel-set offsets (nagy)
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string output;  // report path; empty -> stdout
    std::string format = "json";
    // tolerances (defaults documented in the README): `analytic` guards
    // closed-form identities, `compare` is the relative slack for solver-level
    // comparisons.
    double tol_analytic = 1e-9;
    double tol_compare = 1e-6;
    nlohmann::ordered_json raw;  // canonical echo for reports
};

namespace config_detail {

using nlohmann::ordered_json;

[[noreturn]] inline void fail(const std::string& path, const std::string& why) {
    throw error("config-error", path + ": " + why);
}

inline const ordered_json& need(const ordered_json& j, const std::string& key,
                                const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing field");
    return *it;
}

inline double num(const ordered_json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

inline std::vector<double> vec(const ordered_json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(num(j[i], path));
    return out;
}

inline boundary_side side(const ordered_json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected \"inner\" or \"outer\"");
    std::string s = j.get<std::string>();
    if (s == "inner") return boundary_side::inner;
    if (s == "outer") return boundary_side::outer;
    fail(path, "expected \"inner\" or \"outer\"");
}

inline convex_body body(const ordered_json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a shape object");
    std::string type = need(j, "type", path).is_string()
                           ? need(j, "type", path).get<std::string>()
                           : (fail(path + ".type", "expected a string"), "");
    try {
        if (type == "ball")
            return make_ball(vec(need(j, "center", path), path + ".center"),
                             num(need(j, "radius", path), path + ".radius"));
        if (type == "box")
            return make_box(vec(need(j, "lo", path), path + ".lo"),
                            vec(need(j, "hi", path), path + ".hi"));
        if (type == "polytope_h") {
            const auto& nj = need(j, "normals", path);
            const auto& oj = need(j, "offsets", path);
            if (!nj.is_array() || !oj.is_array() || nj.size() != oj.size() || nj.empty())
                fail(path, "normals and offsets must be equal-length arrays");
            std::vector<facet> fs;
            int dim = -1;
            for (std::size_t i = 0; i < nj.size(); ++i) {
                facet f;
                f.normal = vec(nj[i], path + ".normals");
                f.offset = num(oj[i], path + ".offsets");
                if (dim < 0) dim = int(f.normal.size());
                if (int(f.normal.size()) != dim)
                    fail(path + ".normals", "inconsistent dimensions");
                fs.push_back(std::move(f));
            }
            return make_polytope(std::move(fs));
        }
    } catch (const error& e) {
        if (e.code == "config-error") throw;
        fail(path, e.what());
    }
    fail(path + ".type", "expected ball, box or polytope_h");
}

inline domain_spec domain(const ordered_json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a domain object");
    convex_body outer = body(need(j, "outer", path), path + ".outer");
    std::optional<convex_body> inner;
    auto it = j.find("inner");
    if (it != j.end() && !it->is_null()) inner = body(*it, path + ".inner");
    boundary_side d = side(need(j, "dirichlet_on", path), path + ".dirichlet_on");
    try {
        return make_domain(std::move(outer), std::move(inner), d);
    } catch (const error& e) {
        fail(path, e.what());
    }
}

inline annulus make_annulus_cfg(const ordered_json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an annulus object");
    try {
        return zaremba::make_annulus(int(num(need(j, "dim", path), path + ".dim")),
                                     num(need(j, "r", path), path + ".r"),
                                     num(need(j, "R", path), path + ".R"),
                                     side(need(j, "dirichlet_on", path), path + ".dirichlet_on"));
    } catch (const error& e) {
        if (e.code == "config-error") throw;
        fail(path, e.what());
    }
}

// Grid kinds are checked for lattice alignment already at parse time so a bad
// pitch surfaces as a config error with a field path, not as a late solver
// failure.
inline void check_alignment(const domain_spec& dom, double h, const std::string& path) {
    auto misfit = [&](double from, double to) {
        double steps = (to - from) / h;
        return std::fabs(steps - std::round(steps)) > 1e-9;
    };
    if (dom.outer.kind != body_kind::box) fail(path + ".domain.outer", "grid method needs a box");
    for (int d = 0; d < dom.outer.dim; ++d)
        if (misfit(dom.outer.lo[d], dom.outer.hi[d]))
            fail(path + ".h", "outer box span is not a multiple of h in coordinate " +
                                  std::to_string(d));
    if (dom.inner) {
        if (dom.inner->kind != body_kind::box)
            fail(path + ".domain.inner", "grid method needs a box");
        for (int d = 0; d < dom.outer.dim; ++d)
            if (misfit(dom.outer.lo[d], dom.inner->lo[d]) ||
                misfit(dom.outer.lo[d], dom.inner->hi[d]))
                fail(path + ".h", "inner box is not aligned to the grid in coordinate " +
                                      std::to_string(d));
    }
}

}  // namespace config_detail

inline experiment_config parse_config(const nlohmann::ordered_json& j) {
    using namespace config_detail;
    if (!j.is_object()) fail("config", "expected a JSON object");
    experiment_config cfg;
    cfg.raw = j;

    if (auto it = j.find("kind"); it != j.end()) {
        if (!it->is_string()) fail("config.kind", "expected a string");
        cfg.kind = it->get<std::string>();
    }
    static const char* kinds[] = {"quermass", "nagy", "annulus", "eig",
                                  "torsion",  "rfk",  "suite",   "paper-example"};
    if (!cfg.kind.empty()) {
        bool ok = false;
        for (auto* k : kinds) ok = ok || cfg.kind == k;
        if (!ok) fail("config.kind", "unknown kind: " + cfg.kind);
    }

    if (auto it = j.find("domain"); it != j.end() && !it->is_null())
        cfg.domain = domain(*it, "config.domain");
    if (auto it = j.find("shape"); it != j.end() && !it->is_null())
        cfg.shape = body(*it, "config.shape");
    if (auto it = j.find("annulus"); it != j.end() && !it->is_null())
        cfg.annulus_cfg = make_annulus_cfg(*it, "config.annulus");

    if (auto it = j.find("p"); it != j.end()) cfg.p = num(*it, "config.p");
    if (auto it = j.find("q"); it != j.end()) cfg.q = num(*it, "config.q");
    if (!(cfg.p > 1.0)) fail("config.p", "p must exceed 1");
    if (!(cfg.q >= 1.0)) fail("config.q", "q must be at least 1");
    if (cfg.q > cfg.p)
        fail("config.q",
             "q must satisfy q <= p (the normalized eigenvalue problem is considered for "
             "subhomogeneous exponents only)");

    if (auto it = j.find("rule"); it != j.end()) {
        if (!it->is_string()) fail("config.rule", "expected AO, AI or AItilde");
        std::string s = it->get<std::string>();
        if (s == "AO")
            cfg.rule = annulus_rule::AO;
        else if (s == "AI")
            cfg.rule = annulus_rule::AI;
        else if (s == "AItilde")
            cfg.rule = annulus_rule::AItilde;
        else
            fail("config.rule", "expected AO, AI or AItilde");
        cfg.rule_set = true;
    }

    if (auto it = j.find("method"); it != j.end()) {
        if (!it->is_string() ||
            (it->get<std::string>() != "radial" && it->get<std::string>() != "grid"))
            fail("config.method", "expected radial or grid");
        cfg.method = it->get<std::string>();
    }
    if (auto it = j.find("h"); it != j.end()) {
        cfg.h = num(*it, "config.h");
        if (!(cfg.h > 0.0)) fail("config.h", "grid pitch must be positive");
    }
    if (auto it = j.find("mesh_nodes"); it != j.end()) {
        cfg.mesh_nodes = int(num(*it, "config.mesh_nodes"));
        if (cfg.mesh_nodes < 64) fail("config.mesh_nodes", "radial mesh needs at least 64 cells");
    }
    if (auto it = j.find("grid_size"); it != j.end()) {
        cfg.grid_size = int(num(*it, "config.grid_size"));
        if (cfg.grid_size < 8) fail("config.grid_size", "profile grid needs at least 8 cells");
    }
    if (auto it = j.find("samples"); it != j.end()) {
        cfg.samples = (long long)num(*it, "config.samples");
        if (cfg.samples < 10000) fail("config.samples", "Monte Carlo needs at least 10^4 samples");
    }
    if (auto it = j.find("count"); it != j.end()) {
        cfg.count = int(num(*it, "config.count"));
        if (cfg.count < 1) fail("config.count", "need at least one random body");
    }
    if (auto it = j.find("spec_count"); it != j.end()) {
        cfg.spec_count = int(num(*it, "config.spec_count"));
        if (cfg.spec_count < 0) fail("config.spec_count", "must be nonnegative");
    }
    if (auto it = j.find("deltas"); it != j.end() && !it->is_null())
        cfg.deltas = vec(*it, "config.deltas");
    if (auto it = j.find("seed"); it != j.end()) {
        if (!it->is_number_unsigned() && !it->is_number_integer())
            fail("config.seed", "expected an unsigned integer");
        cfg.seed = it->get<std::uint64_t>();
        cfg.seed_set = true;
    }
    if (auto it = j.find("output"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) fail("config.output", "expected a path string");
        cfg.output = it->get<std::string>();
    }
    if (auto it = j.find("format"); it != j.end()) {
        if (!it->is_string() ||
            (it->get<std::string>() != "csv" && it->get<std::string>() != "json"))
            fail("config.format", "expected csv or json");
        cfg.format = it->get<std::string>();
    }
    if (auto it = j.find("tolerances"); it != j.end() && !it->is_null()) {
        if (!it->is_object()) fail("config.tolerances", "expected an object");
        if (auto a = it->find("analytic"); a != it->end())
            cfg.tol_analytic = num(*a, "config.tolerances.analytic");
        if (auto c = it->find("compare"); c != it->end())
            cfg.tol_compare = num(*c, "config.tolerances.compare");
        if (!(cfg.tol_analytic > 0.0) || !(cfg.tol_compare > 0.0))
            fail("config.tolerances", "tolerances must be positive");
    }

    if (cfg.domain) {
        bool rfk_grid = cfg.kind == "rfk" && cfg.p == 2.0 && cfg.q == 2.0 &&
                        cfg.domain->outer.kind == body_kind::box &&
                        (!cfg.domain->inner || cfg.domain->inner->kind == body_kind::box);
        if (cfg.method == "grid" || rfk_grid) check_alignment(*cfg.domain, cfg.h, "config");
    }
    return cfg;
}

inline experiment_config load_config(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw error("io-error", "could not open the config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
        throw error("config-error", std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(j);
}

}  // namespace zaremba
