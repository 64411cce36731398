#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "knotgauss/enumerate.hpp"

using json = nlohmann::json;
using namespace kg;

namespace {

constexpr const char* kSchemaVersion = "1";

struct Reporter {
    json payload;
    std::string command;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    int finish(int code) {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["command"] = command;
        out["payload"] = payload;
        out["elapsed_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << out.dump(2) << "\n";
        return code;
    }
};

KnotDiagram diagram_from_options(const std::string& code, const std::string& format,
                                 const std::string& knot_name) {
    if (!knot_name.empty()) {
        const char* env = std::getenv("KNOTGAUSS_FIXTURES");
        std::string dir = env ? env : "fixtures";
        for (auto& [name, d] : load_knot_table(dir + "/knots.gauss"))
            if (name == knot_name) return d;
        throw ParseError("no fixture named " + knot_name);
    }
    if (format == "pd") return parse_pd_code(code);
    if (format == "gauss") return build_diagram(parse_gauss_code(code));
    for (char c : code) {
        if (std::isspace((unsigned char)c)) continue;
        return (c == 'X' || c == 'x') ? parse_pd_code(code)
                                      : build_diagram(parse_gauss_code(code));
    }
    return build_diagram(parse_gauss_code(code));
}

json report_json(const InvariantReport& r) {
    return {{"v2", r.v2},      {"v3", r.v3}, {"lk", r.lk}, {"writhe", r.writhe},
            {"crossings", r.c}, {"seifert_circles", r.s},  {"genus", r.g},
            {"status", r.status.str()}};
}

DiagramFilter parse_filter(const std::string& spec, int min_c, int max_c) {
    DiagramFilter f;
    f.min_c = min_c;
    f.max_c = max_c;
    std::string token;
    std::stringstream ss(spec);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        if (token == "connected")
            f.connected = true;
        else if (token == "reduced")
            f.reduced = true;
        else if (token == "bireduced")
            f.bireduced = true;
        else if (token == "no-clasp")
            f.no_clasp = true;
        else if (token == "positive")
            f.pos = DiagramFilter::Pos::Positive;
        else if (token == "almost-positive")
            f.pos = DiagramFilter::Pos::AlmostPositive;
        else if (token.rfind("k-negative=", 0) == 0) {
            f.pos = DiagramFilter::Pos::KNegative;
            f.k_negative = std::stoi(token.substr(11));
        } else if (token == "any") {
            f.pos = DiagramFilter::Pos::Any;
        } else {
            throw ParseError("unknown filter token: " + token);
        }
    }
    return f;
}

int run_compute(const std::string& code, const std::string& format,
                const std::string& knot, const std::string& which) {
    Reporter rep;
    rep.command = "compute";
    auto d = diagram_from_options(code, format, knot);
    auto full = invariant_report(d);
    json all = report_json(full);
    if (which == "all") {
        rep.payload = all;
    } else {
        std::stringstream ss(which);
        std::string token;
        while (std::getline(ss, token, ',')) {
            if (token == "genus") {
                rep.payload["crossings"] = all["crossings"];
                rep.payload["seifert_circles"] = all["seifert_circles"];
                rep.payload["genus"] = all["genus"];
            } else if (all.contains(token)) {
                rep.payload[token] = all[token];
            } else {
                throw ParseError("unknown invariant: " + token);
            }
        }
    }
    rep.payload["code"] = serialize_gauss_code(d.code);
    return rep.finish(0);
}

int run_oracle(const std::string& code, const std::string& format,
               const std::string& knot, const std::string& emit,
               const std::string& check, int max_crossings) {
    Reporter rep;
    rep.command = "oracle";
    if (!check.empty()) {
        long long checked = 0, failures = 0;
        DiagramFilter f;
        f.min_c = 0;
        f.max_c = max_crossings;
        f.pos = DiagramFilter::Pos::Any;
        for_each_diagram(f, [&](const KnotDiagram& d) {
            ++checked;
            auto g = to_gauss_diagram(d);
            bool ok = true;
            if (check == "v2-jones") {
                ok = vassiliev_from_jones(jones(d)).first == v2(g);
            } else if (check == "v3-jones") {
                ok = vassiliev_from_jones(jones(d)).second == v3(g);
            } else if (check == "v2-conway") {
                ok = conway(d).z2_coefficient() == v2(g);
            } else {
                throw ParseError("unknown oracle check: " + check);
            }
            if (!ok) ++failures;
        });
        rep.payload["check"] = check;
        rep.payload["max_crossings"] = max_crossings;
        rep.payload["diagrams_checked"] = checked;
        rep.payload["failures"] = failures;
        return rep.finish(failures == 0 ? 0 : 1);
    }
    auto d = diagram_from_options(code, format, knot);
    std::stringstream ss(emit);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "jones") {
            rep.payload["jones"] = jones(d).str("t");
        } else if (token == "conway") {
            rep.payload["conway"] = conway(d).str();
        } else if (token == "sigma") {
            auto r = signature_and_det(d);
            rep.payload["sigma_paper"] = r.sigma_paper;
            rep.payload["sigma_standard"] = r.sigma_standard;
        } else if (token == "det") {
            auto r = signature_and_det(d);
            rep.payload["det_signed"] = r.det_signed;
            rep.payload["det_abs"] = r.det_abs;
        } else if (token == "vassiliev") {
            auto [a, b] = vassiliev_from_jones(jones(d));
            rep.payload["v2_from_jones"] = a;
            rep.payload["v3_from_jones"] = b;
        } else {
            throw ParseError("unknown oracle output: " + token);
        }
    }
    rep.payload["code"] = serialize_gauss_code(d.code);
    return rep.finish(0);
}

int run_make(int twist_n, const std::string& variant, const std::string& pretzel,
             const std::string& torus) {
    Reporter rep;
    rep.command = "make";
    KnotDiagram d;
    if (twist_n > 0) {
        auto v = variant == "apu" ? TwistVariant::AlmostPositiveUnknot
                                  : TwistVariant::Alternating;
        d = twist_knot_diagram(twist_n, v);
        rep.payload["construction"] = "twist";
    } else if (!pretzel.empty()) {
        int p, q, r;
        if (std::sscanf(pretzel.c_str(), "%d,%d,%d", &p, &q, &r) != 3)
            throw ParseError("--pretzel expects p,q,r");
        d = pretzel_diagram(p, q, r);
        rep.payload["construction"] = "pretzel";
    } else if (!torus.empty()) {
        int p, q;
        if (std::sscanf(torus.c_str(), "%d,%d", &p, &q) != 2)
            throw ParseError("--torus expects p,q");
        d = torus_braid_diagram(p, q);
        rep.payload["construction"] = "torus";
    } else {
        throw ParseError("make needs one of --twist/--pretzel/--torus");
    }
    rep.payload["code"] = serialize_gauss_code(d.code);
    rep.payload["invariants"] = report_json(invariant_report(d));
    return rep.finish(0);
}

int run_double(const std::string& code, const std::string& format,
               const std::string& knot, const std::string& clasp) {
    Reporter rep;
    rep.command = "double";
    auto companion = diagram_from_options(code, format, knot);
    int cs = clasp == "-" ? -1 : 1;
    auto d = whitehead_double(companion, cs);
    rep.payload["clasp"] = cs;
    rep.payload["code"] = serialize_gauss_code(d.code);
    rep.payload["invariants"] = report_json(invariant_report(d));
    return rep.finish(0);
}

int run_move(const std::string& code, const std::string& format,
             const std::string& knot, const std::string& op, int at,
             const std::string& side) {
    Reporter rep;
    rep.command = "move";
    auto d = diagram_from_options(code, format, knot);
    KnotDiagram out;
    if (op == "reduce") {
        out = reduce(d);
    } else if (op == "t2bar") {
        out = apply_t2bar(d, at);
    } else if (op == "resolve-clasp") {
        auto clasps = find_clasps(d);
        const ClaspRecord* pick = nullptr;
        for (auto& cl : clasps)
            if (cl.kind == ClaspKind::Resolved && (at == 0 || cl.a == at || cl.b == at)) {
                pick = &cl;
                break;
            }
        if (!pick)
            throw MoveError("no resolved clasp" +
                            std::string(at ? " at that crossing" : " in the diagram"));
        out = resolve_clasp(d, *pick);
    } else if (op == "loop") {
        out = loop_move(d, at, side == "right" ? LoopSide::Right : LoopSide::Left);
    } else {
        throw ParseError("unknown move op: " + op);
    }
    rep.payload["op"] = op;
    rep.payload["code"] = serialize_gauss_code(out.code);
    rep.payload["invariants"] = report_json(invariant_report(out));
    return rep.finish(0);
}

int run_enumerate(const std::string& range, const std::string& filter_spec,
                  const std::string& emit) {
    Reporter rep;
    rep.command = "enumerate";
    int lo = 0, hi = 0;
    if (std::sscanf(range.c_str(), "%d..%d", &lo, &hi) != 2) {
        if (std::sscanf(range.c_str(), "%d", &lo) == 1)
            hi = lo;
        else
            throw ParseError("--crossings expects a..b or a single number");
    }
    auto f = parse_filter(filter_spec, lo, hi);
    if (emit == "count") {
        long long n = 0;
        for_each_diagram(f, [&](const KnotDiagram&) { ++n; });
        rep.payload["count"] = n;
        return rep.finish(0);
    }
    if (emit == "codes") {
        json codes = json::array();
        for_each_diagram(f, [&](const KnotDiagram& d) {
            codes.push_back(serialize_gauss_code(d.code));
        });
        rep.payload["codes"] = codes;
        return rep.finish(0);
    }
    if (emit == "csv") {
        // csv goes straight to stdout; no JSON envelope
        std::cout << "code,c,s,g,lk,v2,v3,writhe,status\n";
        for_each_diagram(f, [&](const KnotDiagram& d) {
            auto r = invariant_report(d);
            std::cout << serialize_gauss_code(d.code) << "," << r.c << "," << r.s << ","
                      << r.g << "," << r.lk << "," << r.v2 << "," << r.v3 << ","
                      << r.writhe << "," << r.status.str() << "\n";
        });
        return 0;
    }
    throw ParseError("unknown emit mode: " + emit);
}

int run_verify(const std::string& theorem, const std::string& property, int max_c,
               const std::string& report_path, int samples, std::uint64_t seed) {
    Reporter rep;
    rep.command = "verify";
    if (!property.empty()) {
        if (property != "loop-sigma")
            throw ParseError("unknown property: " + property);
        std::vector<KnotDiagram> pool;
        DiagramFilter f;
        f.min_c = 3;
        f.max_c = std::min(max_c, 8);
        f.pos = DiagramFilter::Pos::Positive;
        f.connected = true;
        for_each_diagram(f, [&](const KnotDiagram& d) { pool.push_back(d); });
        std::mt19937_64 rng(seed);
        long long tried = 0, violations = 0;
        while (tried < samples) {
            const auto& d = pool[rng() % pool.size()];
            int k = 1 + (int)(rng() % d.crossings());
            auto side = rng() % 2 ? LoopSide::Left : LoopSide::Right;
            try {
                auto after = loop_move(d, k, side);
                ++tried;
                if (sigma_paper_only(after) > sigma_paper_only(d)) ++violations;
            } catch (const MoveError&) {
            }
        }
        rep.payload["property"] = property;
        rep.payload["samples"] = tried;
        rep.payload["seed"] = seed;
        rep.payload["violations"] = violations;
        return rep.finish(violations == 0 ? 0 : 1);
    }
    auto id = theorem_from_string(theorem);
    auto r = verify_theorem(id, max_c);
    json payload;
    payload["theorem"] = r.theorem;
    payload["max_crossings"] = r.max_crossings;
    payload["filter"] = r.filter;
    payload["diagrams_scanned"] = r.diagrams_scanned;
    payload["counterexamples"] = r.counterexamples;
    payload["elapsed_seconds"] = r.elapsed_seconds;
    payload["pass"] = r.pass();
    rep.payload = payload;
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << json(payload).dump(2) << "\n";
    }
    return rep.finish(r.pass() ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-sum Vassiliev invariants and diagram moves on knot diagrams"};
    app.require_subcommand(1);

    int jobs = 0;
    app.add_option("--jobs", jobs, "cap worker threads");

    std::string code, format = "auto", knot;
    auto add_code_opts = [&](CLI::App* sub) {
        sub->add_option("--code", code, "gauss or PD code text");
        sub->add_option("--format", format, "gauss|pd|auto");
        sub->add_option("--knot", knot, "fixture name (see KNOTGAUSS_FIXTURES)");
    };

    auto* compute = app.add_subcommand("compute", "invariants of one diagram");
    std::string invariants = "all";
    add_code_opts(compute);
    compute->add_option("--invariants", invariants, "comma list or 'all'");

    auto* oracle = app.add_subcommand("oracle", "classical polynomial oracles");
    std::string emit = "jones,conway,sigma,det", check;
    int oracle_max_c = 5;
    add_code_opts(oracle);
    oracle->add_option("--emit", emit, "jones,conway,sigma,det,vassiliev");
    oracle->add_option("--check", check, "v2-jones|v3-jones|v2-conway");
    oracle->add_option("--max-crossings", oracle_max_c, "identity suite bound");

    auto* make = app.add_subcommand("make", "parameterized diagram generators");
    int twist_n = 0;
    std::string variant = "alt", pretzel, torus;
    make->add_option("--twist", twist_n, "twist knot with n crossings");
    make->add_option("--variant", variant, "alt|apu");
    make->add_option("--pretzel", pretzel, "p,q,r");
    make->add_option("--torus", torus, "p,q");

    auto* dbl = app.add_subcommand("double", "untwisted Whitehead double");
    std::string clasp = "+";
    add_code_opts(dbl);
    dbl->add_option("--clasp", clasp, "+ or -");

    auto* move = app.add_subcommand("move", "diagram moves");
    std::string op, side = "left";
    int at = 0;
    add_code_opts(move);
    move->add_option("--op", op, "reduce|t2bar|resolve-clasp|loop")->required();
    move->add_option("--at", at, "crossing label");
    move->add_option("--side", side, "left|right (loop move)");

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive diagram streams");
    std::string range = "0..5", filter_spec = "any", emode = "count";
    enumerate->add_option("--crossings", range, "a..b");
    enumerate->add_option("--filter", filter_spec,
                          "positive,almost-positive,k-negative=K,connected,"
                          "reduced,bireduced,no-clasp");
    enumerate->add_option("--emit", emode, "count|codes|csv");

    auto* verify = app.add_subcommand("verify", "theorem and property suites");
    std::string theorem, property, report_path;
    int verify_max_c = 7, samples = 1000;
    std::uint64_t seed = 20080814;
    verify->add_option("--theorem", theorem, "th1|th2|th3|lm2|lk43|t2bar|sigma");
    verify->add_option("--property", property, "loop-sigma");
    verify->add_option("--max-crossings", verify_max_c, "scan bound");
    verify->add_option("--report", report_path, "also write payload to file");
    verify->add_option("--samples", samples, "sample count for properties");
    verify->add_option("--seed", seed, "PRNG seed for sampled properties");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    try {
        if (*compute) return run_compute(code, format, knot, invariants);
        if (*oracle) return run_oracle(code, format, knot, emit, check, oracle_max_c);
        if (*make) return run_make(twist_n, variant, pretzel, torus);
        if (*dbl) return run_double(code, format, knot, clasp);
        if (*move) return run_move(code, format, knot, op, at, side);
        if (*enumerate) return run_enumerate(range, filter_spec, emode);
        if (*verify)
            return run_verify(theorem, property, verify_max_c, report_path, samples, seed);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
