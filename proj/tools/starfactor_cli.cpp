// Command-line surface over the starfactor C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "starfactor.h"

using nlohmann::json;

namespace {

struct InputOpts {
    std::string g6;
    std::string path;
    std::string format = "graph6";
};

struct Bounds {
    int cert_n = 16;
    int color_edges = 40;
};

int thread_count() {
    const char* env = std::getenv("STARFACTOR_THREADS");
    if (!env) return 1;
    int t = std::atoi(env);
    return t >= 1 ? t : 1;
}

void add_input_opts(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--g6", in.g6, "inline graph6 string");
    cmd->add_option("--input", in.path, "input file path");
    cmd->add_option("--format", in.format, "graph6|edgelist|dimacs")->default_val("graph6");
}

// exit code 1 on any input problem
sf_graph* load_graph(const InputOpts& in) {
    if (in.g6.empty() == in.path.empty()) {
        std::cerr << "error: provide exactly one input source (--g6 or --input)\n";
        std::exit(1);
    }
    std::string text = in.g6;
    if (!in.path.empty()) {
        std::ifstream f(in.path);
        if (!f) {
            std::cerr << "error: cannot open " << in.path << "\n";
            std::exit(1);
        }
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    sf_graph* g = nullptr;
    int rc = sf_parse(text.c_str(), in.format.c_str(), &g);
    if (rc != SF_OK) {
        std::cerr << "error: " << sf_last_error() << "\n";
        std::exit(rc == SF_ERR_BOUND ? 2 : 1);
    }
    return g;
}

std::pair<int, int> parse_edge(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) {
        std::cerr << "error: --edge expects u,v\n";
        std::exit(1);
    }
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (...) {
        std::cerr << "error: --edge expects integers u,v\n";
        std::exit(1);
    }
}

void apply_bound_overrides(const std::vector<std::string>& overrides, Bounds& b) {
    for (const auto& kv : overrides) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: --bound-override expects name=value\n";
            std::exit(1);
        }
        std::string name = kv.substr(0, eq);
        int value = std::atoi(kv.c_str() + eq + 1);
        if (value < 1) {
            std::cerr << "error: bound must be >= 1\n";
            std::exit(1);
        }
        if (name == "cert_n") b.cert_n = value;
        else if (name == "color_edges") b.color_edges = value;
        else {
            std::cerr << "error: unknown bound '" << name << "' (known: cert_n, color_edges)\n";
            std::exit(1);
        }
    }
}

// run a C API call, print result, map error codes to exit codes
int emit(int rc, char* out, bool as_json, const std::function<void(const json&)>& pretty) {
    if (rc != SF_OK) {
        std::cerr << "error: " << sf_last_error() << "\n";
        return rc == SF_ERR_ARG ? 1 : rc;
    }
    std::string body(out);
    sf_free_string(out);
    if (as_json) {
        std::cout << body << "\n";
    } else {
        pretty(json::parse(body));
    }
    return 0;
}

std::string join_ints(const json& arr) {
    std::string s;
    for (const auto& v : arr) {
        if (!s.empty()) s += " ";
        s += std::to_string(v.get<int>());
    }
    return s.empty() ? "-" : s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"starfactor: fractional matchings, star-cycle factors, and critical-graph audits"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");
    std::vector<std::string> overrides;
    app.add_option("--bound-override", overrides, "override a size bound, name=value (cert_n, color_edges)");

    InputOpts in;
    std::string edge_str;
    int max_star = 0;
    int scan_n = 0;
    int random_count = 0;
    unsigned long long seed = 20240601ull;
    std::string cache;

    auto* analyze = app.add_subcommand("analyze", "matching numbers and Gallai-Edmonds structure");
    add_input_opts(analyze, in);

    auto* factor = app.add_subcommand("factor", "minimal star-cycle factor (optionally through an edge)");
    add_input_opts(factor, in);
    factor->add_option("--edge", edge_str, "require edge u,v in a {K11,K12,Cm}-factor");
    factor->add_option("--max-star", max_star, "star size cap (0 = automatic)");

    auto* edge_test = app.add_subcommand("edge-test", "per-edge factor membership and forced-zero test");
    add_input_opts(edge_test, in);
    edge_test->add_option("--edge", edge_str, "edge u,v")->required();

    auto* critical = app.add_subcommand("critical", "edge-chromatic criticality audit");
    add_input_opts(critical, in);
    critical->add_option("--scan", scan_n, "audit all connected graphs up to this order");

    auto* verify = app.add_subcommand("verify", "oracle-equivalence suite over the small-graph corpus");
    verify->add_option("--scan", scan_n, "corpus bound (default 6)")->default_val(6);
    verify->add_option("--cache", cache, "corpus cache file, one graph6 per line");
    verify->add_option("--random", random_count, "extra seeded random connected graphs (8..12 vertices)");
    verify->add_option("--seed", seed, "seed for randomized sampling");

    CLI11_PARSE(app, argc, argv);
    Bounds bounds;
    apply_bound_overrides(overrides, bounds);
    int threads = thread_count();

    if (analyze->parsed()) {
        sf_graph* g = load_graph(in);
        char* out = nullptr;
        int rc = emit(sf_analyze(g, &out), out, as_json, [](const json& j) {
            std::cout << "graph      " << j["graph6"].get<std::string>() << "\n"
                      << "mu         " << j["mu"] << "    def " << j["def"] << "    mu_f " << j["mu_f"].get<std::string>()
                      << "    n " << j["n"] << "    nc " << j["nc"] << "\n"
                      << "D          " << join_ints(j["D"]) << "\n"
                      << "A          " << join_ints(j["A"]) << "\n"
                      << "C          " << join_ints(j["C"]) << "\n"
                      << "D+         " << join_ints(j["d_plus"]) << "\n"
                      << "D-         " << join_ints(j["d_minus"]) << "\n"
                      << "witness    " << join_ints(j["witness"]) << "\n";
        });
        sf_graph_free(g);
        return rc;
    }

    auto print_factor = [](const json& f) {
        for (const auto& s : f["stars"])
            std::cout << "star  center " << s["center"] << "  leaves " << join_ints(s["leaves"]) << "\n";
        for (const auto& c : f["cycles"]) std::cout << "cycle " << join_ints(c) << "\n";
        std::cout << "n " << f["n"] << "   max star " << f["lambda_achieved"] << "\n";
    };

    if (factor->parsed()) {
        sf_graph* g = load_graph(in);
        char* out = nullptr;
        int rc;
        if (!edge_str.empty()) {
            auto [u, v] = parse_edge(edge_str);
            rc = emit(sf_factor_with_edge(g, u, v, bounds.cert_n, &out), out, as_json, [&](const json& j) {
                if (j["excluded"].get<bool>()) {
                    std::cout << "edge " << j["edge"][0] << "-" << j["edge"][1]
                              << " lies in no {K11,K12,Cm}-factor\n";
                    if (j.contains("certificate"))
                        std::cout << "certificate S = {" << join_ints(j["certificate"]["S"]) << "}  iso(G-S) = "
                                  << j["certificate"]["iso"] << "\n";
                } else {
                    print_factor(j["factor"]);
                }
            });
        } else {
            rc = emit(sf_build_factor(g, max_star, &out), out, as_json, [&](const json& j) {
                if (j.contains("factor") && j["factor"].is_null()) {
                    std::cout << "no factor with star cap: " << j["reason"].get<std::string>() << "\n";
                    if (j.contains("witness_S"))
                        std::cout << "witness S = {" << join_ints(j["witness_S"]) << "}  iso(G-S) = " << j["iso"] << "\n";
                } else if (j.contains("factor")) {
                    print_factor(j["factor"]);
                } else {
                    print_factor(j);
                }
            });
        }
        sf_graph_free(g);
        return rc;
    }

    if (edge_test->parsed()) {
        sf_graph* g = load_graph(in);
        auto [u, v] = parse_edge(edge_str);
        char* out = nullptr;
        int rc = emit(sf_edge_test(g, u, v, bounds.cert_n, &out), out, as_json, [](const json& j) {
            std::cout << "edge " << j["edge"][0] << "-" << j["edge"][1] << ": "
                      << (j["in_some_factor"].get<bool>() ? "in some {K11,K12,Cm}-factor" : "in no factor")
                      << ", forced_zero=" << (j["forced_zero"].get<bool>() ? "true" : "false") << "\n";
            if (j.contains("certificate"))
                std::cout << "certificate S = {" << join_ints(j["certificate"]["S"]) << "}  iso(G-S) = "
                          << j["certificate"]["iso"] << "\n";
        });
        sf_graph_free(g);
        return rc;
    }

    if (critical->parsed()) {
        char* out = nullptr;
        if (scan_n > 0) {
            return emit(sf_critical_scan(scan_n, bounds.color_edges, threads, &out), out, as_json, [](const json& j) {
                std::cout << "scanned " << j["scanned"] << " connected graphs up to n = " << j["n_max"] << "\n";
                for (const auto& g : j["critical"]) {
                    std::cout << g["graph6"].get<std::string>() << "  k=" << g["k"]
                              << "  theorems=" << (g["theorems_hold"].get<bool>() ? "pass" : "FAIL")
                              << "  conjectures=" << (g["conjectures_hold"].get<bool>() ? "pass" : "FAIL") << "\n";
                }
            });
        }
        sf_graph* g = load_graph(in);
        int rc = emit(sf_critical_report(g, bounds.color_edges, &out), out, as_json, [](const json& j) {
            std::cout << "delta " << j["delta"] << "  chi' " << j["chi_prime"] << "  critical "
                      << (j["critical"].get<bool>() ? "yes" : "no") << "\n";
            if (j.contains("checks"))
                for (const auto& [name, chk] : j["checks"].items())
                    std::cout << "  " << name << ": " << (chk["holds"].get<bool>() ? "pass" : "FAIL") << "\n";
        });
        sf_graph_free(g);
        return rc;
    }

    if (verify->parsed()) {
        char* out = nullptr;
        int rc = sf_verify(scan_n, cache.empty() ? nullptr : cache.c_str(), random_count, seed, threads, &out);
        if (rc != SF_OK) {
            std::cerr << "error: " << sf_last_error() << "\n";
            return rc == SF_ERR_ARG ? 1 : rc;
        }
        std::string body(out);
        sf_free_string(out);
        json j = json::parse(body);
        if (as_json) std::cout << body << "\n";
        else {
            std::cout << "corpus size " << j["corpus_size"] << "\n";
            for (const auto& it : j["items"]) {
                std::cout << (it["pass"].get<bool>() ? "pass" : "FAIL") << "  " << it["name"].get<std::string>()
                          << "  (" << it["checked"] << " checks)";
                if (!it["pass"].get<bool>()) std::cout << "  " << it["detail"].get<std::string>();
                std::cout << "\n";
            }
        }
        // a verification failure is a theorem contradiction, i.e. a bug
        return j["all_pass"].get<bool>() ? 0 : 3;
    }
    return 0;
}
