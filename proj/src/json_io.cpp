#include "starfactor/json_io.hpp"

#include <json.hpp>

namespace starfactor {

using nlohmann::json;

namespace {

json vertex_list(const VertexSet& s) { return json(s.to_vector()); }

json factor_body(const StarCycleFactor& f) {
    json stars = json::array();
    for (const auto& s : f.stars) stars.push_back({{"center", s.center}, {"leaves", s.leaves}});
    json cycles = json::array();
    for (const auto& c : f.cycles) cycles.push_back(c);
    json t = json::object();
    for (const auto& [i, cnt] : f.t_counts()) t[std::to_string(i)] = cnt;
    return {{"stars", stars}, {"cycles", cycles}, {"t", t}, {"n", f.weight()}, {"lambda_achieved", f.max_star()}};
}

}  // namespace

std::string analyze_to_json(const Graph& g) {
    StructureReport sr = structure_report(g);
    Rat mf = fractional_matching_number(g);
    json j{{"graph6", emit_graph6(g)},
           {"mu", sr.ge.mu},
           {"def", g.order() - 2 * sr.ge.mu},
           {"mu_f", mf.str()},
           {"D", vertex_list(sr.ge.D)},
           {"A", vertex_list(sr.ge.A)},
           {"C", vertex_list(sr.ge.C)},
           {"d_plus", vertex_list(sr.d_plus)},
           {"d_minus", vertex_list(sr.d_minus)},
           {"nc", sr.nc},
           {"n", sr.n},
           {"witness", vertex_list(sr.witness)}};
    return j.dump();
}

std::string factor_to_json(const Graph& g, const StarCycleFactor& f) {
    json j = factor_body(f);
    j["graph6"] = emit_graph6(g);
    return j.dump();
}

std::string capped_build_to_json(const Graph& g, const CappedBuild& b, int cap) {
    json j{{"graph6", emit_graph6(g)}, {"max_star", cap}};
    if (b.factor) {
        j["factor"] = factor_body(*b.factor);
    } else {
        j["factor"] = nullptr;
        j["reason"] = "iso>" + std::to_string(cap) + "|S|";
        if (b.refusal_witness) {
            j["witness_S"] = vertex_list(*b.refusal_witness);
            j["iso"] = isolated_count(g, *b.refusal_witness).count;
        }
    }
    return j.dump();
}

std::string half_integral_to_json(const Graph& g, const HalfIntegralMatching& h) {
    json edges = json::array();
    for (int i = 0; i < g.size(); ++i) {
        if (h.units(i) == 0) continue;
        const Edge& e = g.edges()[i];
        edges.push_back({e.u, e.v, h.units(i) == 1 ? "1/2" : "1"});
    }
    return json{{"edges", edges}, {"value", h.value().str()}}.dump();
}

std::string certificate_to_json(const ExclusionCertificate& c) {
    return json{{"S", vertex_list(c.S)}, {"iso", c.iso_count}, {"edge", {c.edge.u, c.edge.v}}}.dump();
}

std::string edge_test_to_json(const Graph& g, Edge e, int cert_bound) {
    bool in_factor = edge_in_some_k12_factor(g, e);
    json j{{"graph6", emit_graph6(g)},
           {"edge", {e.u, e.v}},
           {"in_some_factor", in_factor},
           {"forced_zero", forced_zero_weight(g, e)}};
    if (!in_factor && g.order() <= cert_bound) {
        auto cert = find_exclusion_certificate(g, e, cert_bound);
        check_internal(cert.has_value(), "edge excluded but no certificate found");
        j["certificate"] = json::parse(certificate_to_json(*cert));
    }
    return j.dump();
}

std::string factor_with_edge_to_json(const Graph& g, Edge e, int cert_bound) {
    auto f = k12_factor_with_edge(g, e);
    json j{{"graph6", emit_graph6(g)}, {"edge", {e.u, e.v}}};
    if (f) {
        j["excluded"] = false;
        j["factor"] = factor_body(*f);
    } else {
        j["excluded"] = true;
        j["factor"] = nullptr;
        if (g.order() <= cert_bound) {
            auto cert = find_exclusion_certificate(g, e, cert_bound);
            check_internal(cert.has_value(), "edge excluded but no certificate found");
            j["certificate"] = json::parse(certificate_to_json(*cert));
        }
    }
    return j.dump();
}

namespace {

json critical_report_json(const Graph& g, int edge_bound, int exhaustive_bound) {
    CriticalityReport rep = is_k_critical(g, edge_bound);
    json j{{"graph6", emit_graph6(g)},
           {"delta", rep.delta},
           {"chi_prime", rep.chi_prime},
           {"critical", rep.critical}};
    if (rep.k) j["k"] = *rep.k;
    j["s"] = k_deficiency(g);
    if (rep.critical) {
        ConjectureScan scan = conjecture_scan(g, rep, exhaustive_bound);
        json checks = json::object();
        for (const auto& [name, chk] : scan.checks) {
            json c{{"holds", chk.holds}, {"severity", chk.severity}};
            if (!chk.witness.empty()) c["witness"] = chk.witness;
            checks[name] = c;
        }
        j["checks"] = checks;
        j["theorems_hold"] = scan.theorems_hold;
        j["conjectures_hold"] = scan.conjectures_hold;
    }
    return j;
}

}  // namespace

std::string critical_to_json(const Graph& g, int edge_bound, int exhaustive_bound) {
    return critical_report_json(g, edge_bound, exhaustive_bound).dump();
}

std::string critical_scan_to_json(int n_max, int edge_bound, int threads) {
    CorpusSpec spec;
    spec.n_max = n_max;
    spec.connected_only = true;
    std::vector<Graph> corpus = enumerate_graphs(spec);
    std::vector<json> found(corpus.size());
    std::vector<char> is_crit(corpus.size(), 0);
    parallel_for(static_cast<long>(corpus.size()), threads, [&](long i) {
        CriticalityReport rep = is_k_critical(corpus[i], edge_bound);
        if (rep.critical) {
            found[i] = critical_report_json(corpus[i], edge_bound, 16);
            is_crit[i] = 1;
        }
    });
    json arr = json::array();
    long scanned = 0;
    for (size_t i = 0; i < corpus.size(); ++i) {
        scanned++;
        if (is_crit[i]) arr.push_back(found[i]);
    }
    return json{{"n_max", n_max}, {"scanned", scanned}, {"critical", arr}}.dump();
}

std::string verify_to_json(const VerifyReport& rep) {
    json items = json::array();
    for (const auto& it : rep.items)
        items.push_back({{"name", it.name},
                         {"pass", it.pass()},
                         {"checked", it.checked},
                         {"failed", it.failed},
                         {"detail", it.detail}});
    return json{{"corpus_size", rep.corpus_size}, {"all_pass", rep.all_pass()}, {"items", items}}.dump();
}

}  // namespace starfactor
