#include "starfactor/graph.hpp"

#include <algorithm>
#include <sstream>

namespace starfactor {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw_arg("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.adj_edge_ids_.assign(n, {});
    g.edges_ = edges;
    std::sort(g.edges_.begin(), g.edges_.end());
    for (size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        if (e.u < 0 || e.v >= n) throw_arg("edge endpoint out of range");
        if (e.u == e.v) throw_arg("self-loop " + std::to_string(e.u));
        if (i > 0 && g.edges_[i - 1] == e) throw_arg("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    for (size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        g.adj_[e.u].push_back(e.v);
        g.adj_edge_ids_[e.u].push_back(static_cast<int>(i));
        g.adj_[e.v].push_back(e.u);
        g.adj_edge_ids_[e.v].push_back(static_cast<int>(i));
    }
    for (int v = 0; v < n; ++v) {
        // sort each adjacency together with its edge ids
        std::vector<std::pair<int, int>> tmp(g.adj_[v].size());
        for (size_t i = 0; i < tmp.size(); ++i) tmp[i] = {g.adj_[v][i], g.adj_edge_ids_[v][i]};
        std::sort(tmp.begin(), tmp.end());
        for (size_t i = 0; i < tmp.size(); ++i) {
            g.adj_[v][i] = tmp[i].first;
            g.adj_edge_ids_[v][i] = tmp[i].second;
        }
    }
    return g;
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) return std::nullopt;
    return adj_edge_ids_[u][it - a.begin()];
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    inc_.assign(n, {});
    deg_.assign(n, 0);
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.v >= n) throw_arg("edge endpoint out of range");
        if (e.u == e.v) throw_arg("self-loop in multigraph");
        inc_[e.u].push_back({e.v, static_cast<int>(i)});
        inc_[e.v].push_back({e.u, static_cast<int>(i)});
        deg_[e.u]++;
        deg_[e.v]++;
    }
    for (int v = 0; v < n; ++v) std::sort(inc_[v].begin(), inc_[v].end());
}

// ---- graph6 ----

namespace {

constexpr const char* kGraph6Header = ">>graph6<<";

long decode_n(const std::string& s, size_t& pos) {
    auto byte = [&](size_t i) -> int {
        if (i >= s.size()) throw_parse("graph6: truncated size field", static_cast<long>(s.size()));
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw_parse("graph6: byte out of range", static_cast<long>(i));
        return c - 63;
    };
    int b0 = byte(pos);
    if (b0 < 63) {
        pos += 1;
        return b0;
    }
    // b0 == 63 marks an extended size field
    int b1 = byte(pos + 1);
    if (b1 < 63) {
        long n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | byte(pos + i);
        pos += 4;
        return n;
    }
    long n = 0;
    for (int i = 2; i <= 7; ++i) n = (n << 6) | byte(pos + i);
    pos += 8;
    return n;
}

}  // namespace

Graph parse_graph6(const std::string& input) {
    std::string s = input;
    // tolerate trailing whitespace / newline
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    size_t pos = 0;
    if (s.rfind(kGraph6Header, 0) == 0) pos = std::string(kGraph6Header).size();
    else if (!s.empty() && s[0] == '>') throw_parse("graph6: malformed header", 0);
    if (pos >= s.size()) throw_parse("graph6: empty input", static_cast<long>(pos));

    long n_long = decode_n(s, pos);
    if (n_long > 100000) throw_bound("graph6: vertex count " + std::to_string(n_long) + " exceeds supported size");
    int n = static_cast<int>(n_long);

    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long>(s.size()) - static_cast<long>(pos) < bytes_needed)
        throw_parse("graph6: truncated adjacency data", static_cast<long>(s.size()));
    if (static_cast<long>(s.size()) - static_cast<long>(pos) > bytes_needed)
        throw_parse("graph6: trailing garbage", static_cast<long>(pos) + bytes_needed);

    std::vector<Edge> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            size_t idx = pos + bit / 6;
            int c = static_cast<unsigned char>(s[idx]);
            if (c < 63 || c > 126) throw_parse("graph6: byte out of range", static_cast<long>(idx));
            int val = c - 63;
            if ((val >> (5 - bit % 6)) & 1) edges.push_back(Edge(i, j));
        }
    }
    // padding bits must be zero
    for (long b = bits_needed; b < bytes_needed * 6; ++b) {
        size_t idx = pos + b / 6;
        int val = static_cast<unsigned char>(s[idx]) - 63;
        if ((val >> (5 - b % 6)) & 1) throw_parse("graph6: nonzero padding", static_cast<long>(idx));
    }
    return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int i = 2; i >= 0; --i) out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int i = 5; i >= 0; --i) out.push_back(static_cast<char>(63 + ((static_cast<long long>(n) >> (6 * i)) & 63)));
    }
    long bits = static_cast<long>(n) * (n - 1) / 2;
    std::vector<int> groups((bits + 5) / 6, 0);
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.adjacent(i, j)) groups[bit / 6] |= 1 << (5 - bit % 6);
    for (int v : groups) out.push_back(static_cast<char>(63 + v));
    return out;
}

// ---- edge list / DIMACS ----

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    int declared_n = -1;
    int max_v = -1;
    long lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;  // blank line
        if (a == "#") continue;
        if (first_content && a == "n") {
            if (!(ls >> b)) throw_parse("edge list: missing vertex count on line " + std::to_string(lineno));
            try {
                declared_n = std::stoi(b);
            } catch (...) {
                throw_parse("edge list: non-integer vertex count '" + b + "'");
            }
            if (declared_n < 0) throw_parse("edge list: negative vertex count");
            first_content = false;
            continue;
        }
        first_content = false;
        if (!(ls >> b)) throw_parse("edge list: missing endpoint on line " + std::to_string(lineno));
        int u, v;
        try {
            size_t p1, p2;
            u = std::stoi(a, &p1);
            v = std::stoi(b, &p2);
            if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument("");
        } catch (...) {
            throw_parse("edge list: non-integer token on line " + std::to_string(lineno));
        }
        if (u < 0 || v < 0) throw_parse("edge list: negative vertex on line " + std::to_string(lineno));
        if (u == v) throw_parse("edge list: self-loop " + std::to_string(u) + " on line " + std::to_string(lineno));
        Edge e(u, v);
        max_v = std::max(max_v, e.v);
        for (const Edge& prev : edges)
            if (prev == e) throw_parse("edge list: duplicate edge on line " + std::to_string(lineno));
        edges.push_back(e);
    }
    int n = std::max(declared_n, max_v + 1);
    if (n < 0) n = 0;
    if (declared_n >= 0 && max_v >= declared_n)
        throw_parse("edge list: vertex " + std::to_string(max_v) + " exceeds declared count " + std::to_string(declared_n));
    return Graph::from_edges(n, edges);
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    int n = -1;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            long m;
            if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col"))
                throw_parse("dimacs: bad problem line " + std::to_string(lineno));
            continue;
        }
        if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw_parse("dimacs: bad edge line " + std::to_string(lineno));
            if (n < 0) throw_parse("dimacs: edge before problem line");
            if (u < 1 || u > n || v < 1 || v > n) throw_parse("dimacs: vertex out of range on line " + std::to_string(lineno));
            if (u == v) throw_parse("dimacs: self-loop on line " + std::to_string(lineno));
            Edge e(u - 1, v - 1);
            bool dup = false;
            for (const Edge& prev : edges) dup = dup || prev == e;
            if (!dup) edges.push_back(e);  // DIMACS files often list both directions
            continue;
        }
        throw_parse("dimacs: unknown line tag '" + tag + "' on line " + std::to_string(lineno));
    }
    if (n < 0) throw_parse("dimacs: missing problem line");
    return Graph::from_edges(n, edges);
}

// ---- structural ops ----

SubgraphResult induced_subgraph(const Graph& g, const VertexSet& s) {
    SubgraphResult r;
    r.old_to_new.assign(g.order(), -1);
    for (int v = 0; v < g.order(); ++v)
        if (s.test(v)) {
            r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
            r.new_to_old.push_back(v);
        }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (s.test(e.u) && s.test(e.v)) edges.push_back(Edge(r.old_to_new[e.u], r.old_to_new[e.v]));
    r.graph = Graph::from_edges(static_cast<int>(r.new_to_old.size()), edges);
    return r;
}

SubgraphResult delete_vertices(const Graph& g, const VertexSet& s) {
    VertexSet keep(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (!s.test(v)) keep.set(v);
    return induced_subgraph(g, keep);
}

IsoResult isolated_count(const Graph& g, const VertexSet& s) {
    IsoResult r{0, VertexSet(g.order())};
    for (int v = 0; v < g.order(); ++v) {
        if (s.test(v)) continue;
        bool isolated = true;
        for (int w : g.neighbors(v))
            if (!s.test(w)) {
                isolated = false;
                break;
            }
        if (isolated) {
            r.count++;
            r.members.set(v);
        }
    }
    return r;
}

ContractionResult contract_edge(const Graph& g, Edge e) {
    if (!g.adjacent(e.u, e.v)) throw_arg("contract_edge: edge not in graph");
    ContractionResult r;
    r.old_to_new.assign(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (v != e.u && v != e.v) r.old_to_new[v] = next++;
    r.merged = next;
    r.old_to_new[e.u] = r.merged;
    r.old_to_new[e.v] = r.merged;
    std::vector<Edge> edges;
    for (const Edge& f : g.edges()) {
        if (f == e) continue;  // contracted pair, no self-loop
        edges.push_back(Edge(r.old_to_new[f.u], r.old_to_new[f.v]));
        r.edge_origin.push_back(f);
    }
    r.graph = MultiGraph(next + 1, edges);
    return r;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(g.order(), false);
    for (int root = 0; root < g.order(); ++root) {
        if (seen[root]) continue;
        VertexSet comp(g.order());
        std::vector<int> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.set(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        comps.push_back(comp);
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || connected_components(g).size() == 1;
}

}  // namespace starfactor
