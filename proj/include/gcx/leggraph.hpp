#pragma once

#include "canonical.hpp"
#include "rational.hpp"

namespace gcx {

// Cell parities of the leg-graph complexes: a cell class is odd when swapping
// two of its cells reverses orientation.
struct LegParity {
    int c = 1, d = 1;
    int pv() const { return (1 + c + d) & 1; }  // vertices
    int pe() const { return (c + d) & 1; }      // internal edges
    int po() const { return c & 1; }            // out-legs
    int pi() const { return d & 1; }            // in-legs
    bool operator==(const LegParity&) const = default;
};

// Directed acyclic graph with weighted vertices and labeled external legs.
// Orientation data: the vertex, edge, out-leg and in-leg orders.  The strand
// is the vertexless (1,1) pass-through value.
struct LegGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> wt;        // size n
    std::vector<int> out_legs;  // position = label, value = carrier vertex
    std::vector<int> in_legs;
    bool strand = false;

    int out_arity() const { return strand ? 1 : static_cast<int>(out_legs.size()); }
    int in_arity() const { return strand ? 1 : static_cast<int>(in_legs.size()); }
    bool operator==(const LegGraph&) const = default;
};

inline LegGraph corolla(int m, int n, int a = 0) {
    LegGraph g;
    g.n = 1;
    g.wt = {a};
    g.out_legs.assign(m, 1);
    g.in_legs.assign(n, 1);
    return g;
}

inline LegGraph strand_graph() {
    LegGraph g;
    g.strand = true;
    return g;
}

inline void validate(const LegGraph& g) {
    if (g.strand) {
        if (g.n != 0 || !g.edges.empty() || !g.out_legs.empty() || !g.in_legs.empty())
            throw std::runtime_error("malformed strand");
        return;
    }
    if (g.n < 0) throw std::runtime_error("negative vertex count");
    if (static_cast<int>(g.wt.size()) != g.n) throw std::runtime_error("weight list size mismatch");
    for (int w : g.wt)
        if (w < 0) throw std::runtime_error("negative weight");
    for (auto [t, h] : g.edges) {
        if (t < 1 || t > g.n || h < 1 || h > g.n) throw std::runtime_error("edge out of range");
        if (t == h) throw std::runtime_error("self-loop not allowed");
    }
    for (int v : g.out_legs)
        if (v < 1 || v > g.n) throw std::runtime_error("out-leg carrier out of range");
    for (int v : g.in_legs)
        if (v < 1 || v > g.n) throw std::runtime_error("in-leg carrier out of range");
}

inline DiGraph internal_digraph(const LegGraph& g) { return DiGraph{g.n, g.edges}; }

struct LegDegrees {
    std::vector<int> m, n;  // per-vertex outputs / inputs, legs included (1-based)
};

inline LegDegrees leg_degrees(const LegGraph& g) {
    LegDegrees d;
    d.m.assign(g.n + 1, 0);
    d.n.assign(g.n + 1, 0);
    for (auto [t, h] : g.edges) {
        d.m[t]++;
        d.n[h]++;
    }
    for (int v : g.out_legs) d.m[v]++;
    for (int v : g.in_legs) d.n[v]++;
    return d;
}

// Full corolla conditions of the derivation complexes.
inline bool der_valid(const LegGraph& g, bool plain_theory) {
    if (g.strand) return true;
    if (g.n < 1) return false;
    auto deg = leg_degrees(g);
    for (int v = 1; v <= g.n; ++v) {
        if (deg.m[v] < 1 || deg.n[v] < 1) return false;
        if (deg.m[v] + deg.n[v] + g.wt[v - 1] < 3) return false;
        if (plain_theory && g.wt[v - 1] != 0) return false;
    }
    DiGraph dg = internal_digraph(g);
    return is_acyclic(dg) && is_connected(dg);
}

// Hairy graphs: out-legs only, every vertex keeps at least one output.
inline bool hairy_valid(const LegGraph& g) {
    if (g.strand || g.n < 1 || !g.in_legs.empty()) return false;
    auto deg = leg_degrees(g);
    for (int v = 1; v <= g.n; ++v)
        if (deg.m[v] < 1) return false;
    DiGraph dg = internal_digraph(g);
    return is_acyclic(dg) && is_connected(dg);
}

inline int corolla_degree(int m, int n, int a, const LegParity& p) {
    return 1 + p.c * (1 - m - a) + p.d * (1 - n - a);
}

// sum of vertex corolla degrees
inline int graph_degree(const LegGraph& g, const LegParity& p) {
    if (g.strand) return 0;
    auto deg = leg_degrees(g);
    int s = 0;
    for (int v = 1; v <= g.n; ++v) s += corolla_degree(deg.m[v], deg.n[v], g.wt[v - 1], p);
    return s;
}

// Der degree of hbar^t times the graph, viewed as a derivation value on the
// weight-t-shifted generator of its external arity.
inline int der_degree(const LegGraph& g, int t, const LegParity& p) {
    return graph_degree(g, p) + (p.c + p.d) * t -
           (1 + p.c * (1 - g.out_arity()) + p.d * (1 - g.in_arity()));
}

struct LegKey {
    int n = 0;
    std::vector<int> wt;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> out_legs;
    std::vector<int> in_legs;
    bool strand = false;

    auto operator<=>(const LegKey&) const = default;
    LegGraph graph() const { return LegGraph{n, edges, wt, out_legs, in_legs, strand}; }
};

struct CanonLeg {
    LegKey key;
    int sign = 1;
};

inline std::optional<CanonLeg> leg_canonicalize(const LegGraph& g, const LegParity& par) {
    validate(g);
    if (g.strand) return CanonLeg{LegKey{0, {}, {}, {}, {}, true}, 1};
    if (g.n == 0) return CanonLeg{LegKey{}, 1};

    if (par.pe()) {
        auto sorted = g.edges;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1]) return std::nullopt;
    }
    if (par.po()) {
        auto s = g.out_legs;
        std::sort(s.begin(), s.end());
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] == s[i + 1]) return std::nullopt;
    }
    if (par.pi()) {
        auto s = g.in_legs;
        std::sort(s.begin(), s.end());
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] == s[i + 1]) return std::nullopt;
    }

    detail::CanonEngine eng;
    eng.n = g.n;
    eng.edges = &g.edges;
    eng.attr.assign(g.n + 1, {0, 0, 0});
    for (int v = 1; v <= g.n; ++v) eng.attr[v][0] = g.wt[v - 1];
    for (int v : g.out_legs) eng.attr[v][1]++;
    for (int v : g.in_legs) eng.attr[v][2]++;
    eng.topological = is_acyclic(internal_digraph(g));
    eng.run();

    auto sign_of = [&](const std::vector<int>& lab) {
        int s = 0;
        if (par.pv()) {
            std::vector<int> p(g.n);
            for (int v = 1; v <= g.n; ++v) p[v - 1] = lab[v - 1] - 1;
            s ^= detail::perm_parity(std::move(p));
        }
        if (par.pe()) {
            std::vector<std::pair<int, int>> mapped(g.edges.size());
            for (size_t i = 0; i < g.edges.size(); ++i)
                mapped[i] = {lab[g.edges[i].first - 1], lab[g.edges[i].second - 1]};
            s ^= detail::sort_parity(mapped);
        }
        if (par.po()) {
            std::vector<int> mapped(g.out_legs.size());
            for (size_t i = 0; i < g.out_legs.size(); ++i) mapped[i] = lab[g.out_legs[i] - 1];
            s ^= detail::sort_parity(mapped);
        }
        if (par.pi()) {
            std::vector<int> mapped(g.in_legs.size());
            for (size_t i = 0; i < g.in_legs.size(); ++i) mapped[i] = lab[g.in_legs[i] - 1];
            s ^= detail::sort_parity(mapped);
        }
        return s;
    };

    int s0 = sign_of(eng.achievers.front());
    for (size_t i = 1; i < eng.achievers.size(); ++i)
        if (sign_of(eng.achievers[i]) != s0) return std::nullopt;

    const auto& lab = eng.achievers.front();
    LegKey key;
    key.n = g.n;
    key.wt.resize(g.n);
    for (int v = 1; v <= g.n; ++v) key.wt[lab[v - 1] - 1] = g.wt[v - 1];
    key.edges.resize(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i)
        key.edges[i] = {lab[g.edges[i].first - 1], lab[g.edges[i].second - 1]};
    std::sort(key.edges.begin(), key.edges.end());
    key.out_legs.resize(g.out_legs.size());
    for (size_t i = 0; i < g.out_legs.size(); ++i) key.out_legs[i] = lab[g.out_legs[i] - 1];
    std::sort(key.out_legs.begin(), key.out_legs.end());
    key.in_legs.resize(g.in_legs.size());
    for (size_t i = 0; i < g.in_legs.size(); ++i) key.in_legs[i] = lab[g.in_legs[i] - 1];
    std::sort(key.in_legs.begin(), key.in_legs.end());
    return CanonLeg{std::move(key), s0 ? -1 : 1};
}

// Leg-graph literal:
//   lg(<V>;w=<a1>,..;e=<t>><h>,..;out=<v1>,..;in=<v1>,..)
// with w= omitted when all weights vanish, and lg(0) for the strand.
inline std::string show(const LegGraph& g) {
    if (g.strand) return "lg(0)";
    std::string s = "lg(" + std::to_string(g.n);
    bool wnz = false;
    for (int w : g.wt) wnz |= (w != 0);
    if (wnz) {
        s += ";w=";
        for (int i = 0; i < g.n; ++i) s += (i ? "," : "") + std::to_string(g.wt[i]);
    }
    s += ";e=";
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g.edges[i].first) + ">" + std::to_string(g.edges[i].second);
    }
    s += ";out=";
    for (size_t i = 0; i < g.out_legs.size(); ++i)
        s += (i ? "," : "") + std::to_string(g.out_legs[i]);
    s += ";in=";
    for (size_t i = 0; i < g.in_legs.size(); ++i) s += (i ? "," : "") + std::to_string(g.in_legs[i]);
    s += ")";
    return s;
}

inline LegGraph parse_leggraph(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "lg(0)") return strand_graph();
    if (s.rfind("lg(", 0) != 0) throw std::runtime_error("bad leg-graph literal: " + in);
    size_t pos = 3;
    LegGraph g;
    g.n = detail::parse_int(s, pos);
    g.wt.assign(g.n, 0);
    auto parse_list = [&](const std::string& tag) {
        std::vector<int> out;
        if (s.compare(pos, tag.size(), tag) != 0) return std::pair(false, out);
        pos += tag.size();
        while (pos < s.size() && s[pos] != ';' && s[pos] != ')') {
            out.push_back(detail::parse_int(s, pos));
            if (pos < s.size() && s[pos] == ',') ++pos;
        }
        return std::pair(true, out);
    };
    while (pos < s.size() && s[pos] == ';') {
        ++pos;
        if (auto [ok, w] = parse_list("w="); ok) {
            if (static_cast<int>(w.size()) != g.n)
                throw std::runtime_error("weight list size mismatch: " + in);
            g.wt = w;
            continue;
        }
        if (s.compare(pos, 2, "e=") == 0) {
            pos += 2;
            while (pos < s.size() && s[pos] != ';' && s[pos] != ')') {
                int t = detail::parse_int(s, pos);
                detail::expect(s, pos, '>');
                int h = detail::parse_int(s, pos);
                g.edges.emplace_back(t, h);
                if (pos < s.size() && s[pos] == ',') ++pos;
            }
            continue;
        }
        if (auto [ok, o] = parse_list("out="); ok) {
            g.out_legs = o;
            continue;
        }
        if (auto [ok, i] = parse_list("in="); ok) {
            g.in_legs = i;
            continue;
        }
        throw std::runtime_error("unknown section in leg-graph literal: " + in);
    }
    detail::expect(s, pos, ')');
    if (pos != s.size()) throw std::runtime_error("trailing characters in literal: " + in);
    validate(g);
    return g;
}

inline std::string show(const LegKey& k) { return show(k.graph()); }

}  // namespace gcx
