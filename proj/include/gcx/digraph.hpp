#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcx {

// Finite directed multigraph, vertices 1..n, no self-loops.  The edge list
// order is orientation data (see Parity); parallel edges are distinguished
// by list position.
struct DiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // (tail, head)

    bool operator==(const DiGraph&) const = default;
};

enum class Parity { even, odd };

inline Parity parity_of_dimension(int d) {
    return (d % 2 == 0) ? Parity::even : Parity::odd;
}

inline void validate(const DiGraph& g) {
    if (g.n < 0) throw std::runtime_error("negative vertex count");
    for (auto [t, h] : g.edges) {
        if (t < 1 || t > g.n || h < 1 || h > g.n)
            throw std::runtime_error("edge endpoint out of range");
        if (t == h) throw std::runtime_error("self-loop not allowed");
    }
}

inline int edge_count(const DiGraph& g) { return static_cast<int>(g.edges.size()); }

inline bool is_connected(const DiGraph& g) {
    if (g.n <= 1) return true;
    std::vector<int> parent(g.n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [t, h] : g.edges) parent[find(t)] = find(h);
    int r = find(1);
    for (int v = 2; v <= g.n; ++v)
        if (find(v) != r) return false;
    return true;
}

inline bool is_acyclic(const DiGraph& g) {
    std::vector<int> indeg(g.n + 1, 0);
    for (auto [t, h] : g.edges) indeg[h]++;
    std::vector<int> stack;
    for (int v = 1; v <= g.n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    std::vector<std::vector<int>> out(g.n + 1);
    for (auto [t, h] : g.edges) out[t].push_back(h);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        seen++;
        for (int w : out[v])
            if (--indeg[w] == 0) stack.push_back(w);
    }
    return seen == g.n;
}

// Graph literal: dg(<V>;<t>><h>[,<t>><h>]*), e.g. dg(2;1>2,1>2).
inline std::string show(const DiGraph& g) {
    std::string s = "dg(" + std::to_string(g.n);
    if (!g.edges.empty()) {
        s += ";";
        for (size_t i = 0; i < g.edges.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(g.edges[i].first) + ">" + std::to_string(g.edges[i].second);
        }
    }
    s += ")";
    return s;
}

namespace detail {
inline int parse_int(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::runtime_error("expected integer in literal: " + s);
    return std::stoi(s.substr(start, pos - start));
}
inline void expect(const std::string& s, size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c)
        throw std::runtime_error(std::string("expected '") + c + "' in literal: " + s);
    ++pos;
}
}  // namespace detail

inline DiGraph parse_digraph(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    size_t pos = 0;
    if (s.rfind("dg(", 0) != 0) throw std::runtime_error("bad graph literal: " + in);
    pos = 3;
    DiGraph g;
    g.n = detail::parse_int(s, pos);
    if (pos < s.size() && s[pos] == ';') {
        ++pos;
        while (pos < s.size() && s[pos] != ')') {
            int t = detail::parse_int(s, pos);
            detail::expect(s, pos, '>');
            int h = detail::parse_int(s, pos);
            g.edges.emplace_back(t, h);
            if (pos < s.size() && s[pos] == ',') ++pos;
        }
    }
    detail::expect(s, pos, ')');
    if (pos != s.size()) throw std::runtime_error("trailing characters in literal: " + in);
    validate(g);
    return g;
}

}  // namespace gcx
