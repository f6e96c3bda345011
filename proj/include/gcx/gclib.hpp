#pragma once

#include "graphsum.hpp"

namespace gcx {

inline int degree(const DiGraph& g, int d) {
    return d * (g.n - 1) + (1 - d) * edge_count(g);
}

inline int genus(const DiGraph& g) {
    if (!is_connected(g)) throw std::runtime_error("genus requires a connected graph");
    return edge_count(g) - g.n + 1;
}

inline DiGraph theta_graph(int k) {
    if (k < 1) throw std::runtime_error("theta(k) needs k >= 1");
    DiGraph g;
    g.n = 2;
    g.edges.assign(k, {1, 2});
    return g;
}

inline DiGraph single_edge() { return theta_graph(1); }

// Substitutes g2 for vertex i of g1 and sums over reattachments of the edges
// previously incident to i.  Orientation data of a term: g1's vertices minus
// i in order, then g2's vertices; g1's edges in place, then g2's.  For odd
// parity the deleted slot contributes (-1)^(n1-i) from moving the consumed
// vertex symbol past the ones after it.
inline GraphSum insert(const DiGraph& g1, int i, const DiGraph& g2, Parity p) {
    validate(g1);
    validate(g2);
    if (i < 1 || i > g1.n) throw std::runtime_error("insert: vertex index out of range");
    const int n1 = g1.n, n2 = g2.n;
    auto relab1 = [&](int v) { return v < i ? v : v - 1; };  // g1 vertices except i
    const int base = n1 - 1;

    std::vector<size_t> slots;  // positions in g1.edges incident to i
    for (size_t k = 0; k < g1.edges.size(); ++k)
        if (g1.edges[k].first == i || g1.edges[k].second == i) slots.push_back(k);

    int term_sign = 1;
    if (p == Parity::odd && ((n1 - i) & 1)) term_sign = -1;

    GraphSum out(p);
    DiGraph r;
    r.n = n1 - 1 + n2;
    std::vector<int> assign(slots.size(), 1);
    while (true) {
        r.edges.clear();
        for (size_t k = 0, sl = 0; k < g1.edges.size(); ++k) {
            auto [t, h] = g1.edges[k];
            int nt, nh;
            if (t == i || h == i) {
                int target = base + assign[sl++];
                nt = (t == i) ? target : relab1(t);
                nh = (h == i) ? target : relab1(h);
            } else {
                nt = relab1(t);
                nh = relab1(h);
            }
            r.edges.emplace_back(nt, nh);
        }
        for (auto [t, h] : g2.edges) r.edges.emplace_back(base + t, base + h);
        out.add(r, term_sign);

        size_t s = 0;
        while (s < slots.size() && assign[s] == n2) assign[s++] = 1;
        if (s == slots.size()) break;
        assign[s]++;
    }
    return out;
}

namespace detail {
inline int sum_degree(const GraphSum& s, int d, const char* what) {
    if (s.zero()) return 0;
    int deg = degree(s.terms.begin()->first.graph(), d);
    for (auto& [k, c] : s.terms)
        if (degree(k.graph(), d) != deg)
            throw std::runtime_error(std::string(what) + ": inhomogeneous-degree argument");
    return deg;
}
}  // namespace detail

// [x,y] = sum_i x o_i y - (-1)^{|x||y|} sum_i y o_i x, canonically reduced.
inline GraphSum bracket(const GraphSum& x, const GraphSum& y, int d) {
    Parity p = parity_of_dimension(d);
    if (x.parity != p || y.parity != p) throw std::runtime_error("bracket: parity mismatch");
    if (x.zero() || y.zero()) return GraphSum(p);
    int dx = detail::sum_degree(x, d, "bracket");
    int dy = detail::sum_degree(y, d, "bracket");
    GraphSum out(p);
    for (auto& [kx, cx] : x.terms) {
        DiGraph gx = kx.graph();
        for (auto& [ky, cy] : y.terms) {
            DiGraph gy = ky.graph();
            Rat cxy = cx * cy;
            for (int i = 1; i <= gx.n; ++i) out += cxy * insert(gx, i, gy, p);
            Rat koszul = ((dx * dy) & 1) ? Rat(1) : Rat(-1);  // -(-1)^{|x||y|}
            for (int i = 1; i <= gy.n; ++i) out += (koszul * cxy) * insert(gy, i, gx, p);
        }
    }
    return out;
}

inline GraphSum graph_sum_of(const DiGraph& g, Parity p, const Rat& c = Rat(1)) {
    GraphSum s(p);
    s.add(g, c);
    return s;
}

// delta = [single edge, .], restricted to the span of the complex.  Terms
// outside the complex must cancel in the reduction; a survivor means the
// sign conventions are broken, so it is a hard failure.
inline GraphSum differential(const GraphSum& x, const ComplexId& c) {
    Parity p = c.parity();
    if (x.parity != p) throw std::runtime_error("differential: parity mismatch");
    auto cons = c.constraints();
    for (auto& [k, coef] : x.terms)
        if (!check_constraints(k.graph(), cons))
            throw std::runtime_error("differential: support outside the complex: " + k.str());
    GraphSum e = graph_sum_of(single_edge(), p);
    GraphSum out(p);
    for (auto& [k, coef] : x.terms) {
        GraphSum piece = bracket(e, graph_sum_of(k.graph(), p), c.d);
        out += coef * piece;
    }
    for (auto& [k, coef] : out.terms)
        if (!check_constraints(k.graph(), cons))
            throw std::runtime_error("differential: out-of-complex term survived reduction: " +
                                     k.str());
    return out;
}

}  // namespace gcx
