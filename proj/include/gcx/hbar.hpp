#pragma once

#include "gclib.hpp"

namespace gcx {

// Truncated power series in hbar with GraphSum coefficients.
struct HbarSeries {
    int order = 0;       // coefficients for hbar^0 .. hbar^order
    int hbar_degree = 2;
    Parity parity = Parity::odd;
    std::vector<GraphSum> coeff;

    HbarSeries(int n, Parity p, int hdeg = 2)
        : order(n), hbar_degree(hdeg), parity(p), coeff(static_cast<size_t>(n) + 1, GraphSum(p)) {
        if (hdeg % 2 != 0)
            throw std::runtime_error("HbarSeries: odd hbar degree is not supported");
    }

    bool zero() const {
        for (auto& c : coeff)
            if (!c.zero()) return false;
        return true;
    }
    bool operator==(const HbarSeries& o) const {
        return order == o.order && parity == o.parity && coeff == o.coeff;
    }
    HbarSeries& operator+=(const HbarSeries& o) {
        if (o.order != order) throw std::runtime_error("HbarSeries: truncation order mismatch");
        for (int k = 0; k <= order; ++k) coeff[k] += o.coeff[k];
        return *this;
    }
};

namespace detail {
// A drawn k-fold multiple edge stands for its class divided by the k!
// parallel-edge symmetries; in the canonical-representative basis used here
// that factor is explicit.  (The basis graphs themselves carry no factor.)
inline Rat theta_weight(int k) {
    Rat f = 1;
    for (int j = 2; j <= k; ++j) f *= j;
    return 1 / f;
}
}  // namespace detail

// Phi(N) = sum_{k>=1} hbar^{k-1} theta_k, truncated at hbar^N.
inline HbarSeries phi_hbar(int n_trunc, int d = 3) {
    HbarSeries s(n_trunc, parity_of_dimension(d));
    for (int k = 1; k <= n_trunc + 1; ++k)
        s.coeff[k - 1].add(theta_graph(k), detail::theta_weight(k));
    return s;
}

// sum_{k>=2} (k-1) hbar^{k-2} theta_k, truncated.
inline HbarSeries loop_class(int n_trunc, int d = 3) {
    HbarSeries s(n_trunc, parity_of_dimension(d));
    for (int k = 2; k <= n_trunc + 2; ++k)
        s.coeff[k - 2].add(theta_graph(k), Rat(k - 1) * detail::theta_weight(k));
    return s;
}

// hbar-bilinear bracket, truncated at the common order.  hbar has even
// degree, so no Koszul factor appears when moving it across arguments.
inline HbarSeries hbar_bracket(const HbarSeries& x, const HbarSeries& y, int d) {
    if (x.order != y.order) throw std::runtime_error("hbar_bracket: truncation order mismatch");
    HbarSeries out(x.order, x.parity, x.hbar_degree);
    for (int a = 0; a <= x.order; ++a) {
        if (x.coeff[a].zero()) continue;
        for (int b = 0; a + b <= x.order; ++b) {
            if (y.coeff[b].zero()) continue;
            out.coeff[a + b] += bracket(x.coeff[a], y.coeff[b], d);
        }
    }
    return out;
}

inline HbarSeries hbar_differential(const HbarSeries& x, int d = 3) {
    return hbar_bracket(phi_hbar(x.order, d), x, d);
}

inline HbarSeries mc_residual(const HbarSeries& x, int d = 3) { return hbar_bracket(x, x, d); }

inline GraphSum mc_residual(const GraphSum& x, int d) { return bracket(x, x, d); }

namespace detail {

// The three 4-vertex, 5-edge oriented shapes of the degree-1 cocycle of
// GC^or_2, as drawn: a source feeding a 2-out fork, the mixed ladder, and
// the mirrored sink shape.
inline std::array<DiGraph, 3> upsilon4_shapes() {
    DiGraph a{4, {{4, 2}, {4, 3}, {1, 4}, {1, 2}, {1, 3}}};
    DiGraph b{4, {{3, 4}, {2, 4}, {2, 3}, {1, 2}, {1, 3}}};
    DiGraph c{4, {{2, 4}, {3, 4}, {4, 1}, {2, 1}, {3, 1}}};
    return {a, b, c};
}

}  // namespace detail

// The 3-term cocycle spanning H^1(GC^or_2), coefficients (1,2,1) up to the
// orientation convention's signs: the relative signs are fixed here by
// solving delta(x) = 0 in the 3-dimensional span of the drawn shapes.
inline GraphSum upsilon4() {
    ComplexId gc{Family::GCor, 2};
    Parity p = gc.parity();
    auto shapes = detail::upsilon4_shapes();
    std::array<GraphSum, 3> img;
    std::array<DiKey, 3> keys;
    for (int j = 0; j < 3; ++j) {
        auto cg = canonicalize(shapes[j], p);
        if (!cg) throw std::runtime_error("upsilon4: shape is zero under even parity");
        keys[j] = cg->key;
        img[j] = differential(graph_sum_of(shapes[j], p), gc);
    }
    // Rows: canonical keys of the images; columns: the three shapes.
    std::map<DiKey, std::array<Rat, 3>> rows;
    for (int j = 0; j < 3; ++j)
        for (auto& [k, c] : img[j].terms) rows[k][j] = c;
    // Dense elimination on the 3-column system.
    std::vector<std::array<Rat, 3>> m;
    for (auto& [k, r] : rows) m.push_back(r);
    int rank = 0;
    for (int col = 0; col < 3 && rank < static_cast<int>(m.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[rank][col];
            for (int cc = 0; cc < 3; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        rank++;
    }
    if (rank != 2)
        throw std::runtime_error("upsilon4: kernel of the restricted differential is not a line");
    // Back-substitute the unique kernel line, normalized so |coefficients| = (1,2,1).
    std::array<Rat, 3> sol{Rat(1), Rat(0), Rat(0)};
    // Solve m * sol = 0 with sol[pivot-free column] = 1: identify pivot columns.
    std::array<int, 3> pivcol{-1, -1, -1};
    {
        int r = 0;
        for (int col = 0; col < 3 && r < rank; ++col)
            if (m[r][col] != 0) pivcol[r++] = col;
    }
    int freec = -1;
    for (int col = 0; col < 3; ++col)
        if (col != pivcol[0] && col != pivcol[1]) freec = col;
    sol = {Rat(0), Rat(0), Rat(0)};
    sol[freec] = 1;
    for (int r = rank - 1; r >= 0; --r) {
        Rat acc = 0;
        for (int col = pivcol[r] + 1; col < 3; ++col) acc += m[r][col] * sol[col];
        sol[pivcol[r]] = -acc / m[r][pivcol[r]];
    }
    Rat scale = 1 / sol[0];
    GraphSum u(p);
    for (int j = 0; j < 3; ++j) u.add(shapes[j], sol[j] * scale);
    return u;
}

}  // namespace gcx
