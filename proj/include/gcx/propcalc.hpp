#pragma once

#include "graphsum.hpp"
#include "hbar.hpp"
#include "legsum.hpp"

namespace gcx {

struct DerBounds {
    int max_legs = 6;    // cap on m + n of emitted terms
    int hbar_order = 0;  // cap on the hbar tag
};

namespace detail {

inline int split_consume_mode = 0;  // 0: (n-v), 1: (v-1)
inline int extract_mode = 0;        // 0: to-end, 1: to-front

// Sign of extracting the marked positions (in order) to one end of a list.
inline int extraction_parity(const std::vector<char>& marked, int mode) {
    int par = 0, unmarked = 0;
    if (mode == 0) {
        for (int i = static_cast<int>(marked.size()) - 1; i >= 0; --i) {
            if (marked[i])
                par ^= (unmarked & 1);
            else
                unmarked++;
        }
    } else {
        for (size_t i = 0; i < marked.size(); ++i) {
            if (marked[i])
                par ^= (unmarked & 1);
            else
                unmarked++;
        }
    }
    return par;
}

// Splits vertex v of g into a lower and an upper vertex joined by l parallel
// edges, distributing v's incident edges, legs and weight in all ways that
// leave two admissible corollas.  emit(labeled graph, extra coefficient).
template <class Emit>
void split_vertex(const LegGraph& g, int v, bool diamond, const LegParity& par, Emit&& emit) {
    const int n = g.n;
    const int a_v = g.wt[v - 1];
    std::vector<int> out_edge_slots, in_edge_slots, out_leg_slots, in_leg_slots;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (g.edges[i].first == v) out_edge_slots.push_back(static_cast<int>(i));
        if (g.edges[i].second == v) in_edge_slots.push_back(static_cast<int>(i));
    }
    for (size_t i = 0; i < g.out_legs.size(); ++i)
        if (g.out_legs[i] == v) out_leg_slots.push_back(static_cast<int>(i));
    for (size_t i = 0; i < g.in_legs.size(); ++i)
        if (g.in_legs[i] == v) in_leg_slots.push_back(static_cast<int>(i));

    const int no = static_cast<int>(out_edge_slots.size() + out_leg_slots.size());
    const int ni = static_cast<int>(in_edge_slots.size() + in_leg_slots.size());
    const int consume = split_consume_mode ? (v - 1) : (n - v);
    const int vertex_sign = (par.pv() && (consume & 1)) ? -1 : 1;

    const int lmax = diamond ? a_v + 1 : 1;
    auto relab = [&](int w) { return w < v ? w : w - 1; };  // others; lower=n, upper=n+1
    Rat bundle = 1;  // an l-fold bundle of parallel edges counts with 1/l!
    for (int l = 1; l <= lmax; ++l) {
        if (l > 1) bundle /= l;
        for (int b = 0; b + l - 1 <= a_v; ++b) {
            int cw = a_v - l + 1 - b;
            if (cw < 0) continue;
            if (!diamond && (b != 0 || cw != 0)) continue;
            for (int om = 0; om < (1 << no); ++om) {      // bit set: slot goes upper
                for (int im = 0; im < (1 << ni); ++im) {
                    int up_o = std::popcount(static_cast<unsigned>(om));
                    int up_i = std::popcount(static_cast<unsigned>(im));
                    int low_o = no - up_o + l, low_i = ni - up_i;
                    int upper_o = up_o, upper_i = up_i + l;
                    if (low_i < 1 || upper_o < 1) continue;
                    if (low_o + low_i + b < 3 || upper_o + upper_i + cw < 3) continue;

                    LegGraph r;
                    r.n = n + 1;
                    r.wt.reserve(n + 1);
                    for (int w = 1; w <= n; ++w)
                        if (w != v) r.wt.push_back(g.wt[w - 1]);
                    r.wt.push_back(b);
                    r.wt.push_back(cw);
                    r.edges = g.edges;
                    for (auto& [t, h] : r.edges) {
                        if (t != v) t = relab(t);
                        if (h != v) h = relab(h);
                    }
                    {
                        int bit = 0;
                        for (int slot : out_edge_slots)
                            r.edges[slot].first = (om >> bit++ & 1) ? n + 1 : n;
                        bit = 0;
                        for (int slot : in_edge_slots)
                            r.edges[slot].second = (im >> bit++ & 1) ? n + 1 : n;
                    }
                    for (int e = 0; e < l; ++e) r.edges.emplace_back(n, n + 1);
                    r.out_legs = g.out_legs;
                    r.in_legs = g.in_legs;
                    for (auto& w : r.out_legs)
                        if (w != v) w = relab(w);
                    for (auto& w : r.in_legs)
                        if (w != v) w = relab(w);
                    {
                        int bit = static_cast<int>(out_edge_slots.size());
                        for (int slot : out_leg_slots)
                            r.out_legs[slot] = (om >> bit++ & 1) ? n + 1 : n;
                        bit = static_cast<int>(in_edge_slots.size());
                        for (int slot : in_leg_slots)
                            r.in_legs[slot] = (im >> bit++ & 1) ? n + 1 : n;
                    }
                    emit(r, Rat(vertex_sign) * bundle);
                }
            }
        }
    }
}

}  // namespace detail

// The splitting differential of the plain theory: every vertex splits along
// one new edge; external legs and the hbar tag are untouched.
inline LegGraphSum delta_holieb(const LegGraphSum& x) {
    LegGraphSum out(x.par);
    for (auto& [tk, coef] : x.terms) {
        LegGraph g = tk.second.graph();
        if (g.strand) continue;
        if (!der_valid(g, true))
            throw std::runtime_error("delta_holieb: support outside the plain theory: " + show(g));
        for (int v = 1; v <= g.n; ++v)
            detail::split_vertex(g, v, false, x.par, [&](const LegGraph& r, const Rat& s) {
                out.add(r, tk.first, coef * s);
            });
    }
    return out;
}

// Diamond splitting: l >= 1 parallel edges, weight a = b + c + l - 1.
inline LegGraphSum delta_diamond(const LegGraphSum& x) {
    if ((x.par.c + x.par.d) % 2 != 0)
        throw std::runtime_error("delta_diamond: c+d must be even");
    LegGraphSum out(x.par);
    for (auto& [tk, coef] : x.terms) {
        LegGraph g = tk.second.graph();
        if (g.strand) continue;
        if (!der_valid(g, false))
            throw std::runtime_error("delta_diamond: invalid support: " + show(g));
        for (int v = 1; v <= g.n; ++v)
            detail::split_vertex(g, v, true, x.par, [&](const LegGraph& r, const Rat& s) {
                out.add(r, tk.first, coef * s);
            });
    }
    return out;
}

namespace detail {

// Attachment side of the derivation differential: a new corolla absorbs a
// set of external legs.  Exponent table fit by the delta^2 and chain-map
// suites; the attachment term carries
//   eps * (-1)^{x_e*|X| + c_e*|corolla| + xc_e*|X||corolla|}
// relative to the splitting part, separately above and below.
struct AttachSigns {
    int eps, x_e, c_e, xc_e;
};
inline AttachSigns attach_above{+1, 1, 0, 0};
inline AttachSigns attach_below{-1, 1, 1, 0};

inline int attach_sign(const AttachSigns& s, int deg_x, int deg_new) {
    int e = s.x_e * deg_x + s.c_e * deg_new + s.xc_e * deg_x * deg_new;
    int r = s.eps;
    if (e & 1) r = -r;
    return r;
}

template <class Emit>
void attach_terms(const LegGraph& g, int t, bool diamond, const LegParity& par,
                  const DerBounds& bounds, Emit&& emit) {
    const int m = g.out_arity(), n = g.in_arity();
    const int deg_x = der_degree(g, t, par);

    auto run_side = [&](bool above) {
        const auto& legs = above ? g.out_legs : g.in_legs;
        const int nl = g.strand ? 1 : static_cast<int>(legs.size());
        const int max_k = diamond ? nl : 1;
        for (int mask = 1; mask < (1 << nl); ++mask) {
            int k = std::popcount(static_cast<unsigned>(mask));
            if (k > max_k) continue;
            std::vector<char> marked(nl, 0);
            for (int i = 0; i < nl; ++i)
                if (mask >> i & 1) marked[i] = 1;
            int extract = extraction_parity(marked, extract_mode);
            int leg_par = above ? par.po() : par.pi();
            Rat base = (leg_par && extract) ? -1 : 1;
            for (int j = 2; j <= k; ++j) base /= j;  // parallel-bundle factor
            const int pmax = diamond ? std::max(0, bounds.hbar_order - t - k + 1) : 0;
            for (int p = 0; p <= pmax; ++p) {
                int t_new = t + p + k - 1;
                if (t_new > bounds.hbar_order) continue;
                // new vertex: above it keeps mo fresh out-legs and ni fresh
                // in-legs besides the k absorbed edges; below mirrored
                for (int mo = above ? 1 : 0; mo <= bounds.max_legs; ++mo) {
                    for (int ni = above ? 0 : 1; ni <= bounds.max_legs; ++ni) {
                        int vm = above ? mo : mo + k;
                        int vn = above ? ni + k : ni;
                        if (vm + vn + p < 3) continue;
                        int new_m = m - (above ? k : 0) + mo;
                        int new_n = n - (above ? 0 : k) + ni;
                        if (new_m + new_n > bounds.max_legs) continue;
                        if (new_m < 1 || new_n < 1) continue;

                        // fresh legs carry external labels: every interleaving
                        // with the kept legs is a distinct labeled term
                        LegGraph base_r;
                        std::vector<int> kept_out, kept_in;
                        if (g.strand) {
                            base_r.n = 1;
                            base_r.wt = {p};
                            if (above)
                                kept_in.push_back(1);  // the strand's in-leg feeds the new vertex
                            else
                                kept_out.push_back(1);
                        } else {
                            base_r = g;
                            base_r.n = g.n + 1;
                            base_r.wt.push_back(p);
                            std::vector<int> kept;
                            for (int i = 0; i < nl; ++i)
                                if (!marked[i]) kept.push_back(legs[i]);
                            if (above) {
                                for (int i = 0; i < nl; ++i)
                                    if (marked[i]) base_r.edges.emplace_back(legs[i], base_r.n);
                                kept_out = std::move(kept);
                                kept_in = g.in_legs;
                            } else {
                                for (int i = 0; i < nl; ++i)
                                    if (marked[i]) base_r.edges.emplace_back(base_r.n, legs[i]);
                                kept_in = std::move(kept);
                                kept_out = g.out_legs;
                            }
                            base_r.out_legs.clear();
                            base_r.in_legs.clear();
                        }
                        int deg_new = corolla_degree(vm, vn, p, par);
                        Rat s = base *
                                attach_sign(above ? attach_above : attach_below, deg_x, deg_new);
                        int vnew = base_r.n;
                        for (int omask = 0; omask < (1 << new_m); ++omask) {
                            if (std::popcount(static_cast<unsigned>(omask)) != mo) continue;
                            for (int imask = 0; imask < (1 << new_n); ++imask) {
                                if (std::popcount(static_cast<unsigned>(imask)) != ni) continue;
                                LegGraph r = base_r;
                                size_t ko = 0, ki = 0;
                                for (int j = 0; j < new_m; ++j)
                                    r.out_legs.push_back((omask >> j & 1) ? vnew : kept_out[ko++]);
                                for (int j = 0; j < new_n; ++j)
                                    r.in_legs.push_back((imask >> j & 1) ? vnew : kept_in[ki++]);
                                emit(r, t_new, s);
                            }
                        }
                    }
                }
            }
        }
    };
    run_side(true);
    run_side(false);
}

}  // namespace detail

// Full derivation-complex differential: vertex splitting plus corolla
// attachment at external legs, truncated by the bounds.
inline LegGraphSum der_delta(const LegGraphSum& x, bool diamond, const DerBounds& bounds) {
    LegGraphSum split = diamond ? delta_diamond(x) : delta_holieb(x);
    LegGraphSum out = split.truncated(bounds.max_legs, bounds.hbar_order);
    for (auto& [tk, coef] : x.terms) {
        LegGraph g = tk.second.graph();
        detail::attach_terms(g, tk.first, diamond, x.par, bounds,
                             [&](const LegGraph& r, int t_new, const Rat& s) {
                                 out.add(r, t_new, coef * s);
                             });
    }
    return out;
}

}  // namespace gcx
