#pragma once

#include "propcalc.hpp"

namespace gcx {

// Attaches m out-legs and n in-legs to an oriented graph in all ways, for
// every arity within the bound; terms with an inadmissible vertex are zero.
inline LegGraphSum map_F(const GraphSum& g, const LegParity& par, int max_legs) {
    if (g.parity != parity_of_dimension(par.c + par.d + 1))
        throw std::runtime_error("map_F: parity mismatch with c+d+1");
    LegGraphSum out(par);
    for (auto& [key, coef] : g.terms) {
        DiGraph gr = key.graph();
        for (int m = 1; m <= max_legs - 1; ++m) {
            for (int n = 1; m + n <= max_legs; ++n) {
                LegGraph lg;
                lg.n = gr.n;
                lg.edges = gr.edges;
                lg.wt.assign(gr.n, 0);
                lg.out_legs.assign(m, 1);
                lg.in_legs.assign(n, 1);
                // all functions [m] -> V, [n] -> V
                while (true) {
                    if (der_valid(lg, true)) out.add(lg, 0, coef);
                    int i = 0;
                    while (i < m + n) {
                        int& slot = i < m ? lg.out_legs[i] : lg.in_legs[i - m];
                        if (slot < gr.n) {
                            slot++;
                            break;
                        }
                        slot = 1;
                        ++i;
                    }
                    if (i == m + n) break;
                }
            }
        }
    }
    return out;
}

}  // namespace gcx
