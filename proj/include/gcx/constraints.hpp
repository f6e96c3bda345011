#pragma once

#include "digraph.hpp"

namespace gcx {

struct ConstraintSet {
    bool connected = false;
    bool acyclic = false;
    int min_valence = 0;
    bool forbid_passing = false;     // no vertex with exactly one in, one out, nothing else
    bool require_in_and_out = false;

    static ConstraintSet none() { return {}; }
    // Connected graphs with at least bivalent vertices.
    static ConstraintSet dgc() { return {true, false, 2, false, false}; }
    // Additionally oriented (no wheels) and without passing vertices.
    static ConstraintSet gcor() { return {true, true, 2, true, false}; }
};

inline bool check_constraints(const DiGraph& g, const ConstraintSet& c) {
    if (c.min_valence > 0 || c.forbid_passing || c.require_in_and_out) {
        std::vector<int> indeg(g.n + 1, 0), outdeg(g.n + 1, 0);
        for (auto [t, h] : g.edges) {
            outdeg[t]++;
            indeg[h]++;
        }
        for (int v = 1; v <= g.n; ++v) {
            if (indeg[v] + outdeg[v] < c.min_valence) return false;
            if (c.forbid_passing && indeg[v] == 1 && outdeg[v] == 1) return false;
            if (c.require_in_and_out && (indeg[v] == 0 || outdeg[v] == 0)) return false;
        }
    }
    if (c.connected && !is_connected(g)) return false;
    if (c.acyclic && !is_acyclic(g)) return false;
    return true;
}

}  // namespace gcx
