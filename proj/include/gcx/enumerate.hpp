#pragma once

#include <set>

#include "canonical.hpp"
#include "constraints.hpp"

namespace gcx {

namespace detail {

// Recursive generator over edge multisets.  `pairs` is the ordered list of
// admissible (tail, head) slots; multiplicities are chosen per slot in order,
// so every labeled multigraph on these slots is produced exactly once.
// Degree-deficit pruning: once the recursion has moved past every slot
// incident to a vertex, that vertex can no longer gain valence.
template <class Leaf>
void gen_rec(int n, int e_left, size_t pi, const std::vector<std::pair<int, int>>& pairs,
             std::vector<int>& mult, std::vector<int>& valence, int min_valence,
             const std::vector<int>& last_slot_of, Leaf&& leaf) {
    if (e_left == 0) {
        bool ok = true;
        for (int v = 1; v <= n && ok; ++v)
            if (valence[v] < min_valence) ok = false;
        if (ok) leaf(mult);
        return;
    }
    if (pi == pairs.size()) return;
    int deficit = 0;
    for (int v = 1; v <= n; ++v) {
        int need = min_valence - valence[v];
        if (need > 0) {
            if (last_slot_of[v] < static_cast<int>(pi)) return;  // unreachable deficit
            deficit += need;
        }
    }
    if (deficit > 2 * e_left) return;
    auto [t, h] = pairs[pi];
    for (int m = 0; m <= e_left; ++m) {
        mult[pi] = m;
        valence[t] += m;
        valence[h] += m;
        gen_rec(n, e_left - m, pi + 1, pairs, mult, valence, min_valence, last_slot_of, leaf);
        valence[t] -= m;
        valence[h] -= m;
        mult[pi] = 0;
    }
}

}  // namespace detail

// Exactly one representative per isomorphism class with n vertices and e
// edges satisfying c, excluding classes that are zero under p.  Output sorted
// by canonical key.  When c.acyclic is set, candidates are generated with
// tail < head (every DAG admits such a labeling); duplicates are merged by
// canonical key.
inline std::vector<DiKey> enumerate_digraphs(int n, int e, const ConstraintSet& c, Parity p) {
    if (n < 1) throw std::runtime_error("enumerate_digraphs: need n >= 1");
    if (e < 0) throw std::runtime_error("enumerate_digraphs: need e >= 0");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (c.acyclic && i > j) continue;
            pairs.emplace_back(i, j);
        }
    std::vector<int> last_slot_of(n + 1, -1);
    for (size_t k = 0; k < pairs.size(); ++k) {
        last_slot_of[pairs[k].first] = static_cast<int>(k);
        last_slot_of[pairs[k].second] = std::max(last_slot_of[pairs[k].second], static_cast<int>(k));
    }

    std::set<DiKey> found;
    std::vector<int> mult(pairs.size(), 0), valence(n + 1, 0);
    DiGraph g;
    g.n = n;
    auto leaf = [&](const std::vector<int>& m) {
        g.edges.clear();
        for (size_t k = 0; k < pairs.size(); ++k)
            for (int r = 0; r < m[k]; ++r) g.edges.push_back(pairs[k]);
        if (!check_constraints(g, c)) return;
        if (auto cg = canonicalize(g, p)) found.insert(std::move(cg->key));
    };
    detail::gen_rec(n, e, 0, pairs, mult, valence, c.min_valence, last_slot_of, leaf);
    return {found.begin(), found.end()};
}

}  // namespace gcx
