#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

#include "digraph.hpp"

namespace gcx {

namespace detail {

// Shared canonical-labeling engine for directed multigraphs whose vertices may
// carry attributes (weight, out-leg count, in-leg count).  The canonical
// labeling minimizes the layered encoding: placing vertices one at a time,
// each placement contributes the block
//     [attr..., k, entries...]
// where the entries encode edges to already-placed vertices (position*2+dir,
// sorted) and k is the entry count.  For acyclic graphs only topological
// placements are searched; the restriction is label-independent, so the
// result is still a canonical form.  All minimizing labelings are collected
// to detect orientation-reversing automorphisms.
struct CanonEngine {
    int n;
    const std::vector<std::pair<int, int>>* edges;
    std::vector<std::array<int, 3>> attr;  // per vertex (1-based): wt, #out-legs, #in-legs
    bool topological = false;

    std::vector<std::vector<int>> out_adj, in_adj;  // neighbor lists with multiplicity
    std::vector<std::vector<int>> best_blocks;
    std::vector<std::vector<int>> achievers;  // labelings orig->position reaching best
    std::vector<int> pos_of, vert_at, unplaced_preds;
    bool have_best = false;

    void run() {
        out_adj.assign(n + 1, {});
        in_adj.assign(n + 1, {});
        for (auto [t, h] : *edges) {
            out_adj[t].push_back(h);
            in_adj[h].push_back(t);
        }
        pos_of.assign(n + 1, 0);
        vert_at.assign(n + 1, 0);
        unplaced_preds.assign(n + 1, 0);
        for (int v = 1; v <= n; ++v) unplaced_preds[v] = static_cast<int>(in_adj[v].size());
        best_blocks.assign(n, {});
        achievers.clear();
        have_best = false;
        extend(0, 0);
    }

    std::vector<int> block_for(int v) const {
        std::vector<int> entries;
        for (int u : in_adj[v])
            if (pos_of[u]) entries.push_back(pos_of[u] * 2);
        for (int u : out_adj[v])
            if (pos_of[u]) entries.push_back(pos_of[u] * 2 + 1);
        std::sort(entries.begin(), entries.end());
        std::vector<int> b;
        b.reserve(4 + entries.size());
        b.push_back(attr[v][0]);
        b.push_back(attr[v][1]);
        b.push_back(attr[v][2]);
        b.push_back(static_cast<int>(entries.size()));
        b.insert(b.end(), entries.begin(), entries.end());
        return b;
    }

    // cmp: 0 while this path's blocks equal the incumbent prefix, -1 once
    // strictly smaller.  After any child returns, the incumbent shares the
    // current prefix, so cmp resets to 0 for later siblings.
    void extend(int depth, int cmp) {
        if (depth == n) {
            std::vector<int> lab(pos_of.begin() + 1, pos_of.end());
            if (cmp < 0) achievers.clear();
            have_best = true;
            achievers.push_back(std::move(lab));
            return;
        }
        std::vector<std::pair<std::vector<int>, int>> cand;
        for (int v = 1; v <= n; ++v) {
            if (pos_of[v]) continue;
            if (topological && unplaced_preds[v] != 0) continue;
            cand.emplace_back(block_for(v), v);
        }
        std::sort(cand.begin(), cand.end());
        for (auto& [blk, v] : cand) {
            int c = cmp;
            if (have_best && c == 0) {
                if (blk < best_blocks[depth])
                    c = -1;
                else if (best_blocks[depth] < blk)
                    break;  // candidates are sorted: the rest are no better
            }
            if (!have_best || c < 0) best_blocks[depth] = blk;
            pos_of[v] = depth + 1;
            vert_at[depth + 1] = v;
            if (topological)
                for (int u : out_adj[v]) unplaced_preds[u]--;
            extend(depth + 1, c);
            if (topological)
                for (int u : out_adj[v]) unplaced_preds[u]++;
            pos_of[v] = 0;
            cmp = 0;
        }
    }
};

inline int perm_parity(std::vector<int> p) {  // p: 0-based permutation
    int par = 0;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = 1;
            j = p[j];
            ++len;
        }
        par ^= static_cast<int>((len - 1) & 1);
    }
    return par;
}

// Parity of the stable-sort permutation of `keys`.
template <class T>
int sort_parity(const std::vector<T>& keys) {
    std::vector<int> idx(keys.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    std::vector<int> p(idx.size());
    for (size_t r = 0; r < idx.size(); ++r) p[idx[r]] = static_cast<int>(r);
    return perm_parity(p);
}

}  // namespace detail

// Canonical key of a directed multigraph: vertex count plus the sorted edge
// list of the canonical labeling.
struct DiKey {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    auto operator<=>(const DiKey&) const = default;

    DiGraph graph() const { return DiGraph{n, edges}; }
    std::string str() const { return show(graph()); }
};

struct CanonDi {
    DiKey key;
    int sign = 1;  // input orientation = sign * canonical orientation
};

// Canonicalize under the given parity.  Returns nothing when the graph has an
// automorphism acting by -1 on the orientation data (the class is zero).
inline std::optional<CanonDi> canonicalize(const DiGraph& g, Parity p) {
    validate(g);
    const int pv = (p == Parity::odd) ? 1 : 0;  // vertex order is orientation data
    const int pe = 1 - pv;                      // edge order is orientation data

    if (g.n == 0) return CanonDi{DiKey{0, {}}, 1};

    if (pe) {
        auto sorted = g.edges;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1]) return std::nullopt;  // parallel swap is odd
    }

    detail::CanonEngine eng;
    eng.n = g.n;
    eng.edges = &g.edges;
    eng.attr.assign(g.n + 1, {0, 0, 0});
    eng.topological = is_acyclic(g);
    eng.run();

    auto sign_of = [&](const std::vector<int>& lab) {
        int s = 0;
        if (pv) {
            std::vector<int> p(g.n);
            for (int v = 1; v <= g.n; ++v) p[v - 1] = lab[v - 1] - 1;
            s ^= detail::perm_parity(std::move(p));
        }
        if (pe) {
            std::vector<std::pair<int, int>> mapped(g.edges.size());
            for (size_t i = 0; i < g.edges.size(); ++i)
                mapped[i] = {lab[g.edges[i].first - 1], lab[g.edges[i].second - 1]};
            s ^= detail::sort_parity(mapped);
        }
        return s;
    };

    int s0 = sign_of(eng.achievers.front());
    for (size_t i = 1; i < eng.achievers.size(); ++i)
        if (sign_of(eng.achievers[i]) != s0) return std::nullopt;

    const auto& lab = eng.achievers.front();
    DiKey key;
    key.n = g.n;
    key.edges.resize(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i)
        key.edges[i] = {lab[g.edges[i].first - 1], lab[g.edges[i].second - 1]};
    std::sort(key.edges.begin(), key.edges.end());
    return CanonDi{std::move(key), s0 ? -1 : 1};
}

}  // namespace gcx
