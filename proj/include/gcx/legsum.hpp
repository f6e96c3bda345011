#pragma once

#include <map>
#include <sstream>

#include "leggraph.hpp"

namespace gcx {

// Rational combination of canonical leg graphs with an hbar tag per term.
// The tag is the weight of the target generator the term acts on; splitting
// differentials preserve it, vertex attachments raise it by p + k - 1.
struct LegGraphSum {
    LegParity par;
    std::map<std::pair<int, LegKey>, Rat> terms;

    explicit LegGraphSum(LegParity p = {}) : par(p) {}

    bool zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }

    void add_canonical(int t, const LegKey& k, const Rat& c) {
        if (c == 0) return;
        auto key = std::pair(t, k);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    void add(const LegGraph& g, int t, const Rat& c) {
        if (c == 0) return;
        if (auto cg = leg_canonicalize(g, par)) add_canonical(t, cg->key, c * cg->sign);
    }

    LegGraphSum& operator+=(const LegGraphSum& o) {
        for (auto& [k, c] : o.terms) add_canonical(k.first, k.second, c);
        return *this;
    }
    LegGraphSum& operator*=(const Rat& r) {
        if (r == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [k, c] : terms) const_cast<Rat&>(c) *= r;
        return *this;
    }
    friend LegGraphSum operator*(const Rat& r, LegGraphSum s) {
        s *= r;
        return s;
    }
    friend LegGraphSum operator+(LegGraphSum a, const LegGraphSum& b) {
        a += b;
        return a;
    }
    friend LegGraphSum operator-(LegGraphSum a, const LegGraphSum& b) {
        a += Rat(-1) * b;
        return a;
    }
    bool operator==(const LegGraphSum& o) const { return par == o.par && terms == o.terms; }

    // restriction to one external arity (and optionally one tag)
    LegGraphSum arity_part(int m, int n, int t = -1) const {
        LegGraphSum out(par);
        for (auto& [k, c] : terms) {
            const auto& key = k.second;
            LegGraph g = key.graph();
            if (g.out_arity() == m && g.in_arity() == n && (t < 0 || k.first == t))
                out.add_canonical(k.first, key, c);
        }
        return out;
    }
    LegGraphSum tag_part(int t) const {
        LegGraphSum out(par);
        for (auto& [k, c] : terms)
            if (k.first == t) out.add_canonical(k.first, k.second, c);
        return out;
    }
    // drop terms beyond the stated truncation window
    LegGraphSum truncated(int max_legs, int hbar_order) const {
        LegGraphSum out(par);
        for (auto& [k, c] : terms) {
            LegGraph g = k.second.graph();
            if (g.out_arity() + g.in_arity() <= max_legs && k.first <= hbar_order)
                out.add_canonical(k.first, k.second, c);
        }
        return out;
    }
};

inline LegGraphSum leg_sum_of(const LegGraph& g, const LegParity& p, int t = 0,
                              const Rat& c = Rat(1)) {
    LegGraphSum s(p);
    s.add(g, t, c);
    return s;
}

// Same line format as the graph sums, with an hbar^<k> prefix on weighted tags.
inline std::string show_sum(const LegGraphSum& s) {
    std::string out;
    for (auto& [k, c] : s.terms) {
        if (k.first > 0) out += "hbar^" + std::to_string(k.first) + " ";
        out += show_rat(c) + " " + show(k.second) + "\n";
    }
    return out;
}

inline LegGraphSum parse_leg_sum(const std::string& text, const LegParity& p) {
    LegGraphSum s(p);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        int t = 0;
        if (tok.rfind("hbar^", 0) == 0) {
            t = std::stoi(tok.substr(5));
            if (!(ls >> tok)) throw std::runtime_error("missing coefficient: " + line);
        }
        std::string lit;
        if (!(ls >> lit)) throw std::runtime_error("missing leg-graph literal: " + line);
        s.add(parse_leggraph(lit), t, parse_rat(tok));
    }
    return s;
}

}  // namespace gcx
