#pragma once

#include <map>
#include <sstream>

#include "canonical.hpp"
#include "constraints.hpp"
#include "rational.hpp"

namespace gcx {

enum class Family { dfGC, dGC, GCor };

struct ComplexId {
    Family family = Family::GCor;
    int d = 3;

    Parity parity() const { return parity_of_dimension(d); }
    ConstraintSet constraints() const {
        switch (family) {
            case Family::dfGC: return ConstraintSet::none();
            case Family::dGC: return ConstraintSet::dgc();
            default: return ConstraintSet::gcor();
        }
    }
    std::string name() const {
        switch (family) {
            case Family::dfGC: return "dfgc";
            case Family::dGC: return "dgc";
            default: return "gcor";
        }
    }
};

inline Family parse_family(const std::string& s) {
    if (s == "dfgc") return Family::dfGC;
    if (s == "dgc") return Family::dGC;
    if (s == "gcor") return Family::GCor;
    throw std::runtime_error("unknown complex family: " + s);
}

// Finite rational combination of canonical signed graphs.
struct GraphSum {
    Parity parity = Parity::odd;
    std::map<DiKey, Rat> terms;

    explicit GraphSum(Parity p = Parity::odd) : parity(p) {}

    bool zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }

    void add_canonical(const DiKey& k, const Rat& c) {
        if (c == 0) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    // Adds a labeled graph; canonicalization supplies the sign.
    void add(const DiGraph& g, const Rat& c) {
        if (c == 0) return;
        if (auto cg = canonicalize(g, parity)) add_canonical(cg->key, c * cg->sign);
    }

    GraphSum& operator+=(const GraphSum& o) {
        for (auto& [k, c] : o.terms) add_canonical(k, c);
        return *this;
    }
    GraphSum& operator*=(const Rat& r) {
        if (r == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [k, c] : terms) const_cast<Rat&>(c) *= r;
        return *this;
    }
    friend GraphSum operator*(const Rat& r, GraphSum s) {
        s *= r;
        return s;
    }
    friend GraphSum operator+(GraphSum a, const GraphSum& b) {
        a += b;
        return a;
    }
    friend GraphSum operator-(GraphSum a, const GraphSum& b) {
        a += Rat(-1) * b;
        return a;
    }
    bool operator==(const GraphSum& o) const {
        return parity == o.parity && terms == o.terms;
    }
};

// One term per line: <p>/<q> <graph-literal>.  '#' starts a comment.
inline std::string show_sum(const GraphSum& s) {
    std::string out;
    for (auto& [k, c] : s.terms) out += show_rat(c) + " " + k.str() + "\n";
    return out;
}

inline GraphSum parse_sum(const std::string& text, Parity p) {
    GraphSum s(p);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string coef, lit;
        if (!(ls >> coef)) continue;
        if (!(ls >> lit)) throw std::runtime_error("missing graph literal on line: " + line);
        s.add(parse_digraph(lit), parse_rat(coef));
    }
    return s;
}

}  // namespace gcx
