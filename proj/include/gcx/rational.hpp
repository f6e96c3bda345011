#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace gcx {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_of(long p, long q = 1) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

// Accepts "p/q" or a bare integer.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(Int(s), 1);
            r.canonicalize();
            return r;
        }
        Rat r(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("bad rational literal: " + s);
    }
}

// Always prints p/q, including unit denominators.
inline std::string show_rat(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace gcx
