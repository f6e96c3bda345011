#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <tuple>

#include "rational.hpp"

namespace gcx {

struct SparseRationalMatrix {
    int rows = 0, cols = 0;
    std::vector<std::tuple<int, int, Rat>> entries;  // sorted by (row, col), nonzero

    void add_entry(int r, int c, const Rat& v) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::runtime_error("matrix entry out of range");
        if (v != 0) entries.emplace_back(r, c, v);
    }
    void finalize() {
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) {
                      return std::pair(std::get<0>(a), std::get<1>(a)) <
                             std::pair(std::get<0>(b), std::get<1>(b));
                  });
        for (size_t i = 0; i + 1 < entries.size(); ++i)
            if (std::get<0>(entries[i]) == std::get<0>(entries[i + 1]) &&
                std::get<1>(entries[i]) == std::get<1>(entries[i + 1]))
                throw std::runtime_error("duplicate matrix entry");
    }
};

namespace detail {

// Rows as sparse integer vectors, kept content-free: elimination uses integer
// cross-multiplication followed by a gcd strip, which bounds growth without
// giving up exactness.
using IRow = std::vector<std::pair<int, Int>>;

inline void strip_content(IRow& r) {
    if (r.empty()) return;
    Int g = 0;
    for (auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    if (sgn(r.front().second) < 0)
        for (auto& [c, v] : r) v = -v;
}

// a*x + b*y for sorted sparse rows
inline IRow row_combine(const Int& a, const IRow& x, const Int& b, const IRow& y) {
    IRow out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, b * y[j].second);
            ++j;
        } else {
            Int v = a * x[i].second + b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

inline std::vector<IRow> integer_rows(const SparseRationalMatrix& m, int extra_col = -1,
                                      const std::vector<Rat>* rhs = nullptr) {
    std::vector<std::vector<std::pair<int, Rat>>> rr(m.rows);
    for (auto& [r, c, v] : m.entries) rr[r].emplace_back(c, v);
    if (rhs)
        for (int r = 0; r < m.rows; ++r)
            if ((*rhs)[r] != 0) rr[r].emplace_back(extra_col, (*rhs)[r]);
    std::vector<IRow> rows(m.rows);
    for (int r = 0; r < m.rows; ++r) {
        Int den = 1;
        for (auto& [c, v] : rr[r]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
        for (auto& [c, v] : rr[r]) {
            Rat scaled = v * den;
            rows[r].emplace_back(c, scaled.get_num());
        }
        strip_content(rows[r]);
    }
    return rows;
}

struct Echelon {
    std::vector<IRow> rows;        // echelon rows, one per pivot
    std::vector<int> pivot_col;    // same length as rows
};

// Column-ordered elimination: columns are consumed left to right (the basis
// key order), the pivot row in each column is the sparsest candidate.
inline Echelon echelonize(std::vector<IRow> rows, int ncols) {
    Echelon ech;
    std::vector<size_t> active;
    for (size_t r = 0; r < rows.size(); ++r)
        if (!rows[r].empty()) active.push_back(r);
    for (int col = 0; col < ncols && !active.empty(); ++col) {
        size_t best = SIZE_MAX;
        for (size_t idx : active) {
            if (rows[idx].front().first != col) continue;
            if (best == SIZE_MAX || rows[idx].size() < rows[best].size() ||
                (rows[idx].size() == rows[best].size() && idx < best))
                best = idx;
        }
        if (best == SIZE_MAX) continue;
        IRow piv = std::move(rows[best]);
        const Int& p = piv.front().second;
        std::vector<size_t> next;
        next.reserve(active.size());
        for (size_t idx : active) {
            if (idx == best) continue;
            if (!rows[idx].empty() && rows[idx].front().first == col) {
                Int q = rows[idx].front().second;
                rows[idx] = row_combine(p, rows[idx], -q, piv);
                strip_content(rows[idx]);
            }
            if (!rows[idx].empty()) next.push_back(idx);
        }
        ech.pivot_col.push_back(col);
        ech.rows.push_back(std::move(piv));
        active = std::move(next);
    }
    return ech;
}

}  // namespace detail

inline int rank(const SparseRationalMatrix& m) {
    auto ech = detail::echelonize(detail::integer_rows(m), m.cols);
    return static_cast<int>(ech.rows.size());
}

// Exact basis of the null space, one vector per free column, back-substituted
// against the echelon rows; vectors are integer with content one.
inline std::vector<std::vector<Rat>> kernel_basis(const SparseRationalMatrix& m) {
    auto ech = detail::echelonize(detail::integer_rows(m), m.cols);
    std::vector<int> pivot_of_col(m.cols, -1);
    for (size_t r = 0; r < ech.pivot_col.size(); ++r) pivot_of_col[ech.pivot_col[r]] = static_cast<int>(r);
    std::vector<std::vector<Rat>> basis;
    for (int free_c = 0; free_c < m.cols; ++free_c) {
        if (pivot_of_col[free_c] >= 0) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[free_c] = 1;
        for (int r = static_cast<int>(ech.rows.size()) - 1; r >= 0; --r) {
            if (ech.pivot_col[r] > free_c) continue;
            Rat acc = 0;
            for (auto& [c, a] : ech.rows[r])
                if (c > ech.pivot_col[r] && v[c] != 0) acc += Rat(a) * v[c];
            v[ech.pivot_col[r]] = -acc / Rat(ech.rows[r].front().second);
        }
        // clear denominators, strip content, make the leading entry positive
        Int den = 1;
        for (auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        Int g = 0;
        for (auto& x : v) {
            x *= den;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
        }
        if (g > 1)
            for (auto& x : v) x /= Rat(g);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Any exact solution of Mx = b, or nothing when the system is inconsistent.
inline std::optional<std::vector<Rat>> solve(const SparseRationalMatrix& m,
                                             const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::runtime_error("solve: dimension mismatch");
    auto rows = detail::integer_rows(m, m.cols, &b);
    auto ech = detail::echelonize(std::move(rows), m.cols + 1);
    std::vector<Rat> x(m.cols, Rat(0));
    for (int r = static_cast<int>(ech.rows.size()) - 1; r >= 0; --r) {
        if (ech.pivot_col[r] == m.cols) return std::nullopt;  // 0 = nonzero
        Rat acc = 0;
        for (auto& [c, a] : ech.rows[r]) {
            if (c == ech.pivot_col[r]) continue;
            if (c == m.cols)
                acc -= Rat(a);  // right-hand side carried as the last column
            else if (x[c] != 0)
                acc += Rat(a) * x[c];
        }
        x[ech.pivot_col[r]] = -acc / Rat(ech.rows[r].front().second);
    }
    return x;
}

// Matrix file: header line "rows cols nnz", then "row col p/q" triplets,
// 0-indexed, sorted by (row, col).
inline std::string show_matrix(const SparseRationalMatrix& m) {
    std::ostringstream out;
    out << m.rows << " " << m.cols << " " << m.entries.size() << "\n";
    for (auto& [r, c, v] : m.entries) out << r << " " << c << " " << show_rat(v) << "\n";
    return out.str();
}

inline SparseRationalMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    SparseRationalMatrix m;
    size_t nnz = 0;
    if (!(in >> m.rows >> m.cols >> nnz)) throw std::runtime_error("bad matrix header");
    for (size_t i = 0; i < nnz; ++i) {
        int r, c;
        std::string v;
        if (!(in >> r >> c >> v)) throw std::runtime_error("truncated matrix file");
        m.add_entry(r, c, parse_rat(v));
    }
    m.finalize();
    return m;
}

}  // namespace gcx
