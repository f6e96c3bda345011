#pragma once

#include <filesystem>

#include "enumerate.hpp"
#include "exactla.hpp"
#include "gclib.hpp"

namespace gcx {

inline const char* conventions_version() { return "gcx-conventions-1"; }

// Address of a finite bigraded piece.  The vertex and edge counts of a slice
// are determined: V = k + d + (d-1)(g-1), E = V + g - 1.
struct SliceKey {
    ComplexId complex;
    int genus = 0;
    int degree = 0;

    int vertices() const {
        return degree + complex.d + (complex.d - 1) * (genus - 1);
    }
    int edges() const { return vertices() + genus - 1; }
    SliceKey shifted(int dk) const { return SliceKey{complex, genus, degree + dk}; }
};

struct SliceBasis {
    SliceKey key;
    std::vector<DiKey> graphs;  // sorted by canonical key

    int index_of(const DiKey& k) const {
        auto it = std::lower_bound(graphs.begin(), graphs.end(), k);
        if (it == graphs.end() || !(*it == k)) return -1;
        return static_cast<int>(it - graphs.begin());
    }
};

// Persistent cache: <root>/<family>-d<d>/g<g>/k<k>.basis and .smat, with a
// conventions.txt at the root.  A version mismatch invalidates everything.
class SliceCache {
  public:
    explicit SliceCache(std::string root = "") {
        if (root.empty()) {
            if (const char* env = std::getenv("GCX_CACHE")) root = env;
            else root = "cache";
        }
        root_ = root;
    }

    const std::string& root() const { return root_; }

    std::filesystem::path dir_for(const SliceKey& k) const {
        return std::filesystem::path(root_) /
               (k.complex.name() + "-d" + std::to_string(k.complex.d)) /
               ("g" + std::to_string(k.genus));
    }
    std::filesystem::path basis_path(const SliceKey& k) const {
        return dir_for(k) / ("k" + std::to_string(k.degree) + ".basis");
    }
    std::filesystem::path matrix_path(const SliceKey& k) const {
        return dir_for(k) / ("k" + std::to_string(k.degree) + ".smat");
    }

    bool usable() {
        if (checked_) return ok_;
        checked_ = true;
        auto conv = std::filesystem::path(root_) / "conventions.txt";
        std::error_code ec;
        if (std::filesystem::exists(conv, ec)) {
            std::ifstream in(conv);
            std::string v;
            std::getline(in, v);
            ok_ = (v == conventions_version());
            if (!ok_) {
                std::filesystem::remove_all(root_, ec);  // convention bump invalidates
                write_conventions();
                ok_ = true;
            }
        } else {
            write_conventions();
            ok_ = true;
        }
        return ok_;
    }

    std::optional<std::string> read(const std::filesystem::path& p) {
        if (!usable()) return std::nullopt;
        std::ifstream in(p);
        if (!in) return std::nullopt;
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    // write-temporary then rename, so concurrent readers never see partial files
    void write(const std::filesystem::path& p, const std::string& text) {
        if (!usable()) return;
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
        auto tmp = p;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            out << text;
        }
        std::filesystem::rename(tmp, p, ec);
    }

  private:
    void write_conventions() {
        std::error_code ec;
        std::filesystem::create_directories(root_, ec);
        std::ofstream out(std::filesystem::path(root_) / "conventions.txt");
        out << conventions_version() << "\n";
    }

    std::string root_;
    bool checked_ = false, ok_ = false;
};

inline SliceCache& default_cache() {
    static SliceCache c;
    return c;
}

inline SliceBasis slice_basis(const SliceKey& key, SliceCache& cache = default_cache()) {
    SliceBasis b{key, {}};
    int v = key.vertices(), e = key.edges();
    if (v < 1 || e < 0 || key.genus < 0) return b;
    if (auto text = cache.read(cache.basis_path(key))) {
        std::istringstream in(*text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto cg = canonicalize(parse_digraph(line), key.complex.parity());
            if (!cg) throw std::runtime_error("corrupt basis cache entry: " + line);
            b.graphs.push_back(std::move(cg->key));
        }
        return b;
    }
    b.graphs = enumerate_digraphs(v, e, key.complex.constraints(), key.complex.parity());
    std::string text;
    for (auto& k : b.graphs) text += k.str() + "\n";
    cache.write(cache.basis_path(key), text);
    return b;
}

// Matrix of the differential from slice k to slice k+1 in the canonical
// bases; columns follow the source basis order.
inline SparseRationalMatrix slice_matrix(const SliceKey& key, SliceCache& cache = default_cache()) {
    if (auto text = cache.read(cache.matrix_path(key))) return parse_matrix(*text);
    auto src = slice_basis(key, cache);
    auto dst = slice_basis(key.shifted(1), cache);
    SparseRationalMatrix m;
    m.rows = static_cast<int>(dst.graphs.size());
    m.cols = static_cast<int>(src.graphs.size());
    Parity p = key.complex.parity();
    for (int j = 0; j < m.cols; ++j) {
        auto dx = differential(graph_sum_of(src.graphs[j].graph(), p), key.complex);
        for (auto& [k, c] : dx.terms) {
            int i = dst.index_of(k);
            if (i < 0)
                throw std::runtime_error("differential left the enumerated slice: " + k.str());
            m.add_entry(i, j, c);
        }
    }
    m.finalize();
    cache.write(cache.matrix_path(key), show_matrix(m));
    return m;
}

// dim ker(delta: k -> k+1) - rank(delta: k-1 -> k), exactly.
inline int betti(const SliceKey& key, SliceCache& cache = default_cache()) {
    auto out = slice_matrix(key, cache);
    auto in = slice_matrix(key.shifted(-1), cache);
    return (out.cols - rank(out)) - rank(in);
}

// Some x in slice (genus, degree) with differential(x) = target, or nothing.
// Any solution is certified by re-applying the differential.
inline std::optional<GraphSum> lift(const GraphSum& target, const SliceKey& key,
                                    SliceCache& cache = default_cache()) {
    Parity p = key.complex.parity();
    auto dst = slice_basis(key.shifted(1), cache);
    std::vector<Rat> b(dst.graphs.size(), Rat(0));
    for (auto& [k, c] : target.terms) {
        int i = dst.index_of(k);
        if (i < 0) throw std::runtime_error("lift: target not in the stated slice: " + k.str());
        b[i] = c;
    }
    auto m = slice_matrix(key, cache);
    auto x = solve(m, b);
    if (!x) return std::nullopt;
    auto src = slice_basis(key, cache);
    GraphSum out(p);
    for (size_t j = 0; j < x->size(); ++j)
        if ((*x)[j] != 0) out.add_canonical(src.graphs[j], (*x)[j]);
    if (!(differential(out, key.complex) - target).zero())
        throw std::runtime_error("lift: certificate check failed");
    return out;
}

}  // namespace gcx
