#include <catch2/catch_amalgamated.hpp>

#include "gcx/hbar.hpp"
#include "gcx/homology.hpp"

using namespace gcx;

namespace {

SliceCache& test_cache() {
    static bool wiped = [] {
        std::filesystem::remove_all("/tmp/gcx-test-cache");
        return true;
    }();
    (void)wiped;
    static SliceCache c("/tmp/gcx-test-cache");
    return c;
}

}  // namespace

TEST_CASE("slice arithmetic pins vertex and edge counts", "[homology]") {
    for (int g = 1; g <= 2; ++g) {
        for (int k = -2; k <= 2 - g; ++k) {  // keeps the slices at V <= 6
            SliceKey key{{Family::GCor, 3}, g, k};
            auto basis = slice_basis(key, test_cache());
            for (auto& kk : basis.graphs) {
                REQUIRE(degree(kk.graph(), 3) == k);
                REQUIRE(genus(kk.graph()) == g);
                REQUIRE(kk.n == key.vertices());
                REQUIRE(static_cast<int>(kk.edges.size()) == key.edges());
            }
        }
    }
}

TEST_CASE("distinguished slice bases", "[homology]") {
    SliceKey t2{{Family::GCor, 3}, 1, -1};
    auto b = slice_basis(t2, test_cache());
    REQUIRE(b.graphs.size() == 1);
    REQUIRE(b.graphs[0].str() == "dg(2;1>2,1>2)");

    SliceKey u4{{Family::GCor, 2}, 2, 1};
    auto bu = slice_basis(u4, test_cache());
    for (auto& [k, c] : upsilon4().terms) REQUIRE(bu.index_of(k) >= 0);

    SliceKey empty{{Family::GCor, 3}, 1, -2};  // forces V=1, E=1: a self-loop
    REQUIRE(slice_basis(empty, test_cache()).graphs.empty());
}

TEST_CASE("consecutive slice matrices compose to zero", "[homology]") {
    for (int g = 1; g <= 2; ++g) {
        for (int k = -1; k <= 1; ++k) {
            SliceKey key{{Family::GCor, 2}, g, k};
            auto m1 = slice_matrix(key, test_cache());
            auto m2 = slice_matrix(key.shifted(1), test_cache());
            REQUIRE(m2.cols == m1.rows);
            // multiply sparsely and demand exact zero
            std::map<std::pair<int, int>, Rat> prod;
            std::vector<std::vector<std::pair<int, Rat>>> cols1(m1.cols);
            for (auto& [r, c, v] : m1.entries) cols1[c].emplace_back(r, v);
            std::vector<std::vector<std::pair<int, Rat>>> rows2(m2.cols);
            for (auto& [r, c, v] : m2.entries) rows2[c].emplace_back(r, v);
            for (int j = 0; j < m1.cols; ++j)
                for (auto& [mid, v1] : cols1[j])
                    for (auto& [r, v2] : rows2[mid]) prod[{r, j}] += v1 * v2;
            for (auto& [rc, v] : prod) REQUIRE(v == 0);
        }
    }
}

TEST_CASE("theta2 gives a zero column", "[homology]") {
    SliceKey key{{Family::GCor, 3}, 1, -1};
    auto m = slice_matrix(key, test_cache());
    REQUIRE(m.cols == 1);
    REQUIRE(m.entries.empty());
}

TEST_CASE("fast betti values", "[homology]") {
    REQUIRE(betti(SliceKey{{Family::GCor, 3}, 1, -1}, test_cache()) == 1);
    REQUIRE(betti(SliceKey{{Family::GCor, 2}, 1, 0}, test_cache()) == 0);
    REQUIRE(betti(SliceKey{{Family::GCor, 2}, 1, 2}, test_cache()) == 1);
    REQUIRE(betti(SliceKey{{Family::GCor, 2}, 2, 1}, test_cache()) == 1);
}

TEST_CASE("betti is basis-order independent", "[homology]") {
    SliceKey key{{Family::GCor, 2}, 2, 1};
    auto out = slice_matrix(key, test_cache());
    auto in = slice_matrix(key.shifted(-1), test_cache());
    int b = (out.cols - rank(out)) - rank(in);
    // recompute under a reversal of both bases
    auto perm = [](const SparseRationalMatrix& m) {
        SparseRationalMatrix p;
        p.rows = m.rows;
        p.cols = m.cols;
        for (auto& [r, c, v] : m.entries) p.add_entry(m.rows - 1 - r, m.cols - 1 - c, v);
        p.finalize();
        return p;
    };
    int b2 = (out.cols - rank(perm(out))) - rank(perm(in));
    REQUIRE(b == b2);
    REQUIRE(b == betti(key, test_cache()));
}

TEST_CASE("lift edge cases", "[homology]") {
    SliceKey key{{Family::GCor, 3}, 1, -2};
    GraphSum zero(Parity::odd);
    auto l = lift(zero, key, test_cache());
    REQUIRE(l);
    REQUIRE(l->zero());

    // theta2 sits in the degree -1 slice; the degree -2 slice is empty
    auto t2 = graph_sum_of(theta_graph(2), Parity::odd);
    REQUIRE_FALSE(lift(t2, key, test_cache()));
}

TEST_CASE("cold cache reproduces byte-identical files", "[homology]") {
    SliceKey key{{Family::GCor, 2}, 2, 1};
    SliceCache a("/tmp/gcx-test-cache-a"), b("/tmp/gcx-test-cache-b");
    std::filesystem::remove_all("/tmp/gcx-test-cache-a");
    std::filesystem::remove_all("/tmp/gcx-test-cache-b");
    slice_matrix(key, a);
    slice_matrix(key, b);
    for (auto* c : {&a, &b}) (void)c;
    auto read = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    REQUIRE(read(a.basis_path(key)) == read(b.basis_path(key)));
    REQUIRE(read(a.matrix_path(key)) == read(b.matrix_path(key)));
    REQUIRE(!read(a.basis_path(key)).empty());

    // warm read agrees with the recomputation
    auto m1 = slice_matrix(key, a);
    auto m2 = slice_matrix(key, b);
    REQUIRE(m1.entries == m2.entries);

    // a conventions bump invalidates the cache
    {
        std::ofstream out("/tmp/gcx-test-cache-a/conventions.txt");
        out << "stale-version\n";
    }
    SliceCache a2("/tmp/gcx-test-cache-a");
    REQUIRE(a2.usable());
    REQUIRE_FALSE(std::filesystem::exists(a2.basis_path(key)));
    slice_matrix(key, a2);
    REQUIRE(read(a2.basis_path(key)) == read(b.basis_path(key)));
}
