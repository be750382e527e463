#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cyclo/bicyclopermutohedron.hpp"
#include "cyclo/cyclopermutohedron.hpp"
#include "cyclo/homology.hpp"

using namespace cyclo;

namespace {

SparseIntMatrix dense(std::vector<std::vector<std::int64_t>> rows) {
    std::vector<Triplet> ts;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] != 0)
                ts.push_back({static_cast<std::int64_t>(r), static_cast<std::int64_t>(c),
                              rows[r][c]});
    return SparseIntMatrix::from_triplets(static_cast<std::int64_t>(rows.size()),
                                          rows.empty() ? 0
                                                       : static_cast<std::int64_t>(rows[0].size()),
                                          std::move(ts));
}

// Textbook rank over the rationals, as a cross-check for SNF ranks.
std::int64_t rank_gauss(std::vector<std::vector<double>> m) {
    std::int64_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        for (std::size_t r = row; r < rows; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (std::abs(m[pivot][col]) < 1e-9) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row) continue;
            const double f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("smith normal form on the hand cases") {
    {
        const auto snf = smith_normal_form(dense({{2, 0}, {0, 0}}));
        CHECK(snf.rank == 1);
        CHECK(snf.diagonal == std::vector<long long>{2});
    }
    {
        const auto snf = smith_normal_form(dense({{1, 1}, {1, -1}}));
        CHECK(snf.rank == 2);
        CHECK(snf.diagonal == std::vector<long long>{1, 2});
    }
    {
        const auto snf = smith_normal_form(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
        CHECK(snf.rank == 3);
        CHECK(snf.diagonal == std::vector<long long>{1, 1, 1});
    }
    {
        const auto snf = smith_normal_form(SparseIntMatrix(3, 4));
        CHECK(snf.rank == 0);
        CHECK(snf.diagonal.empty());
    }
    {
        // divisibility chain with mixed entries
        const auto snf = smith_normal_form(dense({{2, 4}, {4, 2}}));
        CHECK(snf.rank == 2);
        CHECK(snf.diagonal == std::vector<long long>{2, 6});
    }
}

TEST_CASE("smith rank agrees with rational rank on random sparse matrices") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
        std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
        std::vector<std::vector<double>> md(rows, std::vector<double>(cols, 0));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 3 == 0) {
                    const auto v = static_cast<std::int64_t>(rng() % 7) - 3;
                    m[r][c] = v;
                    md[r][c] = static_cast<double>(v);
                }
        CHECK(smith_normal_form(dense(m)).rank == rank_gauss(md));
    }
}

TEST_CASE("homology of CP_4 and CP_5") {
    const HomologyResult h4 = homology_z(build_cp(3).chain);
    CHECK(h4.betti_vector() == std::vector<std::int64_t>{1, 7});
    CHECK(h4.torsion_free());
    CHECK(h4.euler() == -6);

    const HomologyResult h5 = homology_z(build_cp(4).chain);
    CHECK(h5.betti_vector() == std::vector<std::int64_t>{1, 4, 17});
    CHECK(h5.torsion_free());
    CHECK(h5.betti_mod2_vector() == h5.betti_vector()); // torsion free
}

TEST_CASE("homology of QP_4 and QP_5 matches the theorems") {
    const HomologyResult h4 = homology_z(build_qp(3).chain);
    CHECK(h4.betti_vector() == std::vector<std::int64_t>{1, 4});
    CHECK(h4.torsion_free());

    const HomologyResult h5 = homology_z(build_qp(4).chain);
    CHECK(h5.betti_vector() == std::vector<std::int64_t>{1, 0, 6});
    CHECK(h5.dims[1].torsion == std::vector<long long>{2, 2, 2, 2, 2});
    CHECK(h5.dims[0].torsion.empty());
    CHECK(h5.dims[2].torsion.empty());
    CHECK(h5.betti_mod2_vector() == std::vector<std::int64_t>{1, 5, 11});
}

TEST_CASE("universal coefficients consistency on QP complexes") {
    for (int n = 3; n <= 5; ++n) {
        const HomologyResult h = homology_z(build_qp(n).chain);
        for (std::size_t d = 0; d < h.dims.size(); ++d) {
            for (long long f : h.dims[d].torsion) CHECK(f == 2); // only 2-torsion
            const std::int64_t t_here = static_cast<std::int64_t>(h.dims[d].torsion.size());
            const std::int64_t t_below =
                d == 0 ? 0 : static_cast<std::int64_t>(h.dims[d - 1].torsion.size());
            CHECK(h.dims[d].betti_mod2 == h.dims[d].betti + t_here + t_below);
        }
        CHECK(h.euler() == build_qp(n).chain.euler_characteristic());
    }
}

TEST_CASE("homology refuses a non-complex") {
    const ChainComplex bad({{"a", "b"}, {"e"}, {"f"}},
                           {SparseIntMatrix(0, 2),
                            SparseIntMatrix::from_triplets(2, 1, {{0, 0, 1}, {1, 0, 1}}),
                            SparseIntMatrix::from_triplets(1, 1, {{0, 0, 1}})});
    CHECK_THROWS_AS(homology_z(bad), std::invalid_argument);
}

TEST_CASE("mod-2 homology drops even entries") {
    // boundary with a 2 in it: rank over Z is 1, over GF(2) is 0
    const auto m = dense({{2}});
    CHECK(smith_normal_form(m).rank == 1);
    const std::vector<std::int64_t> counts{1, 1};
    const std::vector<SparseIntMatrix> boundaries{SparseIntMatrix(0, 1), m};
    const auto betti2 = homology_mod2(counts, boundaries);
    CHECK(betti2 == std::vector<std::int64_t>{1, 1});
    const auto h = homology_z(counts, boundaries);
    CHECK(h.betti_vector() == std::vector<std::int64_t>{0, 0});
    CHECK(h.dims[0].torsion == std::vector<long long>{2});
}
