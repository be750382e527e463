#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cyclo/partition.hpp"

using namespace cyclo;

namespace {

CyclicCell cell(std::string_view text) { return parse_cell(text, true); }

// Uniform-ish random cell of CP_{n+1} drawn from the full census.
CyclicCell random_cp_cell(int n, std::mt19937_64& rng) {
    static std::map<int, std::vector<CyclicCell>> pool;
    auto& cells = pool[n];
    if (cells.empty())
        for (int parts = 3; parts <= n + 1; ++parts)
            for (auto& c : cyclic_partitions(n, parts)) cells.push_back(std::move(c));
    return cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
}

std::int64_t stirling2(int n, int k) {
    if (k == 0) return n == 0 ? 1 : 0;
    if (k > n) return 0;
    std::vector<std::vector<std::int64_t>> s(n + 1, std::vector<std::int64_t>(k + 1, 0));
    s[0][0] = 1;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= std::min(a, k); ++b)
            s[a][b] = s[a - 1][b - 1] + b * s[a - 1][b];
    return s[n][k];
}

std::int64_t factorial(int m) {
    std::int64_t f = 1;
    for (int t = 2; t <= m; ++t) f *= t;
    return f;
}

} // namespace

TEST_CASE("normalize rotates the n+1 block last") {
    CHECK(normalize_cyclic({5, {{4, 6}, {1}, {2, 3, 5}}}).str() == "1|2,3,5|4,6");
    CHECK(normalize_cyclic({3, {{1}, {2}, {3}, {4}}}).str() == "1|2|3|4");
    CHECK(normalize_cyclic({5, {{2, 3, 5}, {4, 6}, {1}}}).str() == "1|2,3,5|4,6");
}

TEST_CASE("normalization is idempotent and order-insensitive inside blocks") {
    CHECK(normalize_cyclic({5, {{6, 4}, {1}, {5, 3, 2}}}) ==
          normalize_cyclic({5, {{4, 6}, {1}, {2, 3, 5}}}));
    const CyclicCell c = cell("1|2,3|4,5|6");
    CHECK(CyclicCell(c.n(), c.blocks()) == c);
}

TEST_CASE("validation names the offending element") {
    CHECK_THROWS_WITH_AS(normalize_cyclic({3, {{1, 1}, {2}, {3, 4}}}),
                         "malformed partition: element 1 appears twice", std::invalid_argument);
    CHECK_THROWS_WITH_AS(normalize_cyclic({3, {{1}, {2}, {4}}}),
                         "malformed partition: element 3 missing", std::invalid_argument);
    CHECK_THROWS_WITH_AS(normalize_cyclic({3, {{1, 2}, {}, {3, 4}}}),
                         "malformed partition: empty block", std::invalid_argument);
    CHECK_THROWS_AS(normalize_cyclic({3, {{1, 2}, {3, 4, 5}}}), std::invalid_argument);
}

TEST_CASE("cell text round trip and strict parsing") {
    CHECK(cell("1|2,3|4,5|6").str() == "1|2,3|4,5|6");
    CHECK(parse_cell("1|2,3|4,5|6").str() == "1|2,3|4,5|6");
    CHECK_THROWS_AS(parse_cell("4,6|1|2,3,5"), std::invalid_argument); // needs rotation
    CHECK_THROWS_AS(parse_cell("1|3,2|4,5|6"), std::invalid_argument); // unsorted block
    CHECK(parse_cell("4,6|1|2,3,5", true).str() == "1|2,3,5|4,6");
    CHECK_THROWS_AS(parse_cell("1|2,x|3", true), std::invalid_argument);
}

TEST_CASE("codim-1 faces follow the ordered bipartition rule") {
    const auto faces = codim1_faces(cell("1|2,3|4,5|6"));
    const std::vector<CyclicCell> expected{cell("1|2|3|4,5|6"), cell("1|3|2|4,5|6"),
                                           cell("1|2,3|4|5|6"), cell("1|2,3|5|4|6")};
    CHECK(faces.size() == 4);
    for (const auto& f : expected)
        CHECK(std::find(faces.begin(), faces.end(), f) != faces.end());
    CHECK(std::is_sorted(faces.begin(), faces.end()));

    CHECK(codim1_faces(cell("1|2|3|4")).empty());

    // splitting the n+1 block keeps both orders, renormalized
    const auto faces2 = codim1_faces(cell("1,2|3|4,5"));
    CHECK(faces2.size() == 4);
    CHECK(std::find(faces2.begin(), faces2.end(), cell("1,2|3|4|5")) != faces2.end());
    CHECK(std::find(faces2.begin(), faces2.end(), parse_cell("1,2|3|5|4", true)) != faces2.end());
}

TEST_CASE("face count matches the split formula") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const CyclicCell c = random_cp_cell(5, rng);
        std::size_t expected = 0;
        for (const auto& b : c.blocks())
            if (b.size() >= 2) expected += (std::size_t{1} << b.size()) - 2;
        const auto faces = codim1_faces(c);
        CHECK(faces.size() == expected);
        for (const auto& f : faces) CHECK(f.dim() == c.dim() - 1);
    }
}

TEST_CASE("refinement is the closure of single splits") {
    CHECK(is_refinement(cell("1|2|3|4,5|6"), cell("1|2,3|4,5|6")));
    CHECK_FALSE(is_refinement(parse_cell("2|1|3|4,5|6", true), cell("1|2,3|4,5|6")));
    const CyclicCell c = cell("1|2,3|4,5|6");
    CHECK(is_refinement(c, c));
    CHECK(is_refinement(cell("1|2|3|4|5|6"), cell("1|2,3|4,5|6")));
    CHECK_FALSE(is_refinement(cell("1|2,3|4,5|6"), cell("1|2|3|4,5|6")));
    CHECK_THROWS_AS(is_refinement(cell("1|2|3|4"), cell("1|2,3|4,5|6")), std::invalid_argument);
}

TEST_CASE("refinement agrees with iterated faces on CP_5") {
    std::vector<CyclicCell> cells;
    for (int parts = 3; parts <= 5; ++parts)
        for (auto& c : cyclic_partitions(4, parts)) cells.push_back(std::move(c));
    // reachability through codim1_faces
    std::map<CyclicCell, std::set<CyclicCell>> below;
    for (const auto& c : cells) {
        auto& reach = below[c];
        std::vector<CyclicCell> frontier{c};
        while (!frontier.empty()) {
            std::vector<CyclicCell> next;
            for (const auto& f : frontier)
                for (auto& g : codim1_faces(f))
                    if (reach.insert(g).second) next.push_back(std::move(g));
            frontier = std::move(next);
        }
        reach.insert(c);
    }
    for (const auto& fine : cells)
        for (const auto& coarse : cells)
            CHECK(is_refinement(fine, coarse) == (below[coarse].count(fine) > 0));
}

TEST_CASE("reflect follows the block reversal") {
    CHECK(reflect(parse_cell("1,2,3|4,5|6,7,8,9", true)) == parse_cell("4,5|1,2,3|6,7,8,9", true));
    // definition trace: reverse all blocks before the n+1 block
    CHECK(reflect(cell("1|2|3|4")) == parse_cell("3|2|1|4", true));
    CHECK(reflect(cell("1|2,3|4,5|6")) == parse_cell("4,5|2,3|1|6", true));
}

TEST_CASE("reflect is a fixed-point-free involution") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const CyclicCell c = random_cp_cell(5, rng);
        const CyclicCell r = reflect(c);
        CHECK(reflect(r) == c);
        CHECK(r != c);
    }
}

TEST_CASE("class of a cell") {
    CHECK(class_of(cell("1|2,3|4,5|6")) == ClassPair{3, 5});
    CHECK(class_of(parse_cell("4,5|2,3|1|6", true)) == ClassPair{5, 3});
    CHECK_THROWS_AS(class_of(parse_cell("1,2,3|4", true)), std::invalid_argument);
}

TEST_CASE("reflect swaps the class") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const CyclicCell c = random_cp_cell(6, rng);
        CHECK(class_of(reflect(c)) == class_of(c).swapped());
    }
}

TEST_CASE("ascending cells") {
    CHECK(is_ascending(cell("1|2,3|4,5|6")));
    CHECK_FALSE(is_ascending(parse_cell("4,5|2,3|1|6", true)));
}

TEST_CASE("exactly half of all CP_5 cells are ascending") {
    std::size_t total = 0, ascending = 0;
    for (int parts = 3; parts <= 5; ++parts)
        for (const auto& c : cyclic_partitions(4, parts)) {
            ++total;
            if (is_ascending(c)) ++ascending;
        }
    CHECK(total == 24 + 60 + 50);
    CHECK(ascending * 2 == total);
}

TEST_CASE("cyclic partition census matches S(n+1,m)(m-1)!") {
    for (int n = 3; n <= 6; ++n)
        for (int parts = 3; parts <= n + 1; ++parts)
            CHECK(static_cast<std::int64_t>(cyclic_partitions(n, parts).size()) ==
                  stirling2(n + 1, parts) * factorial(parts - 1));
}

TEST_CASE("merge_adjacent undoes a split and wraps cyclically") {
    const CyclicCell c = cell("1|2,3|4,5|6");
    CHECK(merge_adjacent(c, 0) == parse_cell("1,2,3|4,5|6", true));
    CHECK(merge_adjacent(c, 3) == parse_cell("2,3|4,5|1,6", true)); // wrap joins N and block 0
}
