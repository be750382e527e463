#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cyclo/cp_morse.hpp"
#include "cyclo/cyclopermutohedron.hpp"
#include "cyclo/discrete_morse.hpp"

using namespace cyclo;

namespace {

CyclicCell cell(std::string_view text) { return parse_cell(text, true); }

bool paired_together(const CellComplex& cp, const Matching& m, const CyclicCell& lower,
                     const CyclicCell& upper) {
    const std::int64_t li = cp.index_of(lower.dim(), lower);
    const std::int64_t ui = cp.index_of(upper.dim(), upper);
    for (const auto& p : m.pairs)
        if (p.dim == lower.dim() && p.lower == li && p.upper == ui) return true;
    return false;
}

bool is_paired(const CellComplex& cp, const Matching& m, const CyclicCell& c) {
    const std::int64_t i = cp.index_of(c.dim(), c);
    for (const auto& p : m.pairs) {
        if (p.dim == c.dim() && p.lower == i) return true;
        if (p.dim + 1 == c.dim() && p.upper == i) return true;
    }
    return false;
}

} // namespace

TEST_CASE("the pairing follows the worked examples") {
    const CellComplex cp = build_cp(5);
    const Matching m = build_cp_matching(cp);
    CHECK(paired_together(cp, m, cell("2|3,4|1|5,6"), parse_cell("2,3,4|1|5,6", true)));
    CHECK(paired_together(cp, m, parse_cell("4|5|3|1|2,6", true), parse_cell("4,5|3|1|2,6", true)));
    CHECK_FALSE(is_paired(cp, m, parse_cell("4|3|2|1|5,6", true)));
}

TEST_CASE("critical censuses for n = 3, 4, 6") {
    CHECK(cp_critical_count(3, 0) == 1);
    CHECK(cp_critical_count(3, 1) == 7);
    CHECK(cp_critical_count(4, 2) == 17);
    CHECK(cp_critical_count(6, 4) == 72);

    for (int n = 3; n <= 5; ++n) {
        const CellComplex cp = build_cp(n);
        const Matching m = build_cp_matching(cp);
        const MatchingIndex mi(cp.chain, m);
        const auto critical = mi.critical_by_dim();
        for (int d = 0; d <= cp.chain.top_dim(); ++d)
            CHECK(static_cast<std::int64_t>(critical[static_cast<std::size_t>(d)].size()) ==
                  cp_critical_count(n, d));
    }
}

TEST_CASE("classification splits the critical cells into the two types") {
    const CellComplex cp = build_cp(4);
    const Matching m = build_cp_matching(cp);
    const auto critical = classify_critical_cp(cp, m);
    std::int64_t type1 = 0, type2 = 0;
    for (const auto& c : critical) {
        if (c.kind == CpCriticalCell::Kind::type1) {
            ++type1;
            CHECK(std::is_sorted(c.nabla.rbegin(), c.nabla.rend()));
        } else {
            ++type2;
            CHECK(c.i < c.I.front());
        }
        CHECK(cp.index_of(c.cell(4).dim(), c.cell(4)) >= 0);
    }
    CHECK(type1 == 1 + 4 + 6); // C(4,d) over dims 0..2
    CHECK(type2 == 16 - 4 - 1);
}

TEST_CASE("the path lemma holds exhaustively for n = 4 and 5") {
    for (int n = 4; n <= 5; ++n) {
        const CellComplex cp = build_cp(n);
        const Matching m = build_cp_matching(cp);
        const auto report = verify_cp_path_lemma(cp, m, n == 4);
        CHECK_MESSAGE(report.ok, report.detail);
    }
}

TEST_CASE("nabla extension pairs have exactly two paths") {
    const CellComplex cp = build_cp(4);
    const Matching m = build_cp_matching(cp);
    // tau = (2|1|3,4,5), sigma = (3|2|1|4,5): nabla' = nabla u {3}
    const CyclicCell tau = parse_cell("2|1|3,4,5", true);
    const CyclicCell sigma = parse_cell("3|2|1|4,5", true);
    CHECK(critical_pair_path_count(cp.chain, m, tau.dim(), cp.index_of(tau.dim(), tau),
                                   cp.index_of(sigma.dim(), sigma)) == 2);
}
