#include "cyclo/verify.hpp"

#include <algorithm>
#include <random>

#include "cyclo/bicyclopermutohedron.hpp"
#include "cyclo/cp_morse.hpp"
#include "cyclo/cyclopermutohedron.hpp"
#include "cyclo/homology.hpp"

namespace cyclo {

namespace {

struct Checker {
    std::ostream& os;
    bool all_ok = true;

    void line(const std::string& name, bool ok, const std::string& detail = {}) {
        os << (ok ? "[ ok ] " : "[FAIL] ") << name;
        if (!ok && !detail.empty()) os << ": " << detail;
        os << '\n';
        all_ok = all_ok && ok;
    }
};

bool unit_entries(const ChainComplex& cc) {
    for (const auto& b : cc.boundaries())
        if (b.max_abs() > 1) return false;
    return true;
}

bool same_homology(const HomologyResult& a, const HomologyResult& b) {
    if (a.dims.size() != b.dims.size()) return false;
    for (std::size_t d = 0; d < a.dims.size(); ++d) {
        if (a.dims[d].betti != b.dims[d].betti) return false;
        if (a.dims[d].torsion != b.dims[d].torsion) return false;
        if (a.dims[d].betti_mod2 != b.dims[d].betti_mod2) return false;
    }
    return true;
}

// Samples triples whose singleton piece lies in [n] — the domain every
// gradient path stays in (matching steps merge {k} with k <= n-1).
bool good_triple_sweep(const CellComplex& cp, std::uint64_t seed, int samples,
                       std::string& detail) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, std::int64_t>> splittable;
    for (int d = 1; d <= cp.chain.top_dim(); ++d)
        for (std::int64_t i = 0; i < cp.chain.cell_count(d); ++i) splittable.push_back({d, i});
    if (splittable.empty()) return true;
    int sampled = 0;
    while (sampled < samples) {
        const auto [d, i] =
            splittable[std::uniform_int_distribution<std::size_t>(0, splittable.size() - 1)(rng)];
        const CyclicCell& s = cp.cell(d, i);
        std::vector<std::pair<int, int>> choices; // (block, singleton element)
        for (int b = 0; b < s.parts(); ++b)
            if (s.block(b).size() >= 2)
                for (int k : s.block(b))
                    if (k <= cp.n) choices.push_back({b, k});
        if (choices.empty()) continue;
        const auto [p, k] =
            choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
        std::vector<int> rest;
        for (int x : s.block(p))
            if (x != k) rest.push_back(x);

        auto with_block = [&, p = p](std::vector<std::vector<int>> pieces) {
            std::vector<std::vector<int>> blocks;
            for (int b = 0; b < s.parts(); ++b) {
                if (b == p)
                    for (auto& piece : pieces) blocks.push_back(piece);
                else
                    blocks.push_back(s.block(b));
            }
            return CyclicCell(s.n(), std::move(blocks));
        };
        const CyclicCell t1 = with_block({{k}, rest});
        const CyclicCell t2 = with_block({rest, {k}});
        ++sampled;
        if (good_triple_sign(t1, t2, s) != -1) {
            detail = "triple (" + t1.str() + ", " + t2.str() + ", " + s.str() + ") has product +1";
            return false;
        }
    }
    return true;
}

std::string counts_string(const std::vector<std::int64_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

void verify_cp_for(Checker& check, int n, const VerifyOptions& options, const CellComplex& cp) {
    const std::string tag = "cp n=" + std::to_string(n) + ": ";
    check.line(tag + "boundary entries are units", unit_entries(cp.chain));
    {
        auto report = verify_diamond(cp.chain);
        check.line(tag + "diamond condition", report.ok, report.detail);
    }
    {
        auto report = verify_boundary_squared(cp.chain);
        check.line(tag + "boundary squared vanishes", report.ok, report.detail);
    }

    const Matching matching = build_cp_matching(cp);
    {
        auto report = validate_matching(cp.chain, matching);
        check.line(tag + "matching is a discrete vector field", report.ok, report.detail);
    }
    {
        auto report = check_acyclic(cp.chain, matching);
        check.line(tag + "matching is acyclic", report.ok, report.detail);
    }
    try {
        classify_critical_cp(cp, matching);
        const MatchingIndex mi(cp.chain, matching);
        const auto critical = mi.critical_by_dim();
        bool counts_ok = true;
        for (int d = 0; d <= cp.chain.top_dim(); ++d)
            counts_ok = counts_ok && static_cast<std::int64_t>(
                                         critical[static_cast<std::size_t>(d)].size()) ==
                                         cp_critical_count(n, d);
        check.line(tag + "critical census (Type 1 / Type 2 counts)", counts_ok);
    } catch (const std::exception& e) {
        check.line(tag + "critical census (Type 1 / Type 2 counts)", false, e.what());
    }
    {
        auto report = verify_cp_path_lemma(cp, matching);
        check.line(tag + "path-count law and 2-path shapes", report.ok, report.detail);
    }
    {
        std::string detail;
        const bool ok = good_triple_sweep(cp, options.seed + static_cast<std::uint64_t>(n),
                                          options.good_triple_samples, detail);
        check.line(tag + "good-triple sweep (" + std::to_string(options.good_triple_samples) +
                       " samples)",
                   ok, detail);
    }

    const MorseComplex morse = morse_boundary(cp.chain, matching);
    bool all_zero = true;
    for (const auto& b : morse.boundary) all_zero = all_zero && b.is_zero();
    check.line(tag + "Morse boundaries vanish", all_zero);
    check.line(tag + "Morse homology equals cellular homology",
               same_homology(homology_z(morse), homology_z(cp.chain)));
}

void verify_qp_for(Checker& check, int n, const CellComplex& cp, const CellComplex& qp) {
    const std::string tag = "qp n=" + std::to_string(n) + ": ";
    check.line(tag + "boundary entries are units", unit_entries(qp.chain));
    {
        auto report = verify_diamond(qp.chain);
        check.line(tag + "diamond condition", report.ok, report.detail);
    }
    {
        auto report = verify_boundary_squared(qp.chain);
        check.line(tag + "boundary squared vanishes", report.ok, report.detail);
    }

    const Matching cp_matching = build_cp_matching(cp);
    const Matching matching = build_qp_matching(cp, cp_matching, qp);
    {
        auto report = validate_matching(qp.chain, matching);
        check.line(tag + "matching is a discrete vector field", report.ok, report.detail);
    }
    {
        auto report = check_acyclic(qp.chain, matching);
        check.line(tag + "matching is acyclic", report.ok, report.detail);
    }
    try {
        classify_critical_qp(qp, matching);
        const MatchingIndex mi(qp.chain, matching);
        const auto critical = mi.critical_by_dim();
        bool counts_ok = true;
        for (int d = 0; d <= qp.chain.top_dim(); ++d)
            counts_ok = counts_ok && static_cast<std::int64_t>(
                                         critical[static_cast<std::size_t>(d)].size()) == xi(n, d);
        check.line(tag + "critical census (xi counts)", counts_ok);
    } catch (const std::exception& e) {
        check.line(tag + "critical census (xi counts)", false, e.what());
    }
    {
        auto report = verify_qp_path_theorem(qp, matching);
        check.line(tag + "path-count law and target forms", report.ok, report.detail);
    }

    const MorseComplex morse = morse_boundary(qp.chain, matching);
    bool dichotomy = true;
    for (int d = 1; d <= qp.chain.top_dim() && dichotomy; ++d) {
        const auto& b = morse.boundary[static_cast<std::size_t>(d)];
        if (d % 2 == 1) {
            dichotomy = b.is_zero();
        } else {
            const SmithResult snf = smith_normal_form(b);
            dichotomy = snf.rank == b.rows();
            for (long long f : snf.diagonal) dichotomy = dichotomy && f == 2;
        }
    }
    check.line(tag + "Morse boundary dichotomy (zero / 2-full-rank)", dichotomy);

    const HomologyResult direct = homology_z(qp.chain);
    bool theorem_ok = true;
    for (int d = 0; d <= qp.chain.top_dim(); ++d) {
        const auto& summary = direct.dims[static_cast<std::size_t>(d)];
        theorem_ok = theorem_ok && summary.betti == qp_expected_betti(n, d);
        theorem_ok = theorem_ok &&
                     static_cast<std::int64_t>(summary.torsion.size()) ==
                         qp_expected_torsion_count(n, d);
        for (long long f : summary.torsion) theorem_ok = theorem_ok && f == 2;
        theorem_ok = theorem_ok && summary.betti_mod2 == xi(n, d);
    }
    check.line(tag + "integral and mod-2 homology match the theorems",
               theorem_ok,
               "betti " + counts_string(direct.betti_vector()) + ", mod2 " +
                   counts_string(direct.betti_mod2_vector()));
    check.line(tag + "Morse homology equals cellular homology",
               same_homology(homology_z(morse), direct));
}

} // namespace

bool run_verify(std::ostream& os, const VerifyOptions& options) {
    Checker check{os};
    for (int n = std::max(3, options.min_n); n <= options.max_n; ++n) {
        const CellComplex cp = build_cp(n);
        if (options.cp) verify_cp_for(check, n, options, cp);
        if (options.qp) verify_qp_for(check, n, cp, build_qp(cp));
    }
    os << (check.all_ok ? "verification passed\n" : "verification FAILED\n");
    return check.all_ok;
}

} // namespace cyclo
