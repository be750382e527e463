// Acceptance suite: every release criterion as a runnable check, one
// pass/fail line each. Exits with the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "cyclo/bicyclopermutohedron.hpp"
#include "cyclo/cp_morse.hpp"
#include "cyclo/cyclopermutohedron.hpp"
#include "cyclo/homology.hpp"
#include "cyclo/linkage.hpp"

#include "oracles.hpp"

using namespace cyclo;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = {}) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

struct Built {
    CellComplex cp, qp;
    Matching cp_matching, qp_matching;
};

std::map<int, Built>& cache() {
    static std::map<int, Built> store;
    return store;
}

const Built& built(int n) {
    auto& store = cache();
    auto it = store.find(n);
    if (it == store.end()) {
        Built b;
        b.cp = build_cp(n);
        b.qp = build_qp(b.cp);
        b.cp_matching = build_cp_matching(b.cp);
        b.qp_matching = build_qp_matching(b.cp, b.cp_matching, b.qp);
        it = store.emplace(n, std::move(b)).first;
    }
    return it->second;
}

void criterion_1_qp_integral_homology() {
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 6 && pass; ++n) {
        const HomologyResult h = homology_z(built(n).qp.chain);
        for (int d = 0; d <= built(n).qp.chain.top_dim() && pass; ++d) {
            const auto& summary = h.dims[static_cast<std::size_t>(d)];
            bool ok = summary.betti == qp_expected_betti(n, d) &&
                      static_cast<std::int64_t>(summary.torsion.size()) ==
                          qp_expected_torsion_count(n, d);
            for (long long f : summary.torsion) ok = ok && f == 2;
            if (!ok) {
                pass = false;
                detail = "mismatch at n=" + std::to_string(n) + ", dim " + std::to_string(d);
            }
        }
    }
    report(1, "QP integral homology equals the theorem, n = 3..6", pass, detail);
}

void criterion_2_qp_mod2() {
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 7 && pass; ++n) {
        std::vector<std::int64_t> betti2;
        if (n <= 6) {
            betti2 = homology_mod2(built(n).qp.chain);
        } else {
            betti2 = homology_mod2(build_qp(n).chain); // GF(2) ranks only, not cached
        }
        for (int d = 0; d < static_cast<int>(betti2.size()); ++d)
            if (betti2[static_cast<std::size_t>(d)] != xi(n, d)) {
                pass = false;
                detail = "mismatch at n=" + std::to_string(n) + ", dim " + std::to_string(d);
                break;
            }
    }
    report(2, "QP mod-2 Betti numbers are xi(n,i), n = 3..7", pass, detail);
}

void criterion_3_cp_homology() {
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 6 && pass; ++n) {
        const HomologyResult h = homology_z(built(n).cp.chain);
        if (!h.torsion_free()) {
            pass = false;
            detail = "torsion at n=" + std::to_string(n);
            break;
        }
        for (int d = 0; d < n - 2; ++d)
            if (h.betti(d) != binomial(n, d)) {
                pass = false;
                detail = "b_" + std::to_string(d) + " at n=" + std::to_string(n);
            }
        const std::int64_t top = binomial(n, 2) + (std::int64_t{1} << n) - n - 1;
        if (h.betti(n - 2) != top) {
            pass = false;
            detail = "top Betti at n=" + std::to_string(n);
        }
        if (h.euler() != built(n).cp.chain.euler_characteristic()) {
            pass = false;
            detail = "euler identity at n=" + std::to_string(n);
        }
    }
    report(3, "CP homology torsion free with the derived Betti numbers, n = 3..6", pass, detail);
}

void criterion_4_morse_dichotomy() {
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 6 && pass; ++n) {
        const Built& b = built(n);
        const MorseComplex cp_morse = morse_boundary(b.cp.chain, b.cp_matching);
        for (const auto& m : cp_morse.boundary)
            if (!m.is_zero()) {
                pass = false;
                detail = "CP Morse boundary nonzero at n=" + std::to_string(n);
            }
        const MorseComplex qp_morse = morse_boundary(b.qp.chain, b.qp_matching);
        for (int d = 1; d <= b.qp.chain.top_dim() && pass; ++d) {
            const auto& matrix = qp_morse.boundary[static_cast<std::size_t>(d)];
            if (d % 2 == 1) {
                if (!matrix.is_zero()) {
                    pass = false;
                    detail = "odd QP Morse map nonzero at n=" + std::to_string(n);
                }
            } else {
                const SmithResult snf = smith_normal_form(matrix);
                bool ok = snf.rank == matrix.rows();
                for (long long f : snf.diagonal) ok = ok && f == 2;
                if (!ok) {
                    pass = false;
                    detail = "even QP Morse map not 2-full-rank at n=" + std::to_string(n);
                }
            }
        }
    }
    report(4, "Morse boundaries: CP vanish; QP zero (odd) / diag(2,...,2) full row rank (even)",
           pass, detail);
}

void criterion_5_path_laws() {
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 5 && pass; ++n) {
        const Built& b = built(n);
        if (auto r = verify_cp_path_lemma(b.cp, b.cp_matching, true); !r.ok) {
            pass = false;
            detail = "CP n=" + std::to_string(n) + ": " + r.detail;
        }
        if (auto r = verify_qp_path_theorem(b.qp, b.qp_matching, true); pass && !r.ok) {
            pass = false;
            detail = "QP n=" + std::to_string(n) + ": " + r.detail;
        }
    }
    report(5,
           "path counts are 0 or 2 with admissible 2-path targets, n = 3..5 "
           "(explicit enumeration; QP includes the |J|>1 extension of (I,t,i,nabla,N-t))",
           pass, detail);
}

void criterion_6_good_triples() {
    const CellComplex& cp = built(5).cp;
    std::mt19937_64 rng(20240601);
    std::vector<std::pair<int, std::int64_t>> cells;
    for (int d = 1; d <= cp.chain.top_dim(); ++d)
        for (std::int64_t i = 0; i < cp.chain.cell_count(d); ++i) cells.push_back({d, i});

    bool pass = true;
    std::string detail;
    int sampled = 0;
    while (sampled < 1000) {
        const auto [d, i] =
            cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
        const CyclicCell& s = cp.cell(d, i);
        std::vector<std::pair<int, int>> choices; // (block, k) with ordinary k
        for (int p = 0; p < s.parts(); ++p)
            if (s.block(p).size() >= 2)
                for (int k : s.block(p))
                    if (k <= cp.n) choices.push_back({p, k});
        if (choices.empty()) continue;
        const auto [p, k] =
            choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
        std::vector<int> rest;
        for (int x : s.block(p))
            if (x != k) rest.push_back(x);
        auto with_pieces = [&, p = p](std::vector<std::vector<int>> pieces) {
            std::vector<std::vector<int>> blocks;
            for (int q = 0; q < s.parts(); ++q) {
                if (q == p)
                    for (auto& piece : pieces) blocks.push_back(piece);
                else
                    blocks.push_back(s.block(q));
            }
            return CyclicCell(s.n(), std::move(blocks));
        };
        ++sampled;
        if (good_triple_sign(with_pieces({{k}, rest}), with_pieces({rest, {k}}), s) != -1) {
            pass = false;
            detail = "triple on " + s.str() + " with k=" + std::to_string(k);
            break;
        }
    }
    report(6, "1000 seeded good triples in CP_6 (singleton from [n]) multiply to -1", pass,
           detail);
}

void criterion_7_morse_soundness() {
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 5 && pass; ++n) {
        const Built& b = built(n);
        const auto pairs = {std::make_pair(&b.cp, &b.cp_matching),
                            std::make_pair(&b.qp, &b.qp_matching)};
        for (const auto& [complex, matching] : pairs) {
            const HomologyResult direct = homology_z(complex->chain);
            const HomologyResult reduced = homology_z(morse_boundary(complex->chain, *matching));
            bool ok = direct.betti_vector() == reduced.betti_vector() &&
                      direct.betti_mod2_vector() == reduced.betti_mod2_vector();
            for (std::size_t d = 0; d < direct.dims.size() && ok; ++d)
                ok = direct.dims[d].torsion == reduced.dims[d].torsion;
            if (!ok) {
                pass = false;
                detail = "n=" + std::to_string(n);
            }
        }
    }
    report(7, "Morse complex homology equals direct homology (Z and Z/2), n = 3..5", pass,
           detail);
}

void criterion_8_reflection_sign() {
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 5 && pass; ++n)
        for (const auto& c : oracles::all_cp_cells(n))
            if (reflection_sign(c) != oracles::reflection_sign_frame_oracle(c)) {
                pass = false;
                detail = "cell " + c.str();
                break;
            }
    report(8, "reflection_sign equals the frame-comparison oracle on every cell, n = 3..5", pass,
           detail);
}

void criterion_9_pentagon() {
    bool pass = true;
    std::string detail;
    const LengthVector lv = parse_lengths("1,1,1,1,1");
    const CellComplex full = build_moduli_complex(lv);
    const CellComplex reduced = build_reduced_moduli(lv);

    const HomologyResult hf = homology_z(full.chain);
    if (full.chain.cell_counts() != std::vector<std::int64_t>{30, 60, 24} ||
        hf.betti_vector() != std::vector<std::int64_t>{1, 8, 1} || !hf.torsion_free() ||
        full.chain.euler_characteristic() != -6) {
        pass = false;
        detail = "full moduli space";
    }
    const HomologyResult hr = homology_z(reduced.chain);
    if (reduced.chain.cell_counts() != std::vector<std::int64_t>{15, 30, 12} ||
        hr.betti_vector() != std::vector<std::int64_t>{1, 4, 0} ||
        hr.dims[1].torsion != std::vector<long long>{2} || !hr.dims[0].torsion.empty() ||
        !hr.dims[2].torsion.empty() || reduced.chain.euler_characteristic() != -3) {
        pass = false;
        detail = "reduced moduli space";
    }
    report(9, "equilateral pentagon: H(M) = (Z, Z^8, Z), H(M/r) = (Z, Z^4+Z2, 0), chi -6 / -3",
           pass, detail);
}

void criterion_10_structure(const std::string& cli_path) {
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 5 && pass; ++n) {
        const Built& b = built(n);
        for (const CellComplex* complex : {&b.cp, &b.qp}) {
            if (!verify_diamond(complex->chain) || !verify_boundary_squared(complex->chain)) {
                pass = false;
                detail = "cp/qp structure at n=" + std::to_string(n);
            }
        }
    }
    const LengthVector lv = parse_lengths("1,1,1,1,1");
    for (const CellComplex& complex : {build_moduli_complex(lv), build_reduced_moduli(lv)}) {
        if (!verify_diamond(complex.chain) || !verify_boundary_squared(complex.chain)) {
            pass = false;
            detail = "moduli structure";
        }
    }

    if (pass) {
        if (cli_path.empty()) {
            pass = false;
            detail = "no --cli path given";
        } else {
            const auto start = std::chrono::steady_clock::now();
            const std::string command = cli_path + " verify all --max-n 5 > /dev/null";
            const int status = std::system(command.c_str());
            const double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (status != 0) {
                pass = false;
                detail = "verify all exited with status " + std::to_string(status);
            } else if (seconds >= 120.0) {
                pass = false;
                detail = "verify all took " + std::to_string(seconds) + " s";
            } else {
                std::ostringstream time_note;
                time_note.precision(1);
                time_note << std::fixed << "verify all: exit 0 in " << seconds << " s";
                detail = time_note.str();
            }
        }
    }
    report(10, "diamond and boundary-squared hold everywhere; verify all --max-n 5 passes in "
               "under 2 minutes",
           pass, detail);
}

} // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    for (int a = 1; a + 1 < argc; ++a)
        if (std::string(argv[a]) == "--cli") cli_path = argv[a + 1];

    criterion_1_qp_integral_homology();
    criterion_2_qp_mod2();
    criterion_3_cp_homology();
    criterion_4_morse_dichotomy();
    criterion_5_path_laws();
    criterion_6_good_triples();
    criterion_7_morse_soundness();
    criterion_8_reflection_sign();
    criterion_9_pentagon();
    criterion_10_structure(cli_path);

    std::cout << (failures == 0 ? "all criteria passed" : "criteria FAILED") << std::endl;
    return failures;
}
