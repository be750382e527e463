#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/chain_complex.hpp"
#include "cyclo/discrete_morse.hpp"

namespace cyclo {

struct SmithResult {
    std::vector<long long> diagonal; // invariant factors d_1 | d_2 | ... | d_r
    std::int64_t rank = 0;
};

/// Smith normal form over Z: unit (+-1) pivots are eliminated first with
/// fill-aware pivoting, then the small residual runs through a dense exact
/// (arbitrary-precision) reduction.
SmithResult smith_normal_form(const SparseIntMatrix& m);

struct HomologyResult {
    struct DimSummary {
        std::int64_t cells = 0;
        std::int64_t betti = 0;
        std::vector<long long> torsion; // coefficients > 1, each dividing the next
        std::int64_t betti_mod2 = -1;   // -1 when not computed
    };
    std::vector<DimSummary> dims;

    std::int64_t betti(int d) const { return dims[static_cast<std::size_t>(d)].betti; }
    std::vector<std::int64_t> betti_vector() const;
    std::vector<std::int64_t> betti_mod2_vector() const;
    bool torsion_free() const;
    std::int64_t euler() const; // alternating sum of Betti numbers
};

/// H_k = ker d_k / im d_{k+1} from graded boundary matrices; betti_k =
/// n_k - rank d_k - rank d_{k+1}, torsion at k = invariant factors > 1 of
/// d_{k+1}. Requires d^2 = 0 (use the ChainComplex overloads to have that
/// checked first). with_mod2 also fills the GF(2) Betti numbers.
HomologyResult homology_z(const std::vector<std::int64_t>& counts,
                          const std::vector<SparseIntMatrix>& boundaries, bool with_mod2 = true);

/// Checks d^2 = 0 and refuses with a diagnostic otherwise.
HomologyResult homology_z(const ChainComplex& cc, bool with_mod2 = true);
HomologyResult homology_z(const MorseComplex& mc, bool with_mod2 = true);

/// Mod-2 Betti numbers only (bitset ranks; no SNF).
std::vector<std::int64_t> homology_mod2(const std::vector<std::int64_t>& counts,
                                        const std::vector<SparseIntMatrix>& boundaries);
std::vector<std::int64_t> homology_mod2(const ChainComplex& cc);
std::vector<std::int64_t> homology_mod2(const MorseComplex& mc);

} // namespace cyclo
