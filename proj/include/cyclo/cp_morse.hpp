#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/cyclopermutohedron.hpp"
#include "cyclo/discrete_morse.hpp"

namespace cyclo {

/// Critical cells of the CP matching: Type 1 is a string of singletons in
/// decreasing order followed by the n+1-set; Type 2 is (i, I, N) with i < I.
struct CpCriticalCell {
    enum class Kind { type1, type2 };
    Kind kind = Kind::type1;
    std::vector<int> nabla; // Type 1: singleton elements, decreasing
    int i = 0;              // Type 2
    std::vector<int> I;     // Type 2
    std::vector<int> n_set;

    CyclicCell cell(int n) const;
};

/// Step k = 1,...,n-1 pairs alpha = (...,{k},I,...) with beta = (...,{k}uI,...)
/// when n+1 is not in I, k < I, and neither cell is already paired. Throws
/// InternalError on a within-step pairing conflict (never observed).
Matching build_cp_matching(const CellComplex& cp);

/// Splits the unmatched cells into Type 1 / Type 2; throws InternalError
/// when an unmatched cell is of neither shape.
std::vector<CpCriticalCell> classify_critical_cp(const CellComplex& cp, const Matching& m);

/// Expected critical count in dimension d (C(n,d) for d < n-2,
/// C(n,2) + 2^n - n - 1 at the top).
std::int64_t cp_critical_count(int n, int d);

/// Exhaustively checks that every critical pair in adjacent dimensions has
/// 0 or 2 gradient paths, and that the 2-path pairs are exactly those of
/// the three shapes (nabla extension; (i,{j,k},N) over (k,j,i,N);
/// (i,{j},N) over a 3-singleton nabla containing i and j).
/// `explicit_enumeration` re-runs each count by listing the actual paths.
MatchReport verify_cp_path_lemma(const CellComplex& cp, const Matching& m,
                                 bool explicit_enumeration = false);

} // namespace cyclo
