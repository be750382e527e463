#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/chain_complex.hpp"

namespace cyclo {

/// Graded face poset: per-dimension cell ids and, for each cell of
/// dimension k >= 1, the sorted indices of its codim-1 faces.
struct FacePoset {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::vector<std::vector<std::int64_t>>> facets;
};

/// Assigns +-1 incidence numbers to every covering pair so that each
/// length-2 interval [tau, sigma] with middles a, b satisfies
/// [sigma:a][a:tau] + [sigma:b][b:tau] = 0. Deterministic: cells are
/// processed in the given order and the first undetermined incidence of
/// each column is fixed to +1 (edges get +1, -1 on their two vertices).
/// Throws std::runtime_error identifying a violating interval when no
/// valid assignment exists.
ChainComplex solve_incidence_signs(const FacePoset& poset);

} // namespace cyclo
