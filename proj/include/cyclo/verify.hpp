#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace cyclo {

struct VerifyOptions {
    int min_n = 3;
    int max_n = 5;
    bool cp = true;
    bool qp = true;
    std::uint64_t seed = 12345;
    int good_triple_samples = 200;
};

/// Runs the verification bundle for n = 3..max_n: diamond condition,
/// boundary squared, matching validity and acyclicity, critical censuses,
/// the path-count laws, a seeded good-triple sweep, the homology theorems,
/// and Morse-versus-direct homology (Z and Z/2). One line per check;
/// returns true when everything passed.
bool run_verify(std::ostream& os, const VerifyOptions& options);

} // namespace cyclo
