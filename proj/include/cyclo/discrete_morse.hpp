#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclo/chain_complex.hpp"

namespace cyclo {

/// One pair of a discrete vector field: `lower` (a dim-cell index) is a
/// codim-1 face of `upper` (a dim+1-cell index).
struct MatchPair {
    int dim = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

struct Matching {
    std::vector<MatchPair> pairs;
};

struct MatchReport {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

/// Pairing constraints: indices resolve, lower is a facet of upper, and no
/// cell appears in more than one pair. Reports the first violation.
MatchReport validate_matching(const ChainComplex& cc, const Matching& m);

/// Validated array view of a matching; throws std::invalid_argument when
/// validate_matching fails.
class MatchingIndex {
public:
    MatchingIndex(const ChainComplex& cc, const Matching& m);

    /// Partner above / below, -1 when unpaired in that direction.
    std::int64_t up(int d, std::int64_t i) const {
        return up_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
    }
    std::int64_t down(int d, std::int64_t i) const {
        return down_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
    }
    bool is_critical(int d, std::int64_t i) const { return up(d, i) < 0 && down(d, i) < 0; }
    std::vector<std::vector<std::int64_t>> critical_by_dim() const;
    int top_dim() const { return static_cast<int>(up_.size()) - 1; }

private:
    std::vector<std::vector<std::int64_t>> up_, down_;
};

/// No closed V-path: the per-dimension digraph (up along pairs, down along
/// faces) is acyclic. On failure the detail names a closed path witness.
MatchReport check_acyclic(const ChainComplex& cc, const Matching& m);

/// Alternating cell sequence sigma_1, tau_1, ..., sigma_t, tau_t, sigma_{t+1};
/// sigma entries live in `dim`, tau entries in dim+1.
struct GradientPath {
    int dim = 0;
    std::vector<std::int64_t> cells;
    std::int64_t steps() const { return static_cast<std::int64_t>(cells.size()) / 2; }
};

/// All V-paths between two dim-cells, exhaustively, in deterministic order.
/// from == to yields the single empty path.
std::vector<GradientPath> enumerate_gradient_paths(const ChainComplex& cc, const Matching& m,
                                                   int dim, std::int64_t from, std::int64_t to);

/// Product over steps of -[tau_i : sigma_i] * [tau_i : sigma_{i+1}]; the
/// sign by which the start orientation induces the end orientation.
int path_weight(const ChainComplex& cc, const GradientPath& path);

struct PathAggregate {
    std::int64_t count = 0;
    std::int64_t weight = 0;
};

/// Exact path counts and signed weight sums from every dim-cell to every
/// critical dim-cell, computed over the acyclic V-path digraph.
std::vector<std::map<std::int64_t, PathAggregate>>
gradient_path_aggregates(const ChainComplex& cc, const MatchingIndex& mi, int dim);

/// Total path count from the facets of tau (critical, dim d+1) into sigma
/// (critical, dim d), i.e. the number of gradient paths the Morse boundary
/// coefficient sums over.
std::int64_t critical_pair_path_count(const ChainComplex& cc, const Matching& m, int upper_dim,
                                      std::int64_t tau, std::int64_t sigma);

/// Critical cells per dimension plus the Morse boundary matrices.
struct MorseComplex {
    std::vector<std::vector<std::int64_t>> critical; // ambient indices, per dim
    std::vector<std::vector<std::string>> ids;
    std::vector<SparseIntMatrix> boundary;

    std::vector<std::int64_t> cell_counts() const;
};

/// Assembles the Morse boundary maps and checks that they square to zero
/// (InternalError otherwise). Requires an acyclic matching.
MorseComplex morse_boundary(const ChainComplex& cc, const Matching& m);

} // namespace cyclo
