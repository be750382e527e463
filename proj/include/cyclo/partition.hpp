#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cyclo {

/// Linearly ordered partition of {1,...,n+1}, as given by the caller.
/// Not yet validated or canonicalized.
struct OrderedPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;
};

/// Cyclically ordered partition of {1,...,n+1} in canonical form:
/// elements sorted inside each block, the block containing n+1 last.
/// Equality and ordering are equality/ordering of canonical forms.
class CyclicCell {
public:
    CyclicCell() = default;

    /// Validates the blocks as a partition of {1,...,n+1}, sorts each
    /// block and rotates the block containing n+1 to the end.
    /// Throws std::invalid_argument naming the offending element.
    CyclicCell(int n, std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    int ground_size() const { return n_ + 1; }
    int parts() const { return static_cast<int>(blocks_.size()); }
    int dim() const { return n_ + 1 - parts(); }

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& n_set() const { return blocks_.back(); }

    /// 0-based index of the block containing `element`.
    int block_of(int element) const;

    /// Textual form: blocks separated by '|', elements by ',' (e.g. "1|2,3|4,5|6").
    std::string str() const;

    friend bool operator==(const CyclicCell&, const CyclicCell&) = default;
    friend auto operator<=>(const CyclicCell&, const CyclicCell&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// Canonical form of an ordered partition read as a cyclic one.
CyclicCell normalize_cyclic(const OrderedPartition& p);

/// Parse the textual cell syntax. The ground size is inferred from the
/// largest element. In strict mode (normalize = false) the input must
/// already be canonical; otherwise any valid ordered partition is accepted.
CyclicCell parse_cell(std::string_view text, bool normalize = false);

/// All cells obtained by replacing one block I_p (|I_p| >= 2) with an
/// ordered bipartition (J1, J2), renormalized; duplicate-free, sorted.
/// Count = sum over blocks of (2^|I_p| - 2).
std::vector<CyclicCell> codim1_faces(const CyclicCell& c);

/// True iff `fine` is reachable from `coarse` by single-block ordered
/// bipartition splits, i.e. membership in the transitive closure of the
/// codim-1 face relation (reflexive). Throws on mismatched n.
bool is_refinement(const CyclicCell& fine, const CyclicCell& coarse);

/// The involution r: (I_1,...,I_{k-1},I_k) -> (I_{k-1},...,I_1,I_k).
CyclicCell reflect(const CyclicCell& c);

/// Merge the blocks at cyclic positions pos and pos+1 (mod parts).
CyclicCell merge_adjacent(const CyclicCell& c, int pos);

/// Relabel ground elements by w (w[x-1] is the image of x) and renormalize.
CyclicCell relabel(const CyclicCell& c, const std::vector<int>& w);

/// The class of a cell: j is the greatest element outside the n+1-set,
/// living in block l; i is the greatest element outside both, in block m.
/// The pair reads (i,j) when m <= l and (j,i) otherwise.
struct ClassPair {
    int first = 0;
    int second = 0;

    ClassPair swapped() const { return {second, first}; }
    int min() const { return first < second ? first : second; }
    int max() const { return first < second ? second : first; }

    friend bool operator==(const ClassPair&, const ClassPair&) = default;
};

/// Throws if the cell has fewer than 3 blocks.
ClassPair class_of(const CyclicCell& c);

/// True iff class_of(c) = (i,j) with i < j.
bool is_ascending(const CyclicCell& c);

/// All cyclic partitions of {1,...,n+1} into exactly `parts` blocks,
/// in canonical order.
std::vector<CyclicCell> cyclic_partitions(int n, int parts);

} // namespace cyclo

template <>
struct std::hash<cyclo::CyclicCell> {
    std::size_t operator()(const cyclo::CyclicCell& c) const noexcept;
};
