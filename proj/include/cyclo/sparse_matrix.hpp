#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cyclo {

struct Triplet {
    std::int64_t row = 0;
    std::int64_t col = 0;
    std::int64_t value = 0;
};

/// Immutable sparse integer matrix, column-compressed with exact int64
/// entries. No duplicate (row, col) positions, no explicit zeros.
class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols) {
        col_ptr_.assign(static_cast<std::size_t>(cols) + 1, 0);
    }

    /// Sorts by (col, row), sums duplicates, drops zeros.
    static SparseIntMatrix from_triplets(std::int64_t rows, std::int64_t cols,
                                         std::vector<Triplet> entries);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    std::int64_t nnz() const { return static_cast<std::int64_t>(row_idx_.size()); }
    bool is_zero() const { return row_idx_.empty(); }

    std::span<const std::int64_t> col_rows(std::int64_t c) const {
        return {row_idx_.data() + col_ptr_[static_cast<std::size_t>(c)],
                row_idx_.data() + col_ptr_[static_cast<std::size_t>(c) + 1]};
    }
    std::span<const std::int64_t> col_values(std::int64_t c) const {
        return {values_.data() + col_ptr_[static_cast<std::size_t>(c)],
                values_.data() + col_ptr_[static_cast<std::size_t>(c) + 1]};
    }

    /// Entry lookup; 0 when absent.
    std::int64_t at(std::int64_t row, std::int64_t col) const;

    /// this * rhs (exact).
    SparseIntMatrix multiply(const SparseIntMatrix& rhs) const;

    std::vector<Triplet> triplets() const;

    /// Largest |entry|, 0 for the empty matrix.
    std::int64_t max_abs() const;

private:
    std::int64_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> col_ptr_{0};
    std::vector<std::int64_t> row_idx_;
    std::vector<std::int64_t> values_;
};

} // namespace cyclo
