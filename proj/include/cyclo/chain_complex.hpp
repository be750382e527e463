#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cyclo/sparse_matrix.hpp"

namespace cyclo {

/// Graded cell index plus sparse integer boundary matrices of a regular
/// CW complex. boundary(k) maps k-chains to (k-1)-chains; boundary(0) is
/// the trivial 0 x |cells(0)| matrix.
class ChainComplex {
public:
    ChainComplex() = default;

    /// Throws on dimensional inconsistency between cells and boundaries.
    ChainComplex(std::vector<std::vector<std::string>> cells,
                 std::vector<SparseIntMatrix> boundary);

    int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
    const std::vector<std::string>& cells(int d) const {
        return cells_[static_cast<std::size_t>(d)];
    }
    std::int64_t cell_count(int d) const {
        return static_cast<std::int64_t>(cells_[static_cast<std::size_t>(d)].size());
    }
    std::vector<std::int64_t> cell_counts() const;
    const std::string& cell_id(int d, std::int64_t i) const {
        return cells_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
    }

    const SparseIntMatrix& boundary(int d) const { return boundary_[static_cast<std::size_t>(d)]; }
    const std::vector<SparseIntMatrix>& boundaries() const { return boundary_; }

    /// Index of a cell id within its dimension, -1 when absent.
    std::int64_t index_of(int d, std::string_view id) const;

    /// Rows of the boundary column = codim-1 faces of cell (d, i).
    std::span<const std::int64_t> facets(int d, std::int64_t i) const {
        return boundary_[static_cast<std::size_t>(d)].col_rows(i);
    }

    std::int64_t euler_characteristic() const;

    /// { "dims": [...], "cells": [[id,...],...], "boundary": [[[col,row,val],...],...] }
    std::string to_json() const;

private:
    std::vector<std::vector<std::string>> cells_;
    std::vector<SparseIntMatrix> boundary_;
    std::vector<std::unordered_map<std::string, std::int64_t>> index_;
};

struct ComplexReport {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

/// Checks D_{k-1} * D_k = 0 for all k; on failure reports the first
/// (cell, cocell) pair with a nonzero composite entry.
ComplexReport verify_boundary_squared(const ChainComplex& cc);

/// Checks that every interval [tau^{k-2}, sigma^k] has exactly two middle
/// cells, and that every 1-cell has exactly two distinct vertices.
ComplexReport verify_diamond(const ChainComplex& cc);

std::int64_t euler_characteristic(const ChainComplex& cc);

} // namespace cyclo
