#include "cyclo/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclo {

SparseIntMatrix SparseIntMatrix::from_triplets(std::int64_t rows, std::int64_t cols,
                                               std::vector<Triplet> entries) {
    for (const auto& t : entries)
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw std::out_of_range("triplet outside matrix bounds");
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    SparseIntMatrix m(rows, cols);
    m.row_idx_.reserve(entries.size());
    m.values_.reserve(entries.size());
    std::size_t i = 0;
    for (std::int64_t c = 0; c < cols; ++c) {
        while (i < entries.size() && entries[i].col == c) {
            std::int64_t row = entries[i].row;
            std::int64_t value = 0;
            while (i < entries.size() && entries[i].col == c && entries[i].row == row)
                value += entries[i++].value;
            if (value != 0) {
                m.row_idx_.push_back(row);
                m.values_.push_back(value);
            }
        }
        m.col_ptr_[static_cast<std::size_t>(c) + 1] = static_cast<std::int64_t>(m.row_idx_.size());
    }
    return m;
}

std::int64_t SparseIntMatrix::at(std::int64_t row, std::int64_t col) const {
    auto rows_span = col_rows(col);
    auto it = std::lower_bound(rows_span.begin(), rows_span.end(), row);
    if (it == rows_span.end() || *it != row) return 0;
    return values_[static_cast<std::size_t>(
        col_ptr_[static_cast<std::size_t>(col)] + (it - rows_span.begin()))];
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& rhs) const {
    if (cols_ != rhs.rows())
        throw std::invalid_argument("multiply: dimension mismatch");
    std::vector<Triplet> out;
    std::vector<std::int64_t> acc(static_cast<std::size_t>(rows_), 0);
    std::vector<std::int64_t> touched;
    for (std::int64_t c = 0; c < rhs.cols(); ++c) {
        touched.clear();
        auto mid_rows = rhs.col_rows(c);
        auto mid_vals = rhs.col_values(c);
        for (std::size_t k = 0; k < mid_rows.size(); ++k) {
            auto lhs_rows = col_rows(mid_rows[k]);
            auto lhs_vals = col_values(mid_rows[k]);
            for (std::size_t t = 0; t < lhs_rows.size(); ++t) {
                auto r = static_cast<std::size_t>(lhs_rows[t]);
                if (acc[r] == 0) touched.push_back(lhs_rows[t]);
                acc[r] += lhs_vals[t] * mid_vals[k];
            }
        }
        for (std::int64_t r : touched) {
            auto idx = static_cast<std::size_t>(r);
            if (acc[idx] != 0) out.push_back({r, c, acc[idx]});
            acc[idx] = 0;
        }
    }
    return from_triplets(rows_, rhs.cols(), std::move(out));
}

std::vector<Triplet> SparseIntMatrix::triplets() const {
    std::vector<Triplet> out;
    out.reserve(row_idx_.size());
    for (std::int64_t c = 0; c < cols_; ++c) {
        auto rs = col_rows(c);
        auto vs = col_values(c);
        for (std::size_t k = 0; k < rs.size(); ++k) out.push_back({rs[k], c, vs[k]});
    }
    return out;
}

std::int64_t SparseIntMatrix::max_abs() const {
    std::int64_t best = 0;
    for (std::int64_t v : values_) best = std::max(best, v < 0 ? -v : v);
    return best;
}

} // namespace cyclo
