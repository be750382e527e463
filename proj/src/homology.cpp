#include "cyclo/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclo/gf2.hpp"
#include "cyclo/parallel.hpp"

namespace cyclo {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Quotient rounded to nearest, so remainders shrink to at most |b|/2.
BigInt rounded_quotient(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    const BigInt r = a - q * b;
    if (r != 0 && abs(r) * 2 > abs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
}

// Dense exact Smith reduction; used on the residual left over once every
// unit pivot is gone. Re-picks the globally smallest pivot after every
// pass, which keeps the entries tame. Appends the diagonal to `out`.
void dense_smith(std::vector<std::vector<BigInt>> m, std::vector<BigInt>& out) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t t = 0;
    while (t < std::min(rows, cols)) {
        std::size_t pr = t, pc = t;
        BigInt best = 0;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                if (m[r][c] == 0) continue;
                BigInt mag = abs(m[r][c]);
                if (best == 0 || mag < best) {
                    best = mag;
                    pr = r;
                    pc = c;
                }
            }
        if (best == 0) break;
        std::swap(m[t], m[pr]);
        for (std::size_t r = t; r < rows; ++r) std::swap(m[r][t], m[r][pc]);

        bool clean = true;
        for (std::size_t r = t + 1; r < rows; ++r) {
            if (m[r][t] == 0) continue;
            const BigInt q = rounded_quotient(m[r][t], m[t][t]);
            for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
            if (m[r][t] != 0) clean = false;
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
            if (m[t][c] == 0) continue;
            const BigInt q = rounded_quotient(m[t][c], m[t][t]);
            for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
            if (m[t][c] != 0) clean = false;
        }
        if (!clean) continue; // leftover remainders are smaller: re-pick

        bool divisible = true;
        for (std::size_t r = t + 1; r < rows && divisible; ++r)
            for (std::size_t c = t + 1; c < cols && divisible; ++c)
                if (m[r][c] % m[t][t] != 0) {
                    for (std::size_t cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
                    divisible = false;
                }
        if (!divisible) continue; // a remainder below the pivot now exists

        out.push_back(abs(m[t][t]));
        ++t;
    }
}

// Active sparse matrix with unit-pivot elimination. Row and column maps are
// ordered so the pivot choice is deterministic.
struct SparseElimination {
    std::vector<std::map<std::int64_t, std::int64_t>> row_entries, col_entries;
    std::set<std::pair<std::int64_t, std::int64_t>> col_queue; // (nnz, col), lazily stale
    std::int64_t unit_pivots = 0;
    bool overflow = false;

    explicit SparseElimination(const SparseIntMatrix& m)
        : row_entries(static_cast<std::size_t>(m.rows())),
          col_entries(static_cast<std::size_t>(m.cols())) {
        for (std::int64_t c = 0; c < m.cols(); ++c) {
            auto rows = m.col_rows(c);
            auto vals = m.col_values(c);
            for (std::size_t k = 0; k < rows.size(); ++k) {
                row_entries[static_cast<std::size_t>(rows[k])][c] = vals[k];
                col_entries[static_cast<std::size_t>(c)][rows[k]] = vals[k];
            }
            if (!rows.empty())
                col_queue.insert({static_cast<std::int64_t>(rows.size()), c});
        }
    }

    void set_entry(std::int64_t r, std::int64_t c, std::int64_t v) {
        auto& row = row_entries[static_cast<std::size_t>(r)];
        auto& col = col_entries[static_cast<std::size_t>(c)];
        if (v == 0) {
            row.erase(c);
            col.erase(r);
        } else {
            row[c] = v;
            col[r] = v;
            col_queue.insert({static_cast<std::int64_t>(col.size()), c});
        }
    }

    // Sparsest column holding a unit entry; within it, the unit entry with
    // the sparsest row. Queue entries go stale lazily and are refreshed here.
    bool pick_pivot(std::int64_t& pr, std::int64_t& pc) {
        std::vector<std::pair<std::int64_t, std::int64_t>> skipped;
        bool found = false;
        while (!col_queue.empty()) {
            auto [nnz, c] = *col_queue.begin();
            col_queue.erase(col_queue.begin());
            const auto& col = col_entries[static_cast<std::size_t>(c)];
            if (col.empty()) continue;
            if (static_cast<std::int64_t>(col.size()) != nnz) {
                col_queue.insert({static_cast<std::int64_t>(col.size()), c});
                continue;
            }
            std::int64_t best_row = -1, best_score = 0;
            for (const auto& [r, v] : col) {
                if (v != 1 && v != -1) continue;
                const auto score =
                    static_cast<std::int64_t>(row_entries[static_cast<std::size_t>(r)].size());
                if (best_row < 0 || score < best_score) {
                    best_row = r;
                    best_score = score;
                }
            }
            skipped.push_back({nnz, c});
            if (best_row >= 0) {
                pr = best_row;
                pc = c;
                found = true;
                break;
            }
        }
        // Skipped columns may gain unit entries from later row operations.
        for (const auto& e : skipped) col_queue.insert(e);
        return found;
    }

    void eliminate(std::int64_t pr, std::int64_t pc) {
        const std::int64_t pivot = row_entries[static_cast<std::size_t>(pr)][pc];
        const auto pivot_row = row_entries[static_cast<std::size_t>(pr)]; // copy
        const auto pivot_col = col_entries[static_cast<std::size_t>(pc)]; // copy
        for (const auto& [r, v] : pivot_col) {
            if (r == pr) continue;
            const std::int64_t factor = v * pivot; // v / pivot for unit pivots
            for (const auto& [c, v0] : pivot_row) {
                const std::int64_t cur = [&] {
                    auto& row = row_entries[static_cast<std::size_t>(r)];
                    auto it = row.find(c);
                    return it == row.end() ? std::int64_t{0} : it->second;
                }();
                const std::int64_t next = cur - factor * v0;
                if (std::abs(next) > (std::int64_t{1} << 60)) overflow = true;
                set_entry(r, c, next);
            }
        }
        // The pivot column is now a unit vector; dropping the pivot row and
        // column is a pair of unimodular operations with no further fill.
        for (const auto& [c, v0] : pivot_row) {
            (void)v0;
            col_entries[static_cast<std::size_t>(c)].erase(pr);
        }
        row_entries[static_cast<std::size_t>(pr)].clear();
        col_entries[static_cast<std::size_t>(pc)].clear();
        ++unit_pivots;
    }
};

} // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m) {
    SparseElimination elim(m);
    std::int64_t pr = 0, pc = 0;
    while (!elim.overflow && elim.pick_pivot(pr, pc)) elim.eliminate(pr, pc);

    // Residual: everything that survived the unit phase.
    std::set<std::int64_t> live_rows, live_cols;
    for (std::size_t r = 0; r < elim.row_entries.size(); ++r)
        if (!elim.row_entries[r].empty()) live_rows.insert(static_cast<std::int64_t>(r));
    for (std::size_t c = 0; c < elim.col_entries.size(); ++c)
        if (!elim.col_entries[c].empty()) live_cols.insert(static_cast<std::int64_t>(c));

    std::vector<BigInt> factors;
    if (!live_rows.empty()) {
        std::map<std::int64_t, std::size_t> row_pos, col_pos;
        std::size_t idx = 0;
        for (std::int64_t r : live_rows) row_pos[r] = idx++;
        idx = 0;
        for (std::int64_t c : live_cols) col_pos[c] = idx++;
        std::vector<std::vector<BigInt>> dense(live_rows.size(),
                                               std::vector<BigInt>(live_cols.size(), 0));
        for (std::int64_t r : live_rows)
            for (const auto& [c, v] : elim.row_entries[static_cast<std::size_t>(r)])
                dense[row_pos[r]][col_pos[c]] = v;
        dense_smith(std::move(dense), factors);
    }

    SmithResult out;
    out.rank = elim.unit_pivots + static_cast<std::int64_t>(factors.size());
    out.diagonal.assign(static_cast<std::size_t>(elim.unit_pivots), 1);
    for (const BigInt& f : factors) {
        if (f > std::numeric_limits<long long>::max())
            throw std::overflow_error("smith_normal_form: invariant factor exceeds long long");
        out.diagonal.push_back(static_cast<long long>(f));
    }
    return out;
}

std::vector<std::int64_t> HomologyResult::betti_vector() const {
    std::vector<std::int64_t> out;
    for (const auto& d : dims) out.push_back(d.betti);
    return out;
}

std::vector<std::int64_t> HomologyResult::betti_mod2_vector() const {
    std::vector<std::int64_t> out;
    for (const auto& d : dims) out.push_back(d.betti_mod2);
    return out;
}

bool HomologyResult::torsion_free() const {
    for (const auto& d : dims)
        if (!d.torsion.empty()) return false;
    return true;
}

std::int64_t HomologyResult::euler() const {
    std::int64_t chi = 0;
    for (std::size_t d = 0; d < dims.size(); ++d) chi += (d % 2 ? -1 : 1) * dims[d].betti;
    return chi;
}

HomologyResult homology_z(const std::vector<std::int64_t>& counts,
                          const std::vector<SparseIntMatrix>& boundaries, bool with_mod2) {
    const std::size_t dims = counts.size();
    std::vector<SmithResult> snf(dims);
    std::vector<std::int64_t> rank2(dims, 0);
    parallel_for(static_cast<std::int64_t>(dims), [&](std::int64_t d) {
        snf[static_cast<std::size_t>(d)] = smith_normal_form(boundaries[static_cast<std::size_t>(d)]);
        if (with_mod2) rank2[static_cast<std::size_t>(d)] = gf2::rank(boundaries[static_cast<std::size_t>(d)]);
    });

    HomologyResult out;
    out.dims.resize(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        auto& summary = out.dims[d];
        summary.cells = counts[d];
        const std::int64_t rank_d = snf[d].rank;
        const std::int64_t rank_up = d + 1 < dims ? snf[d + 1].rank : 0;
        summary.betti = counts[d] - rank_d - rank_up;
        if (d + 1 < dims)
            for (long long f : snf[d + 1].diagonal)
                if (f != 1 && f != -1) summary.torsion.push_back(std::llabs(f));
        if (with_mod2) {
            const std::int64_t r2_up = d + 1 < dims ? rank2[d + 1] : 0;
            summary.betti_mod2 = counts[d] - rank2[d] - r2_up;
        }
    }
    return out;
}

namespace {

void require_square_zero(const std::vector<SparseIntMatrix>& boundaries, const char* who) {
    for (std::size_t d = 2; d < boundaries.size(); ++d)
        if (!boundaries[d - 1].multiply(boundaries[d]).is_zero())
            throw std::invalid_argument(std::string(who) +
                                        ": boundary maps do not square to zero at dimension " +
                                        std::to_string(d));
}

} // namespace

HomologyResult homology_z(const ChainComplex& cc, bool with_mod2) {
    require_square_zero(cc.boundaries(), "homology_z");
    return homology_z(cc.cell_counts(), cc.boundaries(), with_mod2);
}

HomologyResult homology_z(const MorseComplex& mc, bool with_mod2) {
    require_square_zero(mc.boundary, "homology_z");
    return homology_z(mc.cell_counts(), mc.boundary, with_mod2);
}

std::vector<std::int64_t> homology_mod2(const std::vector<std::int64_t>& counts,
                                        const std::vector<SparseIntMatrix>& boundaries) {
    const std::size_t dims = counts.size();
    std::vector<std::int64_t> rank2(dims, 0);
    parallel_for(static_cast<std::int64_t>(dims), [&](std::int64_t d) {
        rank2[static_cast<std::size_t>(d)] = gf2::rank(boundaries[static_cast<std::size_t>(d)]);
    });
    std::vector<std::int64_t> out(dims, 0);
    for (std::size_t d = 0; d < dims; ++d)
        out[d] = counts[d] - rank2[d] - (d + 1 < dims ? rank2[d + 1] : 0);
    return out;
}

std::vector<std::int64_t> homology_mod2(const ChainComplex& cc) {
    return homology_mod2(cc.cell_counts(), cc.boundaries());
}

std::vector<std::int64_t> homology_mod2(const MorseComplex& mc) {
    return homology_mod2(mc.cell_counts(), mc.boundary);
}

} // namespace cyclo
