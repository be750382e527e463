#include "cyclo/cyclopermutohedron.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclo/errors.hpp"
#include "cyclo/parallel.hpp"

namespace cyclo {

PrincipalVertexFrame principal_vertex(const CyclicCell& c) {
    PrincipalVertexFrame frame;
    frame.cell = c;
    frame.pv.reserve(static_cast<std::size_t>(c.ground_size()));
    for (const auto& b : c.blocks()) frame.pv.insert(frame.pv.end(), b.begin(), b.end());
    frame.neighbors = vertex_neighbors_in(c, frame.pv);
    return frame;
}

std::optional<SplitInfo> split_info(const CyclicCell& sigma, const CyclicCell& tau) {
    if (sigma.n() != tau.n() || tau.parts() != sigma.parts() + 1) return std::nullopt;
    const int m = tau.parts();
    // Align tau's cyclic block word with sigma's: exactly one sigma block is
    // covered by two consecutive tau blocks, the rest match one-to-one.
    for (int start = 0; start < m; ++start) {
        int idx = start;
        std::optional<SplitInfo> found;
        bool ok = true;
        for (int b = 0; b < sigma.parts() && ok; ++b) {
            const auto& target = sigma.block(b);
            const auto& first = tau.block(idx % m);
            if (first == target) {
                ++idx;
                continue;
            }
            if (found) { ok = false; break; } // at most one split
            const auto& second = tau.block((idx + 1) % m);
            if (first.size() + second.size() != target.size()) { ok = false; break; }
            std::vector<int> joined(first);
            joined.insert(joined.end(), second.begin(), second.end());
            std::sort(joined.begin(), joined.end());
            if (joined != target) { ok = false; break; }
            found = SplitInfo{b, first, second};
            idx += 2;
        }
        if (ok && found && idx - start == m) return found;
    }
    return std::nullopt;
}

namespace {

// Edge vectors of a cell's canonical frame, in the position coordinates of
// its own product-of-permutohedra model. Block-constant shifts cancel in
// the differences, so these columns are reusable inside any coface.
std::vector<std::vector<long long>> frame_edges(const PrincipalVertexFrame& frame) {
    const CyclicCell& c = frame.cell;
    const std::vector<int> base = vertex_coordinates(c, frame.pv);
    std::vector<std::vector<long long>> edges;
    edges.reserve(frame.neighbors.size());
    for (const auto& nb : frame.neighbors) {
        const std::vector<int> q = vertex_coordinates(c, nb);
        std::vector<long long> col(base.size());
        for (std::size_t x = 0; x < base.size(); ++x) col[x] = q[x] - base[x];
        edges.push_back(std::move(col));
    }
    return edges;
}

void append_block_indicators(std::vector<std::vector<long long>>& columns,
                             const CyclicCell& c) {
    for (const auto& b : c.blocks()) {
        std::vector<long long> col(static_cast<std::size_t>(c.ground_size()), 0);
        for (int x : b) col[static_cast<std::size_t>(x) - 1] = 1;
        columns.push_back(std::move(col));
    }
}

// Orientation datum of the cell: sign of [frame edges | block indicators].
int orientation_sign(const PrincipalVertexFrame& frame) {
    auto columns = frame_edges(frame);
    append_block_indicators(columns, frame.cell);
    return determinant_sign(std::move(columns));
}

// [sigma : tau]: the canonical orientation of sigma compared against
// (outward vector, canonical frame of tau) inside sigma's affine hull.
int incidence_geometric(const PrincipalVertexFrame& fs, int sigma_orientation,
                        const std::vector<std::vector<long long>>& tau_edges,
                        const SplitInfo& split) {
    const CyclicCell& sigma = fs.cell;
    const std::size_t ground = fs.pv.size();
    std::vector<std::vector<long long>> columns;
    columns.reserve(ground);

    // Outward direction across tau: tau is the face of sigma's split block
    // where the elements of J1 take the leading positions.
    const auto piece = static_cast<long long>(split.j1.size());
    const auto whole = piece + static_cast<long long>(split.j2.size());
    std::vector<long long> out(ground, 0);
    for (int x : split.j1) out[static_cast<std::size_t>(x) - 1] = piece - whole;
    for (int x : split.j2) out[static_cast<std::size_t>(x) - 1] = piece;
    columns.push_back(std::move(out));

    for (const auto& edge : tau_edges) columns.push_back(edge);
    append_block_indicators(columns, sigma);

    const int b = determinant_sign(std::move(columns));
    if (sigma_orientation == 0 || b == 0)
        throw InternalError("incidence_cp: degenerate orientation frame at " + sigma.str());
    return sigma_orientation * b;
}

} // namespace

int incidence_cp(const CyclicCell& sigma, const CyclicCell& tau) {
    const auto split = split_info(sigma, tau);
    if (!split)
        throw std::invalid_argument("incidence_cp: " + tau.str() + " is not a codim-1 face of " +
                                    sigma.str());
    const PrincipalVertexFrame fs = principal_vertex(sigma);
    return incidence_geometric(fs, orientation_sign(fs), frame_edges(principal_vertex(tau)),
                               *split);
}

int good_triple_sign(const CyclicCell& t1, const CyclicCell& t2, const CyclicCell& s) {
    const auto s1 = split_info(s, t1);
    const auto s2 = split_info(s, t2);
    const bool shape_ok = s1 && s2 && s1->block == s2->block && s1->j1.size() == 1 &&
                          s2->j2.size() == 1 && s1->j1 == s2->j2 && s1->j2 == s2->j1;
    if (!shape_ok)
        throw std::invalid_argument("good_triple_sign: (" + t1.str() + ", " + t2.str() + ", " +
                                    s.str() + ") is not a good triple");
    return incidence_cp(s, t1) * incidence_cp(s, t2);
}

std::int64_t CellComplex::index_of(int d, const CyclicCell& c) const {
    const auto& level = cells[static_cast<std::size_t>(d)];
    auto it = std::lower_bound(level.begin(), level.end(), c);
    if (it == level.end() || *it != c) return -1;
    return it - level.begin();
}

CellComplex build_cp(int n, const BuildOptions& options) {
    if (n < 3) throw std::invalid_argument("build_cp: n must be at least 3");
    if (n > options.max_n && !options.allow_large)
        throw ResourceError("build_cp: n = " + std::to_string(n) + " exceeds the guard (" +
                            std::to_string(options.max_n) + "); pass allow_large to override");

    CellComplex out;
    out.n = n;
    const int top = n - 2;
    out.cells.resize(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<std::string>> ids(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        out.cells[static_cast<std::size_t>(d)] = cyclic_partitions(n, n + 1 - d);
        ids[static_cast<std::size_t>(d)].reserve(out.cells[static_cast<std::size_t>(d)].size());
        for (const auto& c : out.cells[static_cast<std::size_t>(d)])
            ids[static_cast<std::size_t>(d)].push_back(c.str());
    }

    std::vector<SparseIntMatrix> boundary(static_cast<std::size_t>(top) + 1);
    boundary[0] = SparseIntMatrix(0, static_cast<std::int64_t>(out.cells[0].size()));
    for (int d = 1; d <= top; ++d) {
        const auto& upper = out.cells[static_cast<std::size_t>(d)];
        const auto cols = static_cast<std::int64_t>(upper.size());
        const auto& lower = out.cells[static_cast<std::size_t>(d - 1)];
        std::vector<std::vector<std::vector<long long>>> lower_edges(lower.size());
        parallel_for(static_cast<std::int64_t>(lower.size()), [&](std::int64_t i) {
            lower_edges[static_cast<std::size_t>(i)] =
                frame_edges(principal_vertex(lower[static_cast<std::size_t>(i)]));
        });
        std::vector<std::vector<Triplet>> columns(static_cast<std::size_t>(cols));
        parallel_for(cols, [&](std::int64_t c) {
            const CyclicCell& sigma = upper[static_cast<std::size_t>(c)];
            const PrincipalVertexFrame fs = principal_vertex(sigma);
            const int orientation = orientation_sign(fs);
            auto& col = columns[static_cast<std::size_t>(c)];
            for (int p = 0; p < sigma.parts(); ++p) {
                const auto& blk = sigma.block(p);
                const std::size_t r = blk.size();
                if (r < 2) continue;
                for (std::uint32_t mask = 1; mask + 1 < (1u << r); ++mask) {
                    SplitInfo split;
                    split.block = p;
                    for (std::size_t t = 0; t < r; ++t)
                        ((mask >> t) & 1u ? split.j1 : split.j2).push_back(blk[t]);
                    std::vector<std::vector<int>> blocks;
                    blocks.reserve(static_cast<std::size_t>(sigma.parts()) + 1);
                    for (int q = 0; q < sigma.parts(); ++q) {
                        if (q == p) {
                            blocks.push_back(split.j1);
                            blocks.push_back(split.j2);
                        } else {
                            blocks.push_back(sigma.block(q));
                        }
                    }
                    const CyclicCell tau(n, std::move(blocks));
                    const std::int64_t row = out.index_of(d - 1, tau);
                    col.push_back({row, c,
                                   incidence_geometric(fs, orientation,
                                                       lower_edges[static_cast<std::size_t>(row)],
                                                       split)});
                }
            }
        });
        std::vector<Triplet> entries;
        for (auto& col : columns)
            entries.insert(entries.end(), col.begin(), col.end());
        boundary[static_cast<std::size_t>(d)] = SparseIntMatrix::from_triplets(
            static_cast<std::int64_t>(out.cells[static_cast<std::size_t>(d - 1)].size()), cols,
            std::move(entries));
    }

    out.chain = ChainComplex(std::move(ids), std::move(boundary));
    return out;
}

} // namespace cyclo
