#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclo/chain_complex.hpp"
#include "cyclo/partition.hpp"
#include "cyclo/vertices.hpp"

namespace cyclo {

/// Canonical orientation data of a cell: the principal vertex (each block's
/// elements in increasing order, blocks in cell order) together with its
/// ordered same-block-swap neighbors.
struct PrincipalVertexFrame {
    CyclicCell cell;
    std::vector<int> pv;
    std::vector<std::vector<int>> neighbors; // dim(cell) canonical sequences
};

PrincipalVertexFrame principal_vertex(const CyclicCell& c);

/// Facet structure of a codim-1 pair: tau splits block `block` of sigma
/// into the ordered pieces (j1, j2).
struct SplitInfo {
    int block = 0;
    std::vector<int> j1, j2;
};

/// The unique split turning sigma into tau, if tau is a codim-1 face.
std::optional<SplitInfo> split_info(const CyclicCell& sigma, const CyclicCell& tau);

/// Incidence number [sigma : tau] = sign(g) * (-1)^{i_tau}, where g maps
/// PV(sigma) to PV(tau) position-wise and i_tau is the unique neighbor
/// index whose g-image is not adjacent to PV(tau) inside tau.
/// Throws std::invalid_argument when tau is not a face of sigma and
/// InternalError when i_tau is missing or not unique.
int incidence_cp(const CyclicCell& sigma, const CyclicCell& tau);

/// incidence_cp(s, t1) * incidence_cp(s, t2) for a good triple
/// t1 = (X,{k},I,Y), t2 = (X,I,{k},Y), s = (X,{k} u I,Y).
/// Throws std::invalid_argument when the triple has the wrong shape.
int good_triple_sign(const CyclicCell& t1, const CyclicCell& t2, const CyclicCell& s);

struct BuildOptions {
    int max_n = 8;            // resource guard; CP_9 is already ~10^6 cells
    bool allow_large = false; // override the guard
};

/// A chain complex whose cells carry their combinatorial labels.
struct CellComplex {
    ChainComplex chain;
    std::vector<std::vector<CyclicCell>> cells; // parallel to chain cells
    int n = 0;

    const CyclicCell& cell(int d, std::int64_t i) const {
        return cells[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
    }
    std::int64_t index_of(int d, const CyclicCell& c) const;
};

/// CP_{n+1}: k-cells are the cyclic partitions of {1,...,n+1} into
/// n-k+1 >= 3 parts; boundary entries from incidence_cp.
CellComplex build_cp(int n, const BuildOptions& options = {});

} // namespace cyclo
