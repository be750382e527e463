#include "cyclo/sign_solver.hpp"

#include <map>
#include <stdexcept>

namespace cyclo {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
    throw std::runtime_error("inconsistent face poset: " + what);
}

} // namespace

ChainComplex solve_incidence_signs(const FacePoset& poset) {
    const std::size_t dims = poset.cells.size();
    if (poset.facets.size() != dims)
        throw std::invalid_argument("face poset: facet lists must match cell dimensions");

    std::vector<SparseIntMatrix> boundary(dims);
    if (dims == 0) return ChainComplex({}, {});
    boundary[0] = SparseIntMatrix(0, static_cast<std::int64_t>(poset.cells[0].size()));

    for (std::size_t d = 1; d < dims; ++d) {
        const auto rows = static_cast<std::int64_t>(poset.cells[d - 1].size());
        const auto cols = static_cast<std::int64_t>(poset.cells[d].size());
        std::vector<Triplet> entries;

        for (std::int64_t c = 0; c < cols; ++c) {
            const auto& facets = poset.facets[d][static_cast<std::size_t>(c)];
            const std::size_t nf = facets.size();
            if (d == 1) {
                if (nf != 2)
                    inconsistent("1-cell " + poset.cells[1][static_cast<std::size_t>(c)] +
                                 " has " + std::to_string(nf) + " vertices");
                entries.push_back({facets[0], c, +1});
                entries.push_back({facets[1], c, -1});
                continue;
            }

            // Parity constraints between facet signs: for every codim-2 cell
            // tau under exactly two facets a, b of this cell,
            // x_a * x_b = -[a:tau][b:tau].
            std::map<std::int64_t, std::vector<std::size_t>> below;
            for (std::size_t k = 0; k < nf; ++k)
                for (std::int64_t t :
                     poset.facets[d - 1][static_cast<std::size_t>(facets[k])])
                    below[t].push_back(k);

            std::vector<std::vector<std::pair<std::size_t, int>>> adj(nf);
            for (const auto& [t, mids] : below) {
                if (mids.size() != 2)
                    inconsistent("interval [" + poset.cells[d - 2][static_cast<std::size_t>(t)] +
                                 ", " + poset.cells[d][static_cast<std::size_t>(c)] + "] has " +
                                 std::to_string(mids.size()) + " middle cells");
                const auto& lower = boundary[d - 1];
                const int sa = static_cast<int>(lower.at(t, facets[mids[0]]));
                const int sb = static_cast<int>(lower.at(t, facets[mids[1]]));
                const int parity = -sa * sb; // x_a * x_b must equal this
                adj[mids[0]].push_back({mids[1], parity});
                adj[mids[1]].push_back({mids[0], parity});
            }

            std::vector<int> sign(nf, 0);
            for (std::size_t root = 0; root < nf; ++root) {
                if (sign[root] != 0) continue;
                sign[root] = +1;
                std::vector<std::size_t> stack{root};
                while (!stack.empty()) {
                    std::size_t a = stack.back();
                    stack.pop_back();
                    for (auto [b, parity] : adj[a]) {
                        const int want = sign[a] * parity;
                        if (sign[b] == 0) {
                            sign[b] = want;
                            stack.push_back(b);
                        } else if (sign[b] != want) {
                            inconsistent("no valid sign assignment for cell " +
                                         poset.cells[d][static_cast<std::size_t>(c)] +
                                         " (odd parity cycle through facet " +
                                         poset.cells[d - 1][static_cast<std::size_t>(facets[b])] +
                                         ")");
                        }
                    }
                }
            }
            for (std::size_t k = 0; k < nf; ++k) entries.push_back({facets[k], c, sign[k]});
        }
        boundary[d] = SparseIntMatrix::from_triplets(rows, cols, std::move(entries));
    }

    return ChainComplex(poset.cells, std::move(boundary));
}

} // namespace cyclo
