#include "cyclo/chain_complex.hpp"

#include <map>
#include <stdexcept>

#include "json.hpp"

namespace cyclo {

ChainComplex::ChainComplex(std::vector<std::vector<std::string>> cells,
                           std::vector<SparseIntMatrix> boundary)
    : cells_(std::move(cells)), boundary_(std::move(boundary)) {
    if (boundary_.size() != cells_.size())
        throw std::invalid_argument("chain complex: one boundary matrix per dimension required");
    for (std::size_t d = 0; d < cells_.size(); ++d) {
        const auto expected_rows = d == 0 ? 0 : static_cast<std::int64_t>(cells_[d - 1].size());
        if (boundary_[d].rows() != expected_rows ||
            boundary_[d].cols() != static_cast<std::int64_t>(cells_[d].size()))
            throw std::invalid_argument("chain complex: boundary matrix shape mismatch at dim " +
                                        std::to_string(d));
    }
    index_.resize(cells_.size());
    for (std::size_t d = 0; d < cells_.size(); ++d)
        for (std::size_t i = 0; i < cells_[d].size(); ++i)
            index_[d].emplace(cells_[d][i], static_cast<std::int64_t>(i));
}

std::vector<std::int64_t> ChainComplex::cell_counts() const {
    std::vector<std::int64_t> out;
    out.reserve(cells_.size());
    for (const auto& cs : cells_) out.push_back(static_cast<std::int64_t>(cs.size()));
    return out;
}

std::int64_t ChainComplex::index_of(int d, std::string_view id) const {
    const auto& map = index_[static_cast<std::size_t>(d)];
    auto it = map.find(std::string(id));
    return it == map.end() ? -1 : it->second;
}

std::int64_t ChainComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t d = 0; d < cells_.size(); ++d)
        chi += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(cells_[d].size());
    return chi;
}

std::string ChainComplex::to_json() const {
    nlohmann::json j;
    j["dims"] = nlohmann::json::array();
    j["cells"] = nlohmann::json::array();
    j["boundary"] = nlohmann::json::array();
    for (int d = 0; d <= top_dim(); ++d) {
        j["dims"].push_back(d);
        j["cells"].push_back(cells_[static_cast<std::size_t>(d)]);
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& t : boundary_[static_cast<std::size_t>(d)].triplets())
            entries.push_back({t.col, t.row, t.value});
        j["boundary"].push_back(std::move(entries));
    }
    return j.dump();
}

ComplexReport verify_boundary_squared(const ChainComplex& cc) {
    for (int d = 2; d <= cc.top_dim(); ++d) {
        SparseIntMatrix prod = cc.boundary(d - 1).multiply(cc.boundary(d));
        if (!prod.is_zero()) {
            auto ts = prod.triplets();
            const auto& t = ts.front();
            return {false, "d(d(" + cc.cell_id(d, t.col) + ")) has coefficient " +
                               std::to_string(t.value) + " at " + cc.cell_id(d - 2, t.row)};
        }
    }
    return {};
}

ComplexReport verify_diamond(const ChainComplex& cc) {
    if (cc.top_dim() >= 1) {
        for (std::int64_t e = 0; e < cc.cell_count(1); ++e)
            if (cc.facets(1, e).size() != 2)
                return {false, "1-cell " + cc.cell_id(1, e) + " has " +
                                   std::to_string(cc.facets(1, e).size()) + " vertices"};
    }
    for (int d = 2; d <= cc.top_dim(); ++d) {
        for (std::int64_t s = 0; s < cc.cell_count(d); ++s) {
            std::map<std::int64_t, int> middle_count;
            for (std::int64_t a : cc.facets(d, s))
                for (std::int64_t t : cc.facets(d - 1, a)) ++middle_count[t];
            for (const auto& [t, count] : middle_count)
                if (count != 2)
                    return {false, "interval [" + cc.cell_id(d - 2, t) + ", " + cc.cell_id(d, s) +
                                       "] has " + std::to_string(count) + " middle cells"};
        }
    }
    return {};
}

std::int64_t euler_characteristic(const ChainComplex& cc) { return cc.euler_characteristic(); }

} // namespace cyclo
