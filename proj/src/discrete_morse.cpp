#include "cyclo/discrete_morse.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "cyclo/errors.hpp"

namespace cyclo {

MatchReport validate_matching(const ChainComplex& cc, const Matching& m) {
    std::vector<std::vector<char>> used(static_cast<std::size_t>(cc.top_dim()) + 1);
    for (int d = 0; d <= cc.top_dim(); ++d)
        used[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(cc.cell_count(d)), 0);

    for (const auto& p : m.pairs) {
        if (p.dim < 0 || p.dim + 1 > cc.top_dim())
            return {false, "pair dimension " + std::to_string(p.dim) + " out of range"};
        if (p.lower < 0 || p.lower >= cc.cell_count(p.dim) || p.upper < 0 ||
            p.upper >= cc.cell_count(p.dim + 1))
            return {false, "pair indices out of range in dimension " + std::to_string(p.dim)};
        if (cc.boundary(p.dim + 1).at(p.lower, p.upper) == 0)
            return {false, cc.cell_id(p.dim, p.lower) + " is not a facet of " +
                               cc.cell_id(p.dim + 1, p.upper)};
        auto& lower_used = used[static_cast<std::size_t>(p.dim)][static_cast<std::size_t>(p.lower)];
        auto& upper_used =
            used[static_cast<std::size_t>(p.dim + 1)][static_cast<std::size_t>(p.upper)];
        if (lower_used)
            return {false, "cell " + cc.cell_id(p.dim, p.lower) + " appears in two pairs"};
        if (upper_used)
            return {false, "cell " + cc.cell_id(p.dim + 1, p.upper) + " appears in two pairs"};
        lower_used = upper_used = 1;
    }
    return {};
}

MatchingIndex::MatchingIndex(const ChainComplex& cc, const Matching& m) {
    if (auto report = validate_matching(cc, m); !report)
        throw std::invalid_argument("invalid matching: " + report.detail);
    up_.resize(static_cast<std::size_t>(cc.top_dim()) + 1);
    down_.resize(static_cast<std::size_t>(cc.top_dim()) + 1);
    for (int d = 0; d <= cc.top_dim(); ++d) {
        up_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(cc.cell_count(d)), -1);
        down_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(cc.cell_count(d)), -1);
    }
    for (const auto& p : m.pairs) {
        up_[static_cast<std::size_t>(p.dim)][static_cast<std::size_t>(p.lower)] = p.upper;
        down_[static_cast<std::size_t>(p.dim + 1)][static_cast<std::size_t>(p.upper)] = p.lower;
    }
}

std::vector<std::vector<std::int64_t>> MatchingIndex::critical_by_dim() const {
    std::vector<std::vector<std::int64_t>> out(up_.size());
    for (std::size_t d = 0; d < up_.size(); ++d)
        for (std::size_t i = 0; i < up_[d].size(); ++i)
            if (up_[d][i] < 0 && down_[d][i] < 0) out[d].push_back(static_cast<std::int64_t>(i));
    return out;
}

namespace {

// V-path digraph on dim-cells: a -> b when a is paired with tau above and
// b != a is a facet of tau.
std::vector<std::vector<std::int64_t>> path_digraph(const ChainComplex& cc,
                                                    const MatchingIndex& mi, int dim) {
    std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(cc.cell_count(dim)));
    for (std::int64_t a = 0; a < cc.cell_count(dim); ++a) {
        const std::int64_t tau = mi.up(dim, a);
        if (tau < 0) continue;
        for (std::int64_t b : cc.facets(dim + 1, tau))
            if (b != a) adj[static_cast<std::size_t>(a)].push_back(b);
    }
    return adj;
}

// Reverse topological order (sinks first); nullopt when the digraph has a
// cycle, with `cycle_node` set to a node inside one.
std::optional<std::vector<std::int64_t>> reverse_topological_order(
    const std::vector<std::vector<std::int64_t>>& adj, std::int64_t* cycle_node = nullptr) {
    const auto count = static_cast<std::int64_t>(adj.size());
    std::vector<char> state(static_cast<std::size_t>(count), 0); // 0 new, 1 open, 2 done
    std::vector<std::int64_t> order;
    order.reserve(static_cast<std::size_t>(count));
    std::vector<std::pair<std::int64_t, std::size_t>> stack;
    for (std::int64_t root = 0; root < count; ++root) {
        if (state[static_cast<std::size_t>(root)] != 0) continue;
        stack.push_back({root, 0});
        state[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            auto& [node, edge] = stack.back();
            if (edge == adj[static_cast<std::size_t>(node)].size()) {
                state[static_cast<std::size_t>(node)] = 2;
                order.push_back(node);
                stack.pop_back();
                continue;
            }
            const std::int64_t next = adj[static_cast<std::size_t>(node)][edge++];
            if (state[static_cast<std::size_t>(next)] == 1) {
                if (cycle_node) *cycle_node = next;
                return std::nullopt;
            }
            if (state[static_cast<std::size_t>(next)] == 0) {
                state[static_cast<std::size_t>(next)] = 1;
                stack.push_back({next, 0});
            }
        }
    }
    return order;
}

} // namespace

MatchReport check_acyclic(const ChainComplex& cc, const Matching& m) {
    if (auto report = validate_matching(cc, m); !report) return report;
    const MatchingIndex mi(cc, m);
    for (int d = 0; d < cc.top_dim(); ++d) {
        auto adj = path_digraph(cc, mi, d);
        std::int64_t inside = -1;
        if (reverse_topological_order(adj, &inside)) continue;

        // Recover a concrete closed V-path: DFS from a node known to lie on
        // a cycle, reporting the first edge back into the current path.
        std::vector<std::int64_t> on_path_at(adj.size(), -1);
        std::vector<std::int64_t> path;
        std::vector<char> done(adj.size(), 0);
        std::vector<std::pair<std::int64_t, std::size_t>> stack{{inside, 0}};
        on_path_at[static_cast<std::size_t>(inside)] = 0;
        path.push_back(inside);
        while (!stack.empty()) {
            auto& [node, edge] = stack.back();
            if (edge == adj[static_cast<std::size_t>(node)].size()) {
                done[static_cast<std::size_t>(node)] = 1;
                on_path_at[static_cast<std::size_t>(node)] = -1;
                path.pop_back();
                stack.pop_back();
                continue;
            }
            const std::int64_t next = adj[static_cast<std::size_t>(node)][edge++];
            if (on_path_at[static_cast<std::size_t>(next)] >= 0) {
                std::string detail = "closed V-path:";
                for (std::size_t k = static_cast<std::size_t>(
                         on_path_at[static_cast<std::size_t>(next)]);
                     k < path.size(); ++k) {
                    detail += ' ' + cc.cell_id(d, path[k]) + " -> " +
                              cc.cell_id(d + 1, mi.up(d, path[k])) + " ->";
                }
                detail += ' ' + cc.cell_id(d, next);
                return {false, detail};
            }
            if (!done[static_cast<std::size_t>(next)]) {
                on_path_at[static_cast<std::size_t>(next)] = static_cast<std::int64_t>(path.size());
                path.push_back(next);
                stack.push_back({next, 0});
            }
        }
        return {false, "closed V-path detected in dimension " + std::to_string(d)};
    }
    return {};
}

std::vector<GradientPath> enumerate_gradient_paths(const ChainComplex& cc, const Matching& m,
                                                   int dim, std::int64_t from, std::int64_t to) {
    const MatchingIndex mi(cc, m);
    auto adj = path_digraph(cc, mi, dim);
    if (!reverse_topological_order(adj))
        throw std::invalid_argument("enumerate_gradient_paths: matching has a closed V-path");

    // Prune the search to cells that can still reach `to`.
    std::vector<char> reaches(adj.size(), 0);
    {
        std::vector<std::vector<std::int64_t>> radj(adj.size());
        for (std::size_t a = 0; a < adj.size(); ++a)
            for (std::int64_t b : adj[a]) radj[static_cast<std::size_t>(b)].push_back(
                static_cast<std::int64_t>(a));
        std::vector<std::int64_t> queue{to};
        reaches[static_cast<std::size_t>(to)] = 1;
        while (!queue.empty()) {
            const std::int64_t x = queue.back();
            queue.pop_back();
            for (std::int64_t p : radj[static_cast<std::size_t>(x)])
                if (!reaches[static_cast<std::size_t>(p)]) {
                    reaches[static_cast<std::size_t>(p)] = 1;
                    queue.push_back(p);
                }
        }
    }

    std::vector<GradientPath> out;
    std::vector<std::int64_t> current{from};
    constexpr std::size_t kPathCap = 1u << 20;
    auto dfs = [&](auto&& self, std::int64_t a) -> void {
        if (a == to) {
            out.push_back({dim, current});
            if (out.size() > kPathCap)
                throw std::runtime_error("enumerate_gradient_paths: path explosion");
        }
        const std::int64_t tau = mi.up(dim, a);
        if (tau < 0) return;
        for (std::int64_t b : cc.facets(dim + 1, tau)) {
            if (b == a || !reaches[static_cast<std::size_t>(b)]) continue;
            current.push_back(tau);
            current.push_back(b);
            self(self, b);
            current.pop_back();
            current.pop_back();
        }
    };
    if (reaches[static_cast<std::size_t>(from)]) dfs(dfs, from);
    return out;
}

int path_weight(const ChainComplex& cc, const GradientPath& path) {
    int weight = 1;
    const auto& cells = path.cells;
    for (std::size_t k = 0; k + 2 < cells.size(); k += 2) {
        const auto& d = cc.boundary(path.dim + 1);
        const std::int64_t tau = cells[k + 1];
        weight *= -static_cast<int>(d.at(cells[k], tau)) * static_cast<int>(d.at(cells[k + 2], tau));
    }
    return weight;
}

std::vector<std::map<std::int64_t, PathAggregate>>
gradient_path_aggregates(const ChainComplex& cc, const MatchingIndex& mi, int dim) {
    auto adj = path_digraph(cc, mi, dim);
    auto order = reverse_topological_order(adj);
    if (!order)
        throw std::invalid_argument("gradient_path_aggregates: matching has a closed V-path");

    std::vector<std::map<std::int64_t, PathAggregate>> agg(adj.size());
    const auto& d_upper = cc.boundary(dim + 1);
    for (std::int64_t a : *order) {
        auto& own = agg[static_cast<std::size_t>(a)];
        if (mi.is_critical(dim, a)) own[a] = {1, 1};
        const std::int64_t tau = mi.up(dim, a);
        if (tau < 0) continue;
        const int sign_a = static_cast<int>(d_upper.at(a, tau));
        for (std::int64_t b : cc.facets(dim + 1, tau)) {
            if (b == a) continue;
            const int step = -sign_a * static_cast<int>(d_upper.at(b, tau));
            for (const auto& [target, sub] : agg[static_cast<std::size_t>(b)]) {
                auto& slot = own[target];
                slot.count += sub.count;
                slot.weight += step * sub.weight;
            }
        }
    }
    return agg;
}

std::int64_t critical_pair_path_count(const ChainComplex& cc, const Matching& m, int upper_dim,
                                      std::int64_t tau, std::int64_t sigma) {
    std::int64_t total = 0;
    for (std::int64_t a : cc.facets(upper_dim, tau))
        total += static_cast<std::int64_t>(
            enumerate_gradient_paths(cc, m, upper_dim - 1, a, sigma).size());
    return total;
}

std::vector<std::int64_t> MorseComplex::cell_counts() const {
    std::vector<std::int64_t> out;
    out.reserve(critical.size());
    for (const auto& cs : critical) out.push_back(static_cast<std::int64_t>(cs.size()));
    return out;
}

MorseComplex morse_boundary(const ChainComplex& cc, const Matching& m) {
    if (auto report = check_acyclic(cc, m); !report)
        throw std::invalid_argument("morse_boundary: " + report.detail);
    const MatchingIndex mi(cc, m);

    MorseComplex out;
    out.critical = mi.critical_by_dim();
    out.ids.resize(out.critical.size());
    for (std::size_t d = 0; d < out.critical.size(); ++d)
        for (std::int64_t i : out.critical[d])
            out.ids[d].push_back(cc.cell_id(static_cast<int>(d), i));

    out.boundary.resize(out.critical.size());
    out.boundary[0] = SparseIntMatrix(0, static_cast<std::int64_t>(out.critical[0].size()));
    for (int d = 1; d <= cc.top_dim(); ++d) {
        const auto& lower_critical = out.critical[static_cast<std::size_t>(d - 1)];
        const auto& upper_critical = out.critical[static_cast<std::size_t>(d)];
        std::vector<std::int64_t> row_of(static_cast<std::size_t>(cc.cell_count(d - 1)), -1);
        for (std::size_t r = 0; r < lower_critical.size(); ++r)
            row_of[static_cast<std::size_t>(lower_critical[r])] = static_cast<std::int64_t>(r);

        const auto agg = gradient_path_aggregates(cc, mi, d - 1);
        std::vector<Triplet> entries;
        for (std::size_t col = 0; col < upper_critical.size(); ++col) {
            const std::int64_t tau = upper_critical[col];
            auto rows_span = cc.boundary(d).col_rows(tau);
            auto vals_span = cc.boundary(d).col_values(tau);
            std::map<std::int64_t, std::int64_t> coeff;
            for (std::size_t k = 0; k < rows_span.size(); ++k)
                for (const auto& [target, sub] : agg[static_cast<std::size_t>(rows_span[k])])
                    coeff[target] += vals_span[k] * sub.weight;
            for (const auto& [target, value] : coeff)
                if (value != 0)
                    entries.push_back({row_of[static_cast<std::size_t>(target)],
                                       static_cast<std::int64_t>(col), value});
        }
        out.boundary[static_cast<std::size_t>(d)] = SparseIntMatrix::from_triplets(
            static_cast<std::int64_t>(lower_critical.size()),
            static_cast<std::int64_t>(upper_critical.size()), std::move(entries));
    }

    for (std::size_t d = 2; d < out.boundary.size(); ++d)
        if (!out.boundary[d - 1].multiply(out.boundary[d]).is_zero())
            throw InternalError("morse_boundary: Morse boundaries do not square to zero");
    return out;
}

} // namespace cyclo
