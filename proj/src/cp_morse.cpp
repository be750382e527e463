#include "cyclo/cp_morse.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclo/errors.hpp"

namespace cyclo {

CyclicCell CpCriticalCell::cell(int n) const {
    std::vector<std::vector<int>> blocks;
    if (kind == Kind::type1) {
        for (int x : nabla) blocks.push_back({x});
    } else {
        blocks.push_back({i});
        blocks.push_back(I);
    }
    blocks.push_back(n_set);
    return CyclicCell(n, std::move(blocks));
}

namespace {

// Position of the singleton {k} whose cyclic successor is a mergeable block
// (no n+1, all elements above k); -1 when absent. The n+1-set is last, so
// the successor of interest is never the wrap-around one.
int step_candidate(const CyclicCell& c, int k) {
    for (int q = 0; q + 1 < c.parts(); ++q) {
        const auto& blk = c.block(q);
        if (blk.size() != 1 || blk[0] != k) continue;
        if (q + 1 == c.parts() - 1) return -1; // successor is the n+1-set
        const auto& next = c.block(q + 1);
        if (next.front() < k) return -1;
        return q;
    }
    return -1;
}

} // namespace

Matching build_cp_matching(const CellComplex& cp) {
    const int n = cp.n;
    const int top = cp.chain.top_dim();
    std::vector<std::vector<int>> paired_step(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d)
        paired_step[static_cast<std::size_t>(d)].assign(
            static_cast<std::size_t>(cp.chain.cell_count(d)), 0);

    Matching m;
    for (int k = 1; k <= n - 1; ++k) {
        for (int d = 0; d < top; ++d) {
            const auto& level = cp.cells[static_cast<std::size_t>(d)];
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(level.size()); ++i) {
                if (paired_step[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)]) continue;
                const CyclicCell& alpha = level[static_cast<std::size_t>(i)];
                if (alpha.parts() < 4) continue; // merging must leave >= 3 parts
                const int q = step_candidate(alpha, k);
                if (q < 0) continue;
                const CyclicCell beta = merge_adjacent(alpha, q);
                const std::int64_t j = cp.index_of(d + 1, beta);
                auto& beta_step = paired_step[static_cast<std::size_t>(d + 1)][static_cast<std::size_t>(j)];
                if (beta_step != 0) {
                    if (beta_step == k)
                        throw InternalError("build_cp_matching: within-step conflict at step " +
                                            std::to_string(k) + " on " + beta.str());
                    continue;
                }
                paired_step[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] = k;
                beta_step = k;
                m.pairs.push_back({d, i, j});
            }
        }
    }
    return m;
}

namespace {

// Type 1: all blocks before the n+1-set are singletons in decreasing order.
bool parse_type1(const CyclicCell& c, CpCriticalCell& out) {
    std::vector<int> nabla;
    for (int b = 0; b + 1 < c.parts(); ++b) {
        if (c.block(b).size() != 1) return false;
        nabla.push_back(c.block(b)[0]);
    }
    for (std::size_t t = 0; t + 1 < nabla.size(); ++t)
        if (nabla[t] <= nabla[t + 1]) return false;
    out.kind = CpCriticalCell::Kind::type1;
    out.nabla = std::move(nabla);
    out.n_set = c.n_set();
    return true;
}

// Type 2: ({i}, I, N) with i below every element of I.
bool parse_type2(const CyclicCell& c, CpCriticalCell& out) {
    if (c.parts() != 3) return false;
    if (c.block(0).size() != 1) return false;
    const int i = c.block(0)[0];
    if (i >= c.block(1).front()) return false;
    out.kind = CpCriticalCell::Kind::type2;
    out.i = i;
    out.I = c.block(1);
    out.n_set = c.n_set();
    return true;
}

} // namespace

std::vector<CpCriticalCell> classify_critical_cp(const CellComplex& cp, const Matching& m) {
    const MatchingIndex mi(cp.chain, m);
    std::vector<CpCriticalCell> out;
    for (int d = 0; d <= cp.chain.top_dim(); ++d) {
        for (std::int64_t i = 0; i < cp.chain.cell_count(d); ++i) {
            if (!mi.is_critical(d, i)) continue;
            const CyclicCell& c = cp.cell(d, i);
            CpCriticalCell critical;
            if (!parse_type1(c, critical) && !parse_type2(c, critical))
                throw InternalError("classify_critical_cp: unmatched cell " + c.str() +
                                    " is neither Type 1 nor Type 2");
            out.push_back(std::move(critical));
        }
    }
    return out;
}

std::int64_t cp_critical_count(int n, int d) {
    auto choose = [](int a, int b) {
        if (b < 0 || b > a) return std::int64_t{0};
        std::int64_t r = 1;
        for (int t = 1; t <= b; ++t) r = r * (a - b + t) / t;
        return r;
    };
    if (d < 0 || d > n - 2) return 0;
    if (d < n - 2) return choose(n, d);
    return choose(n, 2) + (std::int64_t{1} << n) - n - 1;
}

namespace {

// The three 2-path shapes of the lemma, as predicates on (tau, sigma).
bool lemma_shape(const CellComplex& cp, const CyclicCell& tau, const CyclicCell& sigma) {
    CpCriticalCell t, s;
    const bool t1 = parse_type1(tau, t), t2 = !t1 && parse_type2(tau, t);
    if (!t1 && !t2) return false;
    if (!parse_type1(sigma, s)) return false; // 2-path targets are Type 1

    std::vector<int> t_nabla_set, s_nabla_set;
    if (t1) t_nabla_set = t.nabla;
    s_nabla_set = s.nabla;
    std::sort(t_nabla_set.begin(), t_nabla_set.end());
    std::sort(s_nabla_set.begin(), s_nabla_set.end());

    if (t1) {
        // (nabla, N) over (nabla u k, N - k)
        if (s_nabla_set.size() != t_nabla_set.size() + 1) return false;
        std::vector<int> diff;
        std::set_difference(s_nabla_set.begin(), s_nabla_set.end(), t_nabla_set.begin(),
                            t_nabla_set.end(), std::back_inserter(diff));
        if (diff.size() != 1) return false;
        std::vector<int> expected_n(t.n_set);
        expected_n.erase(std::remove(expected_n.begin(), expected_n.end(), diff[0]),
                         expected_n.end());
        return expected_n.size() + 1 == t.n_set.size() && expected_n == s.n_set;
    }
    if (t.I.size() == 2) {
        // (i, {j,k}, N) over (k, j, i, N)
        std::vector<int> expected{t.I[0], t.I[1], t.i};
        std::sort(expected.begin(), expected.end());
        return s.n_set == t.n_set && s_nabla_set == expected;
    }
    if (t.I.size() == 1) {
        // (i, {j}, N) over a 3-singleton nabla containing i and j
        if (s_nabla_set.size() != 3) return false;
        if (!std::binary_search(s_nabla_set.begin(), s_nabla_set.end(), t.i) ||
            !std::binary_search(s_nabla_set.begin(), s_nabla_set.end(), t.I[0]))
            return false;
        std::vector<int> third;
        std::vector<int> ij{std::min(t.i, t.I[0]), std::max(t.i, t.I[0])};
        std::set_difference(s_nabla_set.begin(), s_nabla_set.end(), ij.begin(), ij.end(),
                            std::back_inserter(third));
        if (third.size() != 1) return false;
        std::vector<int> expected_n(t.n_set);
        expected_n.erase(std::remove(expected_n.begin(), expected_n.end(), third[0]),
                         expected_n.end());
        return expected_n.size() + 1 == t.n_set.size() && expected_n == s.n_set &&
               third[0] != cp.n + 1;
    }
    return false;
}

} // namespace

MatchReport verify_cp_path_lemma(const CellComplex& cp, const Matching& m,
                                 bool explicit_enumeration) {
    const MatchingIndex mi(cp.chain, m);
    const auto critical = mi.critical_by_dim();
    for (int d = 1; d <= cp.chain.top_dim(); ++d) {
        const auto agg = gradient_path_aggregates(cp.chain, mi, d - 1);
        for (std::int64_t tau : critical[static_cast<std::size_t>(d)]) {
            std::map<std::int64_t, std::int64_t> counts;
            for (std::int64_t a : cp.chain.facets(d, tau))
                for (const auto& [target, sub] : agg[static_cast<std::size_t>(a)])
                    counts[target] += sub.count;
            for (std::int64_t sigma : critical[static_cast<std::size_t>(d - 1)]) {
                std::int64_t count = counts.count(sigma) ? counts[sigma] : 0;
                if (explicit_enumeration) {
                    const std::int64_t listed =
                        critical_pair_path_count(cp.chain, m, d, tau, sigma);
                    if (listed != count)
                        return {false, "path DP and explicit enumeration disagree on (" +
                                           cp.cell(d, tau).str() + ", " +
                                           cp.cell(d - 1, sigma).str() + ")"};
                }
                const bool shaped = lemma_shape(cp, cp.cell(d, tau), cp.cell(d - 1, sigma));
                if (count != 0 && count != 2)
                    return {false, "critical pair (" + cp.cell(d, tau).str() + ", " +
                                       cp.cell(d - 1, sigma).str() + ") has " +
                                       std::to_string(count) + " gradient paths"};
                if ((count == 2) != shaped)
                    return {false, "critical pair (" + cp.cell(d, tau).str() + ", " +
                                       cp.cell(d - 1, sigma).str() + ") has " +
                                       std::to_string(count) +
                                       " paths but lemma shape says " +
                                       (shaped ? "2" : "0")};
            }
        }
    }
    return {};
}

} // namespace cyclo
