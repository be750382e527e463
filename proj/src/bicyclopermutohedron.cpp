#include "cyclo/bicyclopermutohedron.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cyclo/errors.hpp"

namespace cyclo {

BiCyclicCell ascending_representative(const CyclicCell& c) {
    if (is_ascending(c)) return {c};
    CyclicCell r = reflect(c);
    if (!is_ascending(r))
        throw InternalError("ascending_representative: neither " + c.str() + " nor its " +
                            "reflection is ascending");
    return {std::move(r)};
}

bool higher(const BiCyclicCell& a, const BiCyclicCell& b) {
    if (a.rep.n() != b.rep.n())
        throw std::invalid_argument("higher: mismatched ground sets");
    const ClassPair ca = a.cls(), cb = b.cls();
    return ca.min() >= cb.min() && ca.max() >= cb.max();
}

int sgn(int s) {
    if (s < 0) throw std::invalid_argument("sgn: negative argument");
    const int half = s % 2 ? (s - 1) / 2 : s / 2;
    return half % 2 ? -1 : 1;
}

int reflection_sign(const CyclicCell& c) {
    const int dim = c.dim();
    const int nw = static_cast<int>(c.n_set().size());
    int sign = sgn(dim - nw + 1) * sgn(nw - 1) * sgn(nw);
    for (int b = 0; b + 1 < c.parts(); ++b)
        sign *= sgn(static_cast<int>(c.block(b).size()));
    return sign;
}

CellComplex build_qp(const CellComplex& cp) {
    CellComplex out;
    out.n = cp.n;
    const int top = cp.chain.top_dim();
    out.cells.resize(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<std::string>> ids(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        for (const auto& c : cp.cells[static_cast<std::size_t>(d)])
            if (is_ascending(c)) out.cells[static_cast<std::size_t>(d)].push_back(c);
        // cp cells are sorted, so the ascending subsequence is too
        for (const auto& c : out.cells[static_cast<std::size_t>(d)])
            ids[static_cast<std::size_t>(d)].push_back(c.str());
        if (out.cells[static_cast<std::size_t>(d)].size() * 2 !=
            cp.cells[static_cast<std::size_t>(d)].size())
            throw InternalError("build_qp: ascending cells are not half of dimension " +
                                std::to_string(d));
    }

    std::vector<SparseIntMatrix> boundary(static_cast<std::size_t>(top) + 1);
    boundary[0] = SparseIntMatrix(0, static_cast<std::int64_t>(out.cells[0].size()));
    for (int d = 1; d <= top; ++d) {
        const auto& level = out.cells[static_cast<std::size_t>(d)];
        std::vector<Triplet> entries;
        for (std::int64_t col = 0; col < static_cast<std::int64_t>(level.size()); ++col) {
            const CyclicCell& sigma = level[static_cast<std::size_t>(col)];
            for (const CyclicCell& tau : codim1_faces(sigma)) {
                int value = incidence_cp(sigma, tau);
                CyclicCell target = tau;
                if (!is_ascending(tau)) {
                    value *= reflection_sign(tau);
                    target = reflect(tau);
                }
                const std::int64_t row = out.index_of(d - 1, target);
                if (row < 0)
                    throw InternalError("build_qp: missing ascending representative for " +
                                        tau.str());
                entries.push_back({row, col, value});
            }
        }
        boundary[static_cast<std::size_t>(d)] = SparseIntMatrix::from_triplets(
            static_cast<std::int64_t>(out.cells[static_cast<std::size_t>(d - 1)].size()),
            static_cast<std::int64_t>(level.size()), std::move(entries));
        if (boundary[static_cast<std::size_t>(d)].max_abs() > 2)
            throw InternalError("build_qp: boundary entry above 2 in dimension " +
                                std::to_string(d));
    }

    out.chain = ChainComplex(std::move(ids), std::move(boundary));
    if (auto report = verify_boundary_squared(out.chain); !report)
        throw InternalError("build_qp: " + report.detail);
    return out;
}

CellComplex build_qp(int n, const BuildOptions& options) { return build_qp(build_cp(n, options)); }

Matching build_qp_matching(const CellComplex& cp, const Matching& cp_matching,
                           const CellComplex& qp) {
    Matching m;
    for (const auto& p : cp_matching.pairs) {
        const CyclicCell& alpha = cp.cell(p.dim, p.lower);
        const CyclicCell& beta = cp.cell(p.dim + 1, p.upper);
        if (!is_ascending(alpha) || class_of(alpha) != class_of(beta)) continue;
        const std::int64_t lower = qp.index_of(p.dim, alpha);
        const std::int64_t upper = qp.index_of(p.dim + 1, beta);
        if (lower < 0 || upper < 0)
            throw InternalError("build_qp_matching: ascending cell missing from quotient");
        m.pairs.push_back({p.dim, lower, upper});
    }
    return m;
}

CyclicCell QpCriticalCell::cell(int n) const {
    std::vector<std::vector<int>> blocks;
    blocks.push_back({i});
    blocks.push_back(I);
    for (int x : nabla) blocks.push_back({x});
    blocks.push_back(n_set);
    return CyclicCell(n, std::move(blocks));
}

namespace {

bool parse_qp_critical(const CyclicCell& c, QpCriticalCell& out) {
    if (c.parts() < 3) return false;
    if (c.block(0).size() != 1) return false;
    const int i = c.block(0)[0];
    const auto& I = c.block(1);
    if (i >= I.front()) return false; // i < I
    std::vector<int> nabla;
    for (int b = 2; b + 1 < c.parts(); ++b) {
        if (c.block(b).size() != 1) return false;
        nabla.push_back(c.block(b)[0]);
    }
    for (std::size_t t = 0; t + 1 < nabla.size(); ++t)
        if (nabla[t] <= nabla[t + 1]) return false;
    if (!nabla.empty() && nabla.front() >= i) return false; // nabla < i
    out.i = i;
    out.I = I;
    out.nabla = std::move(nabla);
    out.n_set = c.n_set();
    return true;
}

} // namespace

std::vector<QpCriticalCell> classify_critical_qp(const CellComplex& qp, const Matching& m) {
    const MatchingIndex mi(qp.chain, m);
    std::vector<QpCriticalCell> out;
    for (int d = 0; d <= qp.chain.top_dim(); ++d) {
        for (std::int64_t i = 0; i < qp.chain.cell_count(d); ++i) {
            if (!mi.is_critical(d, i)) continue;
            QpCriticalCell critical;
            if (!parse_qp_critical(qp.cell(d, i), critical))
                throw InternalError("classify_critical_qp: unmatched cell " +
                                    qp.cell(d, i).str() + " is not of the (i, I, nabla, N) form");
            out.push_back(std::move(critical));
        }
    }
    return out;
}

std::int64_t xi(int n, int i) {
    std::int64_t total = 0, binom = 1;
    for (int k = 0; k <= i && k <= n; ++k) {
        total += binom;
        binom = binom * (n - k) / (k + 1);
    }
    return total;
}

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

} // namespace

std::int64_t qp_expected_betti(int n, int i) {
    if (i < 0 || i > n - 2) return 0;
    if (n % 2 == 1 && i == n - 2) return xi(n, i);
    return i % 2 == 0 ? binomial(n, i) : 0;
}

std::int64_t qp_expected_torsion_count(int n, int i) {
    if (i < 0 || i > n - 2) return 0;
    if (i % 2 == 0) return 0;
    if (n % 2 == 1 && i == n - 2) return 0;
    return xi(n, i);
}

namespace {

// The five target forms of the path theorem, generated from (i, I, nabla, N).
std::vector<CyclicCell> theorem_targets(int n, const QpCriticalCell& a) {
    std::vector<CyclicCell> out;
    auto desc = [](std::vector<int> v) {
        std::sort(v.begin(), v.end(), std::greater<int>());
        return v;
    };
    auto make = [&](std::vector<std::vector<int>> blocks) { out.emplace_back(n, std::move(blocks)); };

    for (int t : a.n_set) {
        if (t == n + 1) continue;
        std::vector<int> reduced(a.n_set);
        reduced.erase(std::remove(reduced.begin(), reduced.end(), t), reduced.end());
        if (t < a.i) {
            // (i, I, nabla u t, N - t)
            std::vector<int> nb(a.nabla);
            nb.push_back(t);
            std::vector<std::vector<int>> blocks{{a.i}, a.I};
            for (int x : desc(nb)) blocks.push_back({x});
            blocks.push_back(reduced);
            make(std::move(blocks));
        } else if (t > a.i && t < a.I.front()) {
            // (t, I, i, nabla, N - t)
            std::vector<std::vector<int>> blocks{{t}, a.I, {a.i}};
            for (int x : a.nabla) blocks.push_back({x});
            blocks.push_back(reduced);
            make(std::move(blocks));
        }
    }
    if (a.I.size() == 1) {
        // (I, J, i, nabla, N - J) for J a nonempty subset of N above I; the
        // |J| = 1 instances are the stated (I,t,i,nabla,N-t) form, and the
        // larger J arise as genuine two-path targets as well (see the
        // exhaustive census in the tests).
        std::vector<int> movable;
        for (int t : a.n_set)
            if (t != n + 1 && t > a.I.front()) movable.push_back(t);
        for (std::uint32_t mask = 1; mask < (1u << movable.size()); ++mask) {
            std::vector<int> moved;
            for (std::size_t b = 0; b < movable.size(); ++b)
                if ((mask >> b) & 1u) moved.push_back(movable[b]);
            std::vector<int> reduced;
            for (int x : a.n_set)
                if (std::find(moved.begin(), moved.end(), x) == moved.end())
                    reduced.push_back(x);
            std::vector<std::vector<int>> blocks{a.I, moved, {a.i}};
            for (int x : a.nabla) blocks.push_back({x});
            blocks.push_back(reduced);
            make(std::move(blocks));
        }
    }
    if (a.I.size() >= 2) {
        // (j, I - j, i, nabla, N) for each j in I
        for (int j : a.I) {
            std::vector<int> rest(a.I);
            rest.erase(std::remove(rest.begin(), rest.end(), j), rest.end());
            std::vector<std::vector<int>> blocks{{j}, rest, {a.i}};
            for (int x : a.nabla) blocks.push_back({x});
            blocks.push_back(a.n_set);
            make(std::move(blocks));
        }
    }
    return out;
}

} // namespace

MatchReport verify_qp_path_theorem(const CellComplex& qp, const Matching& m,
                                   bool explicit_enumeration) {
    const MatchingIndex mi(qp.chain, m);
    const auto critical = mi.critical_by_dim();
    const int n = qp.n;
    for (int d = 1; d <= qp.chain.top_dim(); ++d) {
        const auto agg = gradient_path_aggregates(qp.chain, mi, d - 1);
        for (std::int64_t tau : critical[static_cast<std::size_t>(d)]) {
            QpCriticalCell upper;
            parse_qp_critical(qp.cell(d, tau), upper);
            std::vector<CyclicCell> allowed = theorem_targets(n, upper);
            std::map<std::int64_t, std::int64_t> counts;
            for (std::int64_t a : qp.chain.facets(d, tau))
                for (const auto& [target, sub] : agg[static_cast<std::size_t>(a)])
                    counts[target] += sub.count;
            for (std::int64_t sigma : critical[static_cast<std::size_t>(d - 1)]) {
                const std::int64_t count = counts.count(sigma) ? counts[sigma] : 0;
                if (explicit_enumeration) {
                    const std::int64_t listed =
                        critical_pair_path_count(qp.chain, m, d, tau, sigma);
                    if (listed != count)
                        return {false, "path DP and explicit enumeration disagree on (" +
                                           qp.cell(d, tau).str() + ", " +
                                           qp.cell(d - 1, sigma).str() + ")"};
                }
                if (count != 0 && count != 2)
                    return {false, "critical pair (" + qp.cell(d, tau).str() + ", " +
                                       qp.cell(d - 1, sigma).str() + ") has " +
                                       std::to_string(count) + " gradient paths"};
                const CyclicCell& target = qp.cell(d - 1, sigma);
                if (count == 2 &&
                    std::find(allowed.begin(), allowed.end(), target) == allowed.end())
                    return {false, "2-path target " + target.str() + " of " +
                                       qp.cell(d, tau).str() +
                                       " matches none of the theorem forms"};
                if (count != 0) {
                    // A pair with N and J intersecting as well as I and J
                    // intersecting admits no path.
                    QpCriticalCell lower;
                    parse_qp_critical(target, lower);
                    auto intersects = [](const std::vector<int>& x, const std::vector<int>& y) {
                        for (int v : x)
                            if (std::find(y.begin(), y.end(), v) != y.end()) return true;
                        return false;
                    };
                    if (intersects(upper.n_set, lower.I) && intersects(upper.I, lower.I))
                        return {false, "pair (" + qp.cell(d, tau).str() + ", " + target.str() +
                                           ") violates the disjointness proposition"};
                }
            }
        }
    }
    return {};
}

} // namespace cyclo
