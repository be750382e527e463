#include "cyclo/linkage.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclo/sign_solver.hpp"

namespace cyclo {

namespace {

using BigInt = boost::multiprecision::cpp_int;

[[noreturn]] void bad_lengths(const std::string& what) {
    throw std::invalid_argument("length vector: " + what);
}

} // namespace

Rational LengthVector::total() const {
    Rational sum(0);
    for (const auto& l : lengths) sum += l;
    return sum;
}

LengthVector parse_lengths(std::string_view text) {
    LengthVector lv;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok(text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (tok.empty()) bad_lengths("empty entry");
        long long num = 0, den = 1;
        const std::size_t slash = tok.find('/');
        try {
            if (slash == std::string::npos) {
                num = std::stoll(tok);
            } else {
                num = std::stoll(tok.substr(0, slash));
                den = std::stoll(tok.substr(slash + 1));
            }
        } catch (const std::exception&) {
            bad_lengths("cannot parse '" + tok + "'");
        }
        if (den <= 0) bad_lengths("denominator must be positive in '" + tok + "'");
        if (num <= 0) bad_lengths("lengths must be positive, got '" + tok + "'");
        lv.lengths.emplace_back(num, den);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (lv.lengths.size() < 3) bad_lengths("need at least three sides");
    return lv;
}

bool is_short(const std::vector<int>& subset, const LengthVector& lv) {
    Rational sum(0);
    for (int i : subset) sum += lv.at_element(i);
    return sum + sum < lv.total();
}

namespace {

// Integer side lengths after clearing denominators.
std::vector<BigInt> scaled_integer_lengths(const LengthVector& lv) {
    long long lcm = 1;
    for (const auto& l : lv.lengths) lcm = std::lcm(lcm, l.denominator());
    std::vector<BigInt> out;
    out.reserve(lv.lengths.size());
    for (const auto& l : lv.lengths)
        out.push_back(BigInt(l.numerator()) * (lcm / l.denominator()));
    return out;
}

} // namespace

std::optional<std::vector<int>> tight_subset(const LengthVector& lv) {
    const auto scaled = scaled_integer_lengths(lv);
    const std::size_t count = scaled.size();
    BigInt total = 0;
    for (const auto& s : scaled) total += s;
    if (total % 2 != 0) return std::nullopt;
    const BigInt half = total / 2;

    if (count <= 20) {
        for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
            BigInt sum = 0;
            for (std::size_t i = 0; i < count; ++i)
                if ((mask >> i) & 1u) sum += scaled[i];
            if (sum == half) {
                std::vector<int> witness;
                for (std::size_t i = 0; i < count; ++i)
                    if ((mask >> i) & 1u) witness.push_back(static_cast<int>(i) + 1);
                return witness;
            }
        }
        return std::nullopt;
    }

    // Meet in the middle for long vectors.
    const std::size_t left = count / 2;
    std::map<BigInt, std::uint64_t> left_sums;
    for (std::uint64_t mask = 0; mask < (1ull << left); ++mask) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < left; ++i)
            if ((mask >> i) & 1ull) sum += scaled[i];
        left_sums.emplace(sum, mask);
    }
    const std::size_t right = count - left;
    for (std::uint64_t mask = 0; mask < (1ull << right); ++mask) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < right; ++i)
            if ((mask >> i) & 1ull) sum += scaled[left + i];
        auto it = left_sums.find(half - sum);
        if (it == left_sums.end()) continue;
        if (it->second == 0 && mask == 0) continue;
        std::vector<int> witness;
        for (std::size_t i = 0; i < left; ++i)
            if ((it->second >> i) & 1ull) witness.push_back(static_cast<int>(i) + 1);
        for (std::size_t i = 0; i < right; ++i)
            if ((mask >> i) & 1ull) witness.push_back(static_cast<int>(left + i) + 1);
        return witness;
    }
    return std::nullopt;
}

bool is_generic(const LengthVector& lv) { return !tight_subset(lv).has_value(); }

namespace {

std::string subset_string(const std::vector<int>& subset) {
    std::string out = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(subset[i] - 1); // report edge indices l_0..l_n
    }
    return out + "}";
}

bool all_blocks_short(const CyclicCell& c, const LengthVector& lv) {
    for (const auto& b : c.blocks())
        if (!is_short(b, lv)) return false;
    return true;
}

// Poset of all-short cyclic partitions: dimension d holds the d+3 block
// partitions, facets merge two cyclically adjacent blocks.
FacePoset moduli_poset(const LengthVector& lv, std::vector<std::vector<CyclicCell>>& cells) {
    const int n = lv.n();
    cells.clear();
    for (int parts = 3; parts <= n + 1; ++parts) {
        std::vector<CyclicCell> level;
        for (auto& c : cyclic_partitions(n, parts))
            if (all_blocks_short(c, lv)) level.push_back(std::move(c));
        if (level.empty() && parts == 3)
            throw std::invalid_argument("moduli complex: no closed configuration exists");
        cells.push_back(std::move(level));
    }
    while (!cells.empty() && cells.back().empty()) cells.pop_back();

    FacePoset poset;
    poset.cells.resize(cells.size());
    poset.facets.resize(cells.size());
    for (std::size_t d = 0; d < cells.size(); ++d) {
        for (const auto& c : cells[d]) poset.cells[d].push_back(c.str());
        poset.facets[d].resize(cells[d].size());
        if (d == 0) continue;
        for (std::size_t i = 0; i < cells[d].size(); ++i) {
            const CyclicCell& c = cells[d][i];
            std::vector<std::int64_t> facets;
            for (int pos = 0; pos < c.parts(); ++pos) {
                const CyclicCell merged = merge_adjacent(c, pos);
                if (!all_blocks_short(merged, lv)) continue;
                const auto& lower = cells[d - 1];
                auto it = std::lower_bound(lower.begin(), lower.end(), merged);
                if (it == lower.end() || *it != merged) continue;
                facets.push_back(it - lower.begin());
            }
            std::sort(facets.begin(), facets.end());
            facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
            poset.facets[d][i] = std::move(facets);
        }
    }
    return poset;
}

} // namespace

CellComplex build_moduli_complex(const LengthVector& lv) {
    if (auto tight = tight_subset(lv))
        throw std::invalid_argument("length vector is not generic: subset " +
                                    subset_string(*tight) + " has half the perimeter");
    CellComplex out;
    out.n = lv.n();
    const FacePoset poset = moduli_poset(lv, out.cells);
    out.chain = solve_incidence_signs(poset);
    return out;
}

CellComplex build_reduced_moduli(const LengthVector& lv) {
    const CellComplex full = build_moduli_complex(lv);

    CellComplex out;
    out.n = full.n;
    out.cells.resize(full.cells.size());
    FacePoset poset;
    poset.cells.resize(full.cells.size());
    poset.facets.resize(full.cells.size());
    for (std::size_t d = 0; d < full.cells.size(); ++d) {
        for (const auto& c : full.cells[d]) {
            const CyclicCell mirror = reflect(c);
            if (mirror == c)
                throw std::runtime_error("reduced moduli: reflection fixes cell " + c.str());
            if (is_ascending(c)) out.cells[d].push_back(c);
        }
        if (out.cells[d].size() * 2 != full.cells[d].size())
            throw std::runtime_error("reduced moduli: ascending cells are not half of dimension " +
                                     std::to_string(d));
        for (const auto& c : out.cells[d]) poset.cells[d].push_back(c.str());
        poset.facets[d].resize(out.cells[d].size());
        if (d == 0) continue;
        for (std::size_t i = 0; i < out.cells[d].size(); ++i) {
            const std::int64_t full_idx = full.index_of(static_cast<int>(d), out.cells[d][i]);
            std::vector<std::int64_t> facets;
            for (std::int64_t f : full.chain.facets(static_cast<int>(d), full_idx)) {
                const CyclicCell& tau = full.cell(static_cast<int>(d) - 1, f);
                const CyclicCell rep = is_ascending(tau) ? tau : reflect(tau);
                const auto& lower = out.cells[d - 1];
                auto it = std::lower_bound(lower.begin(), lower.end(), rep);
                facets.push_back(it - lower.begin());
            }
            std::sort(facets.begin(), facets.end());
            if (std::adjacent_find(facets.begin(), facets.end()) != facets.end())
                throw std::runtime_error(
                    "reduced moduli: two facets of " + out.cells[d][i].str() +
                    " collapse to one orbit; the quotient is not a regular complex");
            poset.facets[d][i] = std::move(facets);
        }
    }
    out.chain = solve_incidence_signs(poset);
    return out;
}

} // namespace cyclo
