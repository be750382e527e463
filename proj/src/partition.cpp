#include "cyclo/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace cyclo {

namespace {

[[noreturn]] void bad_partition(const std::string& what) {
    throw std::invalid_argument("malformed partition: " + what);
}

void validate_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 1) bad_partition("n must be positive");
    const int ground = n + 1;
    std::vector<char> seen(static_cast<std::size_t>(ground) + 1, 0);
    for (const auto& b : blocks) {
        if (b.empty()) bad_partition("empty block");
        for (int x : b) {
            if (x < 1 || x > ground)
                bad_partition("element " + std::to_string(x) + " outside {1,...," +
                              std::to_string(ground) + "}");
            if (seen[static_cast<std::size_t>(x)])
                bad_partition("element " + std::to_string(x) + " appears twice");
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }
    for (int x = 1; x <= ground; ++x)
        if (!seen[static_cast<std::size_t>(x)])
            bad_partition("element " + std::to_string(x) + " missing");
}

} // namespace

CyclicCell::CyclicCell(int n, std::vector<std::vector<int>> blocks) : n_(n) {
    validate_blocks(n, blocks);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    const int ground = n + 1;
    std::size_t pivot = blocks.size();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (std::binary_search(blocks[i].begin(), blocks[i].end(), ground)) {
            pivot = i;
            break;
        }
    }
    // rotate so the block containing n+1 comes last
    std::rotate(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(pivot) + 1,
                blocks.end());
    blocks_ = std::move(blocks);
}

int CyclicCell::block_of(int element) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), element))
            return static_cast<int>(i);
    throw std::invalid_argument("element " + std::to_string(element) + " not in cell");
}

std::string CyclicCell::str() const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += '|';
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(blocks_[i][j]);
        }
    }
    return out;
}

CyclicCell normalize_cyclic(const OrderedPartition& p) {
    return CyclicCell(p.n, p.blocks);
}

CyclicCell parse_cell(std::string_view text, bool normalize) {
    std::vector<std::vector<int>> blocks;
    std::size_t pos = 0;
    int max_elem = 0;
    while (pos <= text.size()) {
        std::size_t bar = text.find('|', pos);
        std::string_view blk = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos
                                                                              : bar - pos);
        std::vector<int> elems;
        std::size_t p2 = 0;
        while (p2 <= blk.size()) {
            std::size_t comma = blk.find(',', p2);
            std::string_view tok =
                blk.substr(p2, comma == std::string_view::npos ? std::string_view::npos : comma - p2);
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw std::invalid_argument("cell syntax error near '" + std::string(tok) + "'");
            elems.push_back(value);
            max_elem = std::max(max_elem, value);
            if (comma == std::string_view::npos) break;
            p2 = comma + 1;
        }
        blocks.push_back(std::move(elems));
        if (bar == std::string_view::npos) break;
        pos = bar + 1;
    }
    if (max_elem < 2) throw std::invalid_argument("cell must contain at least elements 1 and 2");
    CyclicCell cell(max_elem - 1, blocks);
    if (!normalize && cell.blocks() != blocks)
        throw std::invalid_argument("non-canonical cell '" + std::string(text) +
                                    "' (canonical form is '" + cell.str() + "')");
    return cell;
}

std::vector<CyclicCell> codim1_faces(const CyclicCell& c) {
    std::vector<CyclicCell> out;
    const auto& blocks = c.blocks();
    for (std::size_t p = 0; p < blocks.size(); ++p) {
        const auto& blk = blocks[p];
        const std::size_t r = blk.size();
        if (r < 2) continue;
        for (std::uint32_t mask = 1; mask + 1 < (1u << r); ++mask) {
            std::vector<int> j1, j2;
            for (std::size_t t = 0; t < r; ++t)
                ((mask >> t) & 1u ? j1 : j2).push_back(blk[t]);
            std::vector<std::vector<int>> nb;
            nb.reserve(blocks.size() + 1);
            for (std::size_t q = 0; q < blocks.size(); ++q) {
                if (q == p) {
                    nb.push_back(j1);
                    nb.push_back(j2);
                } else {
                    nb.push_back(blocks[q]);
                }
            }
            out.emplace_back(c.n(), std::move(nb));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_refinement(const CyclicCell& fine, const CyclicCell& coarse) {
    if (fine.n() != coarse.n())
        throw std::invalid_argument("is_refinement: mismatched ground sets");
    const int m = fine.parts();
    const int k = coarse.parts();
    if (m < k) return false;
    if (m == k) return fine == coarse;
    // A cyclic refinement is a linear refinement of some rotation of `fine`
    // onto the canonical linear order of `coarse`.
    std::vector<char> member(static_cast<std::size_t>(fine.ground_size()) + 1, 0);
    for (int start = 0; start < m; ++start) {
        int idx = start;
        bool ok = true;
        for (int b = 0; b < k && ok; ++b) {
            const auto& target = coarse.block(b);
            for (int x : target) member[static_cast<std::size_t>(x)] = 1;
            std::size_t covered = 0;
            while (covered < target.size()) {
                const auto& fb = fine.block(idx % m);
                bool inside = true;
                for (int x : fb)
                    if (!member[static_cast<std::size_t>(x)]) { inside = false; break; }
                if (!inside || idx - start >= m) { ok = false; break; }
                covered += fb.size();
                ++idx;
            }
            for (int x : target) member[static_cast<std::size_t>(x)] = 0;
        }
        if (ok && idx - start == m) return true;
    }
    return false;
}

CyclicCell reflect(const CyclicCell& c) {
    std::vector<std::vector<int>> blocks(c.blocks());
    std::reverse(blocks.begin(), blocks.end() - 1);
    return CyclicCell(c.n(), std::move(blocks));
}

CyclicCell merge_adjacent(const CyclicCell& c, int pos) {
    const int m = c.parts();
    if (m < 2) throw std::invalid_argument("merge_adjacent: need at least two blocks");
    pos = ((pos % m) + m) % m;
    const int next = (pos + 1) % m;
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(m) - 1);
    for (int q = 0; q < m; ++q) {
        if (q == next) continue;
        std::vector<int> blk = c.block(q);
        if (q == pos) {
            const auto& other = c.block(next);
            blk.insert(blk.end(), other.begin(), other.end());
        }
        blocks.push_back(std::move(blk));
    }
    return CyclicCell(c.n(), std::move(blocks));
}

CyclicCell relabel(const CyclicCell& c, const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != c.ground_size())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<std::vector<int>> blocks(c.blocks());
    for (auto& b : blocks)
        for (auto& x : b) x = w[static_cast<std::size_t>(x) - 1];
    return CyclicCell(c.n(), std::move(blocks));
}

ClassPair class_of(const CyclicCell& c) {
    if (c.parts() < 3)
        throw std::invalid_argument("class_of: cell has fewer than 3 blocks");
    const int non_n = c.parts() - 1;
    int j = 0, l = -1;
    for (int b = 0; b < non_n; ++b)
        if (c.block(b).back() > j) { j = c.block(b).back(); l = b; }
    int i = 0, m = -1;
    for (int b = 0; b < non_n; ++b) {
        if (b == l) continue;
        if (c.block(b).back() > i) { i = c.block(b).back(); m = b; }
    }
    return m <= l ? ClassPair{i, j} : ClassPair{j, i};
}

bool is_ascending(const CyclicCell& c) {
    const ClassPair cl = class_of(c);
    return cl.first < cl.second;
}

namespace {

// All ordered set partitions of `elems` (sorted ascending) into exactly q
// nonempty blocks; elements are placed in increasing order, so every block
// comes out sorted.
void ordered_set_partitions(const std::vector<int>& elems, std::size_t idx, int q,
                            std::vector<std::vector<int>>& acc,
                            const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    const std::size_t remaining = elems.size() - idx;
    const std::size_t open = static_cast<std::size_t>(q) - acc.size();
    if (remaining < open) return;
    if (idx == elems.size()) {
        if (acc.size() == static_cast<std::size_t>(q)) emit(acc);
        return;
    }
    const std::size_t existing = acc.size(); // recursion may reallocate acc
    for (std::size_t b = 0; b < existing; ++b) {
        acc[b].push_back(elems[idx]);
        ordered_set_partitions(elems, idx + 1, q, acc, emit);
        acc[b].pop_back();
    }
    if (existing < static_cast<std::size_t>(q)) {
        // a fresh block can sit at any position of the sequence
        for (std::size_t at = 0; at <= existing; ++at) {
            acc.insert(acc.begin() + static_cast<std::ptrdiff_t>(at), {elems[idx]});
            ordered_set_partitions(elems, idx + 1, q, acc, emit);
            acc.erase(acc.begin() + static_cast<std::ptrdiff_t>(at));
        }
    }
}

} // namespace

std::vector<CyclicCell> cyclic_partitions(int n, int parts) {
    if (n < 1 || parts < 1 || parts > n + 1) return {};
    std::vector<CyclicCell> out;
    const int ground = n + 1;
    // Choose the rest of the n+1-set, then order the remaining elements
    // into parts-1 blocks.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> n_set{ground};
        std::vector<int> rest;
        for (int x = 1; x <= n; ++x)
            ((mask >> (x - 1)) & 1u ? n_set : rest).push_back(x);
        if (static_cast<int>(rest.size()) < parts - 1) continue;
        if (parts == 1) {
            if (rest.empty()) out.emplace_back(n, std::vector<std::vector<int>>{n_set});
            continue;
        }
        std::sort(n_set.begin(), n_set.end());
        std::vector<std::vector<int>> acc;
        ordered_set_partitions(rest, 0, parts - 1, acc,
                               [&](const std::vector<std::vector<int>>& blocks) {
                                   std::vector<std::vector<int>> cell(blocks);
                                   cell.push_back(n_set);
                                   out.emplace_back(n, std::move(cell));
                               });
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cyclo

std::size_t std::hash<cyclo::CyclicCell>::operator()(const cyclo::CyclicCell& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.n());
    for (const auto& b : c.blocks()) {
        h = h * 1000003u + 0x9e3779b9u;
        for (int x : b) h = h * 31u + static_cast<std::size_t>(x);
    }
    return h;
}
