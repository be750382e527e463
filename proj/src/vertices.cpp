#include "cyclo/vertices.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclo {

std::vector<int> canonical_vertex(std::vector<int> seq) {
    const int last = static_cast<int>(seq.size());
    auto it = std::find(seq.begin(), seq.end(), last);
    if (it == seq.end()) throw std::invalid_argument("vertex: missing top element");
    std::rotate(seq.begin(), it + 1, seq.end());
    return seq;
}

std::vector<int> reflect_vertex(std::vector<int> seq) {
    seq = canonical_vertex(std::move(seq));
    std::reverse(seq.begin(), seq.end() - 1);
    return seq;
}

std::vector<int> relabel_vertex(const std::vector<int>& seq, const std::vector<int>& w) {
    std::vector<int> out(seq.size());
    for (std::size_t p = 0; p < seq.size(); ++p)
        out[p] = w[static_cast<std::size_t>(seq[p]) - 1];
    return canonical_vertex(std::move(out));
}

std::optional<std::pair<int, int>> adjacent_swap_pair(const std::vector<int>& u,
                                                      const std::vector<int>& v) {
    const std::size_t len = u.size();
    if (v.size() != len || len < 4) return std::nullopt;
    const std::size_t prefix = len - 1;

    std::size_t first = prefix, diffs = 0;
    for (std::size_t p = 0; p < prefix; ++p) {
        if (u[p] != v[p]) {
            if (diffs == 0) first = p;
            ++diffs;
            if (diffs > 2) break;
        }
    }
    if (diffs == 0) return std::nullopt;
    if (diffs == 2 && first + 1 < prefix && u[first] == v[first + 1] &&
        u[first + 1] == v[first]) {
        bool rest_equal = true;
        for (std::size_t p = first + 2; p < prefix; ++p)
            if (u[p] != v[p]) { rest_equal = false; break; }
        if (rest_equal) return std::make_pair(u[first], u[first + 1]);
    }

    // The swap may involve n+1 itself, which shows up as the prefix rotated
    // by one after renormalization.
    auto rotated_right = [&] {
        if (v[0] != u[prefix - 1]) return false;
        for (std::size_t p = 1; p < prefix; ++p)
            if (v[p] != u[p - 1]) return false;
        return true;
    };
    auto rotated_left = [&] {
        if (v[prefix - 1] != u[0]) return false;
        for (std::size_t p = 0; p + 1 < prefix; ++p)
            if (v[p] != u[p + 1]) return false;
        return true;
    };
    if (rotated_right()) return std::make_pair(u[prefix - 1], static_cast<int>(len));
    if (rotated_left()) return std::make_pair(u[0], static_cast<int>(len));
    return std::nullopt;
}

std::vector<std::vector<int>> vertex_neighbors_in(const CyclicCell& c, const std::vector<int>& v) {
    const std::size_t len = v.size();
    if (static_cast<int>(len) != c.ground_size())
        throw std::invalid_argument("vertex length does not match cell ground set");
    std::vector<std::vector<int>> out;
    for (std::size_t p = 0; p < len; ++p) {
        const std::size_t q = (p + 1) % len;
        if (c.block_of(v[p]) != c.block_of(v[q])) continue;
        std::vector<int> swapped(v);
        std::swap(swapped[p], swapped[q]);
        out.push_back(canonical_vertex(std::move(swapped)));
    }
    return out;
}

int permutation_sign(const std::vector<int>& g) {
    std::vector<char> visited(g.size(), 0);
    int sign = 1;
    for (std::size_t start = 0; start < g.size(); ++start) {
        if (visited[start]) continue;
        std::size_t cur = start, length = 0;
        while (!visited[cur]) {
            visited[cur] = 1;
            cur = static_cast<std::size_t>(g[cur]) - 1;
            ++length;
        }
        if (length % 2 == 0) sign = -sign;
    }
    return sign;
}

std::vector<int> mapping_permutation(const std::vector<int>& from, const std::vector<int>& to) {
    if (from.size() != to.size())
        throw std::invalid_argument("mapping_permutation: length mismatch");
    std::vector<int> g(from.size(), 0);
    for (std::size_t p = 0; p < from.size(); ++p)
        g[static_cast<std::size_t>(from[p]) - 1] = to[p];
    return g;
}

std::vector<int> vertex_coordinates(const CyclicCell& c, const std::vector<int>& u) {
    const std::size_t len = u.size();
    std::vector<int> coords(len, 0);
    if (c.parts() == 1) {
        for (std::size_t p = 0; p < len; ++p)
            coords[static_cast<std::size_t>(u[p]) - 1] = static_cast<int>(p) + 1;
        return coords;
    }
    // Each block occupies one cyclic run of u; positions count along the
    // run, which may wrap around the canonical cut.
    for (std::size_t p = 0; p < len; ++p) {
        const std::size_t prev = (p + len - 1) % len;
        if (c.block_of(u[p]) == c.block_of(u[prev])) continue;
        int position = 0;
        std::size_t q = p;
        do {
            coords[static_cast<std::size_t>(u[q]) - 1] = ++position;
            q = (q + 1) % len;
        } while (c.block_of(u[q]) == c.block_of(u[p]));
    }
    return coords;
}

int determinant_sign(std::vector<std::vector<long long>> columns) {
    const std::size_t size = columns.size();
    // fraction-free Bareiss; entries stay exact minors
    long long previous = 1;
    int sign = 1;
    for (std::size_t t = 0; t < size; ++t) {
        std::size_t pivot = t;
        while (pivot < size && columns[pivot][t] == 0) ++pivot;
        if (pivot == size) return 0;
        if (pivot != t) {
            std::swap(columns[pivot], columns[t]);
            sign = -sign;
        }
        for (std::size_t c = t + 1; c < size; ++c) {
            for (std::size_t r = t + 1; r < size; ++r)
                columns[c][r] =
                    (columns[t][t] * columns[c][r] - columns[c][t] * columns[t][r]) / previous;
            columns[c][t] = 0;
        }
        previous = columns[t][t];
    }
    return previous > 0 ? sign : -sign;
}

} // namespace cyclo
