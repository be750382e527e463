#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclo/partition.hpp"

namespace cyclo {

/// Vertices of CP_{n+1} are all-singleton cyclic partitions, kept as
/// element sequences of length n+1 in canonical rotation (n+1 last).

/// Rotate a permutation of {1,...,L} so that L comes last.
std::vector<int> canonical_vertex(std::vector<int> seq);

/// The involution r on vertices: reverse everything before the final n+1.
std::vector<int> reflect_vertex(std::vector<int> seq);

/// Apply w elementwise (w[x-1] = image of x) and renormalize.
std::vector<int> relabel_vertex(const std::vector<int>& seq, const std::vector<int>& w);

/// If u and v differ by one transposition of cyclically adjacent entries,
/// the swapped element pair; nullopt otherwise. Both inputs canonical.
std::optional<std::pair<int, int>> adjacent_swap_pair(const std::vector<int>& u,
                                                      const std::vector<int>& v);

/// Ordered neighbors of vertex v inside cell c: scan cyclically adjacent
/// position pairs left to right (wrap pair last) and swap each pair whose
/// two entries share a block of c. Yields dim(c) canonical sequences.
std::vector<std::vector<int>> vertex_neighbors_in(const CyclicCell& c, const std::vector<int>& v);

/// Sign of a permutation given as images g[x-1] of x = 1..L.
int permutation_sign(const std::vector<int>& g);

/// Position coordinates of a vertex relative to a cell: entry x-1 holds the
/// 1-based position of x within its block's order in `u`. The affine model
/// of a cell (a product of permutohedra) lives in these coordinates.
std::vector<int> vertex_coordinates(const CyclicCell& c, const std::vector<int>& u);

/// Sign of the determinant of a square integer matrix (columns), exact.
int determinant_sign(std::vector<std::vector<long long>> columns);

/// The permutation g with g(from[p]) = to[p] for every position p.
std::vector<int> mapping_permutation(const std::vector<int>& from, const std::vector<int>& to);

} // namespace cyclo
