#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "cyclo/cyclopermutohedron.hpp"

namespace cyclo {

using Rational = boost::rational<long long>;

/// Side lengths l_0,...,l_n of an (n+1)-gon, exact rationals, all positive.
struct LengthVector {
    std::vector<Rational> lengths;

    int n() const { return static_cast<int>(lengths.size()) - 1; }
    Rational total() const;
    /// Length attached to ground element i of {1,...,n+1}: l_{i-1}.
    const Rational& at_element(int i) const {
        return lengths[static_cast<std::size_t>(i) - 1];
    }
};

/// Parse "1,1,1,3/2,1" as exact rationals. Throws on zero or negative
/// entries or malformed input.
LengthVector parse_lengths(std::string_view text);

/// Sum over I of l_i strictly below the sum over the complement; I holds
/// ground elements of {1,...,n+1}.
bool is_short(const std::vector<int>& subset, const LengthVector& lv);

/// Some subset whose length equals half the perimeter, when one exists
/// (meet-in-the-middle beyond 20 edges); nullopt for generic vectors.
std::optional<std::vector<int>> tight_subset(const LengthVector& lv);

bool is_generic(const LengthVector& lv);

/// Panina's CW model of the polygon moduli space M_l: k-cells are cyclic
/// partitions of {1,...,n+1} into k+3 blocks with every block short; facets
/// merge two cyclically adjacent blocks; signs from the incidence solver.
/// Throws std::invalid_argument carrying the tight subset when lv is not
/// generic.
CellComplex build_moduli_complex(const LengthVector& lv);

/// The reflection quotient model of M_l / Z2; cells are ascending
/// representatives and signs again come from the solver on the quotient
/// poset. Refuses (std::runtime_error) if the action fails to be free or a
/// cell has two facets in one orbit.
CellComplex build_reduced_moduli(const LengthVector& lv);

} // namespace cyclo
