#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/cyclopermutohedron.hpp"
#include "cyclo/discrete_morse.hpp"

namespace cyclo {

/// A QP cell, held by its ascending representative.
struct BiCyclicCell {
    CyclicCell rep;

    ClassPair cls() const { return class_of(rep); } // unordered; rep is ascending
    friend bool operator==(const BiCyclicCell&, const BiCyclicCell&) = default;
    friend auto operator<=>(const BiCyclicCell&, const BiCyclicCell&) = default;
};

/// The ascending member of {c, reflect(c)}.
BiCyclicCell ascending_representative(const CyclicCell& c);

/// True iff a is higher than b: min cl(a) >= min cl(b) and
/// max cl(a) >= max cl(b).
bool higher(const BiCyclicCell& a, const BiCyclicCell& b);

/// sgn(s) = (-1)^{(s-1)/2} for odd s, (-1)^{s/2} for even s; the sign of
/// reversing s elements. Throws on negative input.
int sgn(int s);

/// Sign relating the orientation a cell induces on its QP image to the one
/// induced (through the involution) by its reflection:
/// sgn(|A|-|Iw|+1) * sgn(|Iw|-1) * prod_i sgn(|I_i|) * sgn(|Iw|), with Iw
/// the n+1-set and |A| = dim.
int reflection_sign(const CyclicCell& c);

/// QP_{n+1} = CP_{n+1}/Z2 with incidence by equivariant descent: boundary
/// entries of an ascending representative are the CP entries, corrected by
/// reflection_sign whenever the facet is descending. Checks that the result
/// squares to zero and that every entry is a unit (InternalError otherwise).
CellComplex build_qp(const CellComplex& cp);
CellComplex build_qp(int n, const BuildOptions& options = {});

/// The CP matching restricted to pairs whose lower cell is ascending and
/// whose two cells have equal ordered class, pushed through the quotient.
Matching build_qp_matching(const CellComplex& cp, const Matching& cp_matching,
                           const CellComplex& qp);

/// Critical QP cells (i, I, nabla, N) with nabla < i < I.
struct QpCriticalCell {
    int i = 0;
    std::vector<int> I;
    std::vector<int> nabla; // decreasing singletons
    std::vector<int> n_set;

    CyclicCell cell(int n) const;
};

/// Unmatched cells must all have the (i, I, nabla, N) shape; throws
/// InternalError otherwise. In dimension d there are xi(n, d) of them, one
/// per n+1-set of size at most d+1.
std::vector<QpCriticalCell> classify_critical_qp(const CellComplex& qp, const Matching& m);

/// xi(n, i) = sum of C(n, k) for k <= i.
std::int64_t xi(int n, int i);

/// Free rank of H_i(QP_{n+1}, Z) per the homology theorem.
std::int64_t qp_expected_betti(int n, int i);

/// Number of Z_2 summands of H_i(QP_{n+1}, Z) per the homology theorem.
std::int64_t qp_expected_torsion_count(int n, int i);

/// Checks the dichotomy (0 or 2 gradient paths between adjacent critical
/// cells), that 2-path targets match the admissible target forms, and that
/// a pair with N and J as well as I and J intersecting has no paths.
/// The admissible forms are the theorem's five plus one family it omits:
/// when |I| = 1, a whole subset J of N above I can leave N at once,
/// giving (I, J, i, nabla, N-J); the stated (I,t,i,nabla,N-t) is its
/// |J| = 1 instance. The larger-J pairs carry weight sum 0 on odd Morse
/// maps, so the downstream homology results are unaffected.
MatchReport verify_qp_path_theorem(const CellComplex& qp, const Matching& m,
                                   bool explicit_enumeration = false);

} // namespace cyclo
