#pragma once

#include "bsnake/monomial.hpp"

#include <vector>

namespace bsnake {

// A q-string: the set of exponents {center - step*(length-1), ...,
// center + step*(length-1)} with spacing 2*step.  step = 1 is the plain sl2
// lattice; step = r_i serves restrictions to node i, where q_i = q^{r_i}.
struct QString {
    int center = 0;
    int length = 1;
    int step = 1;
    int lo() const { return center - step * (length - 1); }
    int hi() const { return center + step * (length - 1); }
    friend auto operator<=>(const QString&, const QString&) = default;
};

bool contains(const QString& a, const QString& b);
bool disjoint(const QString& a, const QString& b);
// general position: one contains the other, or the union is not a q-string
bool general_position(const QString& a, const QString& b);

// The unique multiset of q-strings in pairwise general position whose
// product of string monomials is m.  m must be dominant and supported on a
// single node; the result is sorted canonically.
std::vector<QString> qstring_decompose(const Monomial& m, int step);

// String monomial Y_{node,lo} Y_{node,lo+2s} ... Y_{node,hi}.
Monomial qstring_monomial(const QString& s, int node = 1);

// The length+1 terms of the evaluation character of a string, all with
// multiplicity one: m_b^{(k)} and its successive single-step lowerings.
QCharacter eval_char(const QString& s, int node = 1);

// Character of the full tensor product over the decomposition of m.
QCharacter sl2_char(const Monomial& m, int step);

// Thin iff the decomposed strings are pairwise disjoint.
bool is_thin_sl2(const Monomial& m, int step);

// Whether m * A^{-1} at center b+step stays inside the thin module through m.
// Requires m to satisfy the thin-membership conditions (|u| <= 1 and no
// adjacent (1, -1) drop); throws otherwise.
bool lowerable_sl2(const Monomial& m, int b, int step);

} // namespace bsnake
