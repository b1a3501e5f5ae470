#pragma once

#include "bsnake/snakes.hpp"

#include <string>
#include <vector>

namespace bsnake {

/*
  Super skew tableaux over the ordered alphabet 1 < 2 < ... < N < 0 <
  bar N < ... < bar 1.  A diagram is a list of contiguous columns (top_j,
  bottom_j), rows growing downwards and both edges non-increasing with the
  column index; adjacent columns may share at most 2N rows.  A filling is a
  tableau when rows are weakly increasing with no (0,0) pair and columns are
  strictly increasing except for runs of 0.
*/

// Letter encoding: v > 0 plain v, v == 0 zero, v < 0 bar(-v).
struct Letter {
    int v = 0;
    int category() const { return v > 0 ? 0 : (v == 0 ? 1 : 2); }
    int key() const { return v; }
    friend bool operator==(const Letter&, const Letter&) = default;
    friend bool operator<(Letter a, Letter b) {
        return std::pair(a.category(), a.key()) < std::pair(b.category(), b.key());
    }
    friend bool operator<=(Letter a, Letter b) { return a < b || a == b; }
    std::string token() const;
    static Letter parse_token(std::string_view t);
};

struct ColumnSpan {
    int top = 0;
    int bottom = 0;
    int length() const { return bottom - top + 1; }
    friend bool operator==(const ColumnSpan&, const ColumnSpan&) = default;
};

struct SkewDiagram {
    std::vector<ColumnSpan> columns; // column j = columns[j-1]
    int column_count() const { return (int)columns.size(); }
    const ColumnSpan& col(int j) const { return columns[j - 1]; }
    bool contains(int row, int j) const {
        return j >= 1 && j <= column_count() && row >= col(j).top && row <= col(j).bottom;
    }
    int box_count() const;
    // rows shared by columns j and j+1 (0 past the last column)
    int overlap(int j) const;
    friend bool operator==(const SkewDiagram&, const SkewDiagram&) = default;
};

struct DiagramVerdict {
    bool ok = true;
    std::string violation;
};

DiagramVerdict validate_diagram(const Algebra& alg, const SkewDiagram& d);
bool is_generic(const Algebra& alg, const SkewDiagram& d);
std::vector<int> nongeneric_columns(const Algebra& alg, const SkewDiagram& d);

struct Tableau {
    SkewDiagram shape;
    std::vector<std::vector<Letter>> fill; // per column, top to bottom
    Letter at(int row, int j) const { return fill[j - 1][row - shape.col(j).top]; }
    friend bool operator==(const Tableau&, const Tableau&) = default;
};

bool is_valid_tableau(const Algebra& alg, const Tableau& t);

// All fillings satisfying the horizontal and vertical rules, in column-major
// lexicographic order of the letters.
std::vector<Tableau> enum_tableaux_serial(const Algebra& alg, const SkewDiagram& d);
std::vector<Tableau> enum_tableaux(const Algebra& alg, const SkewDiagram& d);

// Streaming enumeration; the Tableau reference stays owned by the walker.
void for_each_tableau(const Algebra& alg, const SkewDiagram& d,
                      const std::function<void(const Tableau&)>& fn);

// Streaming enumeration handing out the weight monomial per tableau, built
// incrementally along the search tree.
void for_each_tableau_monomial(const Algebra& alg, const SkewDiagram& d,
                               const std::function<void(const Monomial&)>& fn);

// Contribution of a single box with letter c on the diagonal offset k = 4(j-i).
Monomial box_monomial(const Algebra& alg, Letter c, int k);
Monomial tab_monomial(const Algebra& alg, const Tableau& t);

Tableau dominant_tableau(const Algebra& alg, const SkewDiagram& d);

std::vector<int> special_columns(const Algebra& alg, const SkewDiagram& d);
int varsigma(const Algebra& alg, const SkewDiagram& d, int j);

// Dominant monomial read off the bottom boxes and special columns directly.
Monomial diagram_dominant_monomial(const Algebra& alg, const SkewDiagram& d);

// The path <-> tableau bijection for generic diagrams.  The tuple's owners
// must equal the support sequence of the diagram's dominant monomial.
Tableau tuple_to_tableau(const Algebra& alg, const std::vector<Path>& tuple,
                         const SkewDiagram& d);
std::vector<Path> tableau_to_tuple(const Algebra& alg, const Tableau& t);

// Surgery removing the last non-generic column overlap: keeps columns up to
// j', extends column j' upwards, drops column j'+1 and shifts the rest one
// step up-left.  Loses one column and 2N-1 boxes per step.
SkewDiagram closely_related(const Algebra& alg, const SkewDiagram& d);
SkewDiagram related_generic(const Algebra& alg, const SkewDiagram& d);

// Monomial-preserving bijection Tab(d) -> Tab(closely_related(d)).
Tableau tau(const Algebra& alg, const Tableau& t);

std::string diagram_to_json(const Algebra& alg, const SkewDiagram& d);
std::pair<Algebra, SkewDiagram> diagram_from_json(std::string_view text);

} // namespace bsnake
