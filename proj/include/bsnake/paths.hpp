#pragma once

#include "bsnake/monomial.hpp"

#include <unordered_map>
#include <vector>

namespace bsnake {

/*
  The path model.  Each lattice point (i,k) carries a finite set of lattice
  paths drawn in the strip 0 <= x <= 4N-2.  A path for a spin point (N,k) has
  N+1 points: it starts at (0, k+2N-1) when k = 3 mod 4 (at (4N-2, k+2N-1)
  when k = 1 mod 4), moves by (+-2,+-2) steps and ends on the spin column
  x = 2N-1 with a final step of height 1+eps.  A path for (i,k), i < N, is a
  pair of spin-point paths at levels k -+ (2N-2i-1) glued along the spin
  column, the first half ending strictly above the second.

  Corners are the interior local extrema of the y-coordinate, read through
  the inverse plane embedding, plus the spin-column clauses that detect a
  single visit at height l+-eps.  The monomial of a path is the product of
  Y over upper corners times Y^{-1} over lower corners; it determines the
  path uniquely within its family.
*/

struct Path {
    SpectralPoint owner;
    std::vector<PlanePoint> points; // for i < N: first half then reversed second half
    friend bool operator==(const Path&, const Path&) = default;
};

struct Corners {
    std::vector<SpectralPoint> upper;
    std::vector<SpectralPoint> lower;
};

// All paths of one owner, with derived data. Column tables hold scaled
// y-values per column (two entries possible on the spin column).
struct PathSet {
    SpectralPoint owner;
    std::vector<Path> paths;
    std::vector<Corners> corners;
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, int, MonomialHash> index_by_monomial;
    int highest = -1; // index of the path with no lower corners
    int lowest = -1;  // index of the path with no upper corners
    std::vector<std::vector<int>> col_min; // [path][x] scaled y, INT_MAX if absent
    std::vector<std::vector<int>> col_max; // [path][x] scaled y, INT_MIN if absent
};

std::vector<Path> enum_paths(const Algebra& alg, SpectralPoint owner);
Corners corners(const Algebra& alg, const Path& p);
Monomial path_monomial(const Algebra& alg, const Path& p);

// Shared immutable cache of PathSet per owner (thread safe).
const PathSet& path_set(const Algebra& alg, SpectralPoint owner);

Path highest_path(const Algebra& alg, SpectralPoint owner);
Path lowest_path(const Algebra& alg, SpectralPoint owner);

// Lowering move at (j,l) in W: defined when (j,l-r_j) is an upper corner and
// (j,l+r_j) is not; the result is the unique path of the same owner whose
// monomial is m(p) * A_{j,l}^{-1}.
bool can_lower(const Algebra& alg, const Path& p, SpectralPoint at);
Path lower(const Algebra& alg, const Path& p, SpectralPoint at);
bool can_raise(const Algebra& alg, const Path& p, SpectralPoint at);
Path raise(const Algebra& alg, const Path& p, SpectralPoint at);

// p strictly above p': on every shared column all y's of p are smaller.
bool strictly_above(const Algebra& alg, const Path& p, const Path& q);
bool non_overlapping(const Algebra& alg, const std::vector<Path>& tuple);

// The letter-set description of a path over the alphabet 1..N and bars.
// For a spin owner only R/Rbar are meaningful; for i < N the four sets are
// pairwise complementary: S = {r | bar r not in Rbar}, Sbar = {r | r not in R}.
struct LetterSets {
    std::vector<int> R, Rbar, S, Sbar; // ascending node numbers; bars implicit
};
LetterSets letter_sets(const Algebra& alg, const Path& p);

// Head/tail restriction of an ordered letter set: head drops the k smallest
// elements (in the caller's alphabet order), tail drops the k largest.
enum class RestrictSide { head, tail };
std::vector<int> set_restrict(const std::vector<int>& ordered, int k, RestrictSide side);

std::string path_to_json(const Path& p);
Path path_from_json(std::string_view text);

} // namespace bsnake
