#pragma once

#include "bsnake/paths.hpp"
#include "bsnake/sl2.hpp"

#include <functional>
#include <optional>
#include <string>

namespace bsnake {

struct not_extended_snake : std::runtime_error {
    not_extended_snake(SpectralPoint a_, SpectralPoint b_)
        : std::runtime_error("not an extended snake: (" + std::to_string(a_.node) + "," +
                             std::to_string(a_.level) + ")->(" + std::to_string(b_.node) +
                             "," + std::to_string(b_.level) + ")"),
          a(a_), b(b_) {}
    SpectralPoint a, b;
};

enum class Position { None, ExtendedOnly, Snake, MinimalSnake };

struct PositionClass {
    Position kind = Position::None;
    std::optional<int> shift; // present for Snake / MinimalSnake
};

// Classification of b relative to a (both in X).
PositionClass position_class(const Algebra& alg, SpectralPoint a, SpectralPoint b);

bool is_extended_snake(const Algebra& alg, const std::vector<SpectralPoint>& seq);
bool is_snake(const Algebra& alg, const std::vector<SpectralPoint>& seq);

// The ordered support sequence of a dominant monomial on X, with repetitions
// by exponent; sorted by level, then node.
std::vector<SpectralPoint> x_sequence(const Algebra& alg, const Monomial& m);

// Enumerate all non-overlapping tuples over the owners' path families; fn
// receives the chosen path index per position.
void for_each_tuple(const Algebra& alg, const std::vector<SpectralPoint>& owners,
                    const std::function<void(const std::vector<int>&)>& fn);

// Streaming variant handing out the product of path monomials per tuple,
// built incrementally along the search tree.
void for_each_tuple_monomial(const Algebra& alg, const std::vector<SpectralPoint>& owners,
                             const std::function<void(const Monomial&)>& fn);

// Sum of products of path monomials over all non-overlapping tuples.
QCharacter qchar_tuples_serial(const Algebra& alg, const std::vector<SpectralPoint>& owners);
QCharacter qchar_tuples(const Algebra& alg, const std::vector<SpectralPoint>& owners);

// q-character of the module with highest weight m (requires an extended
// snake support; throws not_extended_snake otherwise).
QCharacter snake_qchar(const Algebra& alg, const Monomial& m);
QCharacter snake_qchar_serial(const Algebra& alg, const Monomial& m);

bool is_special(const QCharacter& chi);
bool is_antispecial(const QCharacter& chi);
bool is_thin_char(const QCharacter& chi);

// Maximal factorization of an extended snake into tensor factors; a cut
// after position s is valid iff consecutive levels satisfy the splitting
// bound and congruence in either parity class.
bool splits_after(const Algebra& alg, SpectralPoint a, SpectralPoint b);
std::vector<std::vector<SpectralPoint>> prime_split(const Algebra& alg,
                                                    const std::vector<SpectralPoint>& seq);

// Canonical representative of m modulo the node-i lattice of A_{i,b} with
// lmin+r_i <= b <= lmax-r_i; equal keys = same class within that window.
Monomial coset_key(const Algebra& alg, const Monomial& m, int node, int lmin, int lmax);

struct VerifyResult {
    bool pass = true;
    int condition = 0;  // violated condition 1, 2 or 3
    std::string detail; // witness description
};

// Checks the three sufficient conditions for a candidate monomial set M to
// be the q-character of a thin special module with highest weight m_plus:
// (1) the only dominant member is m_plus; (2) a single lowering out of M
// cannot be undone by a different raising inside M; (3) every node-i class
// restricts to the character of a thin sl2 module.
VerifyResult verify_thin_criteria(const Algebra& alg, const Monomial& m_plus,
                                  const std::vector<Monomial>& candidates);

// Tame iff the support sequence is an extended snake.
bool is_tame_class(const Algebra& alg, const Monomial& m);

} // namespace bsnake
