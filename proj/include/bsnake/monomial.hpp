#pragma once

#include "bsnake/lattice.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bsnake {

struct parse_error : std::runtime_error {
    parse_error(std::string msg, std::size_t pos_)
        : std::runtime_error(std::move(msg)), pos(pos_) {}
    std::size_t pos;
};

// One factor Y_{node,level}^exp of a monomial; exp is never zero.
struct YFactor {
    int node = 0;
    int level = 0;
    int exp = 0;
    friend bool operator==(const YFactor&, const YFactor&) = default;
};

// Sparse Laurent monomial in the variables Y_{i,k}.  Factors are kept in
// canonical order (level, node); the empty product is the identity.
class Monomial {
public:
    Monomial() = default;
    static Monomial y(int node, int level, int exp = 1);

    bool is_one() const { return factors_.empty(); }
    const std::vector<YFactor>& factors() const { return factors_; }

    // exponent of Y_{node,level} (the evaluation u_{node,level})
    int u(int node, int level) const;

    Monomial& operator*=(const Monomial& o);
    friend Monomial operator*(Monomial a, const Monomial& b) { a *= b; return a; }
    Monomial inv() const;
    Monomial pow(int e) const;

    bool dominant() const;
    bool antidominant() const;
    bool node_dominant(int j) const;

    // restriction to a set of nodes (all other variables sent to 1)
    Monomial beta(const std::vector<int>& nodes) const;
    Monomial beta(int node) const;

    int min_level() const; // over the support; 0 when empty
    int max_level() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // canonical order: factor lists compared entrywise by (level, node, exp)
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    std::size_t hash() const;
    std::string str() const;
    static Monomial parse(std::string_view text);

private:
    std::vector<YFactor> factors_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// The monomial A_{i,k} (type-B specialization; absent neighbours contribute 1).
// Defined for any integer k; the natural domain is (i,k) in W.
Monomial a_var(const Algebra& alg, int i, int k);

// Weight in fundamental-weight coordinates (length = rank).
using Weight = std::vector<int>;
Weight weight(const Algebra& alg, const Monomial& m);
Weight simple_root(const Algebra& alg, int i); // column i of the Cartan matrix

// Finite multiset of monomials with positive multiplicities.
class QCharacter {
public:
    QCharacter() = default;
    void add(const Monomial& m, long long mult = 1);
    long long mult(const Monomial& m) const;
    bool contains(const Monomial& m) const { return mult(m) > 0; }
    std::size_t term_count() const { return terms_.size(); }
    long long dimension() const;

    const std::unordered_map<Monomial, long long, MonomialHash>& terms() const { return terms_; }
    std::vector<std::pair<Monomial, long long>> sorted_terms() const;

    QCharacter operator*(const QCharacter& o) const; // multiset convolution
    bool operator==(const QCharacter& o) const { return terms_ == o.terms_; }

    std::string to_json() const;
    static QCharacter from_json(std::string_view text);

private:
    std::unordered_map<Monomial, long long, MonomialHash> terms_;
};

// Result of writing m = base * prod A_{j,l}^{-c_{j,l}} by exact elimination.
// The A-exponent vectors are triangular with respect to the top variable of
// each A_{j,l}, so the coefficients are forced; in_lattice is false when no
// integer solution exists over the support window of base and m.
struct AFactorization {
    bool in_lattice = false;
    bool all_nonnegative = false; // every c_{j,l} >= 0, i.e. m <= base
    bool support_in_w = false;    // every used (j,l) lies in W
    std::vector<std::pair<SpectralPoint, int>> factors; // (point, c)
};
AFactorization a_minus_factorization(const Algebra& alg, const Monomial& base,
                                     const Monomial& m);

} // namespace bsnake
