#include "bsnake/paths.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace bsnake;

namespace {
bool has_point(const std::vector<SpectralPoint>& v, SpectralPoint p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}
} // namespace

TEST_CASE("path counts") {
    Algebra b3 = Algebra::type_b(3);
    CHECK(enum_paths(b3, {3, 1}).size() == 8);
    CHECK(enum_paths(b3, {3, 3}).size() == 8);
    Algebra b2 = Algebra::type_b(2);
    CHECK(enum_paths(b2, {1, 0}).size() == 5);
    for (int n = 2; n <= 5; ++n) {
        Algebra alg = Algebra::type_b(n);
        CHECK(enum_paths(alg, {n, 1}).size() == (std::size_t(1) << n));
        CHECK(enum_paths(alg, {n, 3}).size() == (std::size_t(1) << n));
    }
    CHECK_THROWS_AS(enum_paths(b3, {1, 1}), std::domain_error);
    CHECK_THROWS_AS(enum_paths(Algebra::sl2(), {1, 0}), std::domain_error);
}

TEST_CASE("highest and lowest paths") {
    for (int n = 2; n <= 4; ++n) {
        Algebra alg = Algebra::type_b(n);
        for (int i = 1; i <= n; ++i) {
            int k = (i == n) ? 1 : 0;
            SpectralPoint owner{i, k};
            Path hi = highest_path(alg, owner), lo = lowest_path(alg, owner);
            CHECK(corners(alg, hi).lower.empty());
            CHECK(corners(alg, lo).upper.empty());
            CHECK(path_monomial(alg, hi) == Monomial::y(i, k));
            CHECK(path_monomial(alg, lo).antidominant());
        }
    }
    // the highest path of (3,2) in B5 starts the family drawn around column 6
    Algebra b5 = Algebra::type_b(5);
    Path hi = highest_path(b5, {3, 2});
    CHECK(path_monomial(b5, hi) == Monomial::y(3, 2));
    CHECK(has_point(corners(b5, hi).upper, {3, 2}));
    CHECK(b5.iota({3, 2}).x == 6);
}

TEST_CASE("corner data of known paths") {
    Algebra b3 = Algebra::type_b(3);
    const auto& ps = path_set(b3, {3, 1});
    auto it = ps.index_by_monomial.find(Monomial::y(1, 4) * Monomial::y(3, 7, -1));
    REQUIRE(it != ps.index_by_monomial.end());
    auto c = ps.corners[it->second];
    REQUIRE(c.upper.size() == 1);
    REQUIRE(c.lower.size() == 1);
    CHECK(c.upper[0] == SpectralPoint{1, 4});
    CHECK(c.lower[0] == SpectralPoint{3, 7});
}

TEST_CASE("path monomials are injective and detect extremes") {
    for (int n = 2; n <= 5; ++n) {
        Algebra alg = Algebra::type_b(n);
        for (int i = 1; i <= n; ++i) {
            for (int k : {i == n ? 1 : 0, i == n ? 3 : 2}) {
                const auto& ps = path_set(alg, {i, k});
                CHECK(ps.index_by_monomial.size() == ps.paths.size());
                for (std::size_t a = 0; a < ps.paths.size(); ++a) {
                    CHECK(ps.monomials[a].dominant() == (a == (std::size_t)ps.highest));
                    CHECK(ps.monomials[a].antidominant() == (a == (std::size_t)ps.lowest));
                }
            }
        }
    }
}

TEST_CASE("lowering moves") {
    Algebra b2 = Algebra::type_b(2);
    Path p = highest_path(b2, {1, 0});
    REQUIRE(can_lower(b2, p, {1, 2}));
    Path q = lower(b2, p, {1, 2});
    CHECK(path_monomial(b2, q) ==
          Monomial::y(1, 4, -1) * Monomial::y(2, 1) * Monomial::y(2, 3));
    // lowering then raising is the identity
    REQUIRE(can_raise(b2, q, {1, 2}));
    CHECK(raise(b2, q, {1, 2}) == p);
    CHECK_FALSE(can_lower(b2, lowest_path(b2, {1, 0}), {1, 2}));
    CHECK_THROWS_AS(lower(b2, lowest_path(b2, {1, 0}), {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS((void)can_lower(b2, p, {1, 1}), std::domain_error);

    // exhaustive: every lowerable point yields the A-shifted monomial
    Algebra b3 = Algebra::type_b(3);
    for (SpectralPoint owner : {SpectralPoint{2, 0}, SpectralPoint{3, 1}}) {
        const auto& ps = path_set(b3, owner);
        for (std::size_t a = 0; a < ps.paths.size(); ++a) {
            for (int j = 1; j <= 3; ++j) {
                for (int l = -10; l <= 14; ++l) {
                    if (!b3.in_w({j, l})) continue;
                    if (!can_lower(b3, ps.paths[a], {j, l})) continue;
                    Path low = lower(b3, ps.paths[a], {j, l});
                    CHECK(path_monomial(b3, low) ==
                          ps.monomials[a] * a_var(b3, j, l).inv());
                    CHECK(can_raise(b3, low, {j, l}));
                    CHECK(raise(b3, low, {j, l}) == ps.paths[a]);
                }
            }
        }
    }
}

TEST_CASE("strict order between paths") {
    Algebra b3 = Algebra::type_b(3);
    const auto& p1 = path_set(b3, {3, 1});
    const auto& p2 = path_set(b3, {3, 3});
    auto by_mono = [&](const PathSet& ps, const Monomial& m) {
        auto it = ps.index_by_monomial.find(m);
        REQUIRE(it != ps.index_by_monomial.end());
        return ps.paths[it->second];
    };
    Path a = by_mono(p1, Monomial::y(1, 4) * Monomial::y(3, 7, -1));
    Path b = by_mono(p2, Monomial::y(3, 9, -1) * Monomial::y(2, 8) * Monomial::y(1, 10, -1));
    CHECK(strictly_above(b3, a, b));
    Path c = by_mono(p1, Monomial::y(1, 8, -1) * Monomial::y(2, 6) * Monomial::y(3, 7, -1));
    Path d = by_mono(p2, Monomial::y(3, 7) * Monomial::y(2, 8, -1) * Monomial::y(1, 6));
    CHECK_FALSE(strictly_above(b3, c, d));
    CHECK_FALSE(strictly_above(b3, a, a));
    CHECK(non_overlapping(b3, {a, b}));
    CHECK_FALSE(non_overlapping(b3, {c, d}));
    CHECK(non_overlapping(b3, {}));
    CHECK(non_overlapping(b3, {a}));
}

TEST_CASE("letter sets") {
    Algebra b5 = Algebra::type_b(5);
    auto ls = letter_sets(b5, highest_path(b5, {3, 2}));
    CHECK(ls.S == std::vector<int>{1, 2, 3});
    CHECK(ls.Sbar.empty());
    CHECK(ls.R == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(ls.Rbar == std::vector<int>{4, 5});

    for (int n = 2; n <= 4; ++n) {
        Algebra alg = Algebra::type_b(n);
        for (const auto& p : enum_paths(alg, {n, 1})) {
            auto l = letter_sets(alg, p);
            CHECK((int)(l.R.size() + l.Rbar.size()) == n);
        }
        for (int i = 1; i < n; ++i) {
            for (const auto& p : enum_paths(alg, {i, 0})) {
                auto l = letter_sets(alg, p);
                CHECK((int)(l.R.size() + l.Rbar.size()) >= 2 * n - i);
                CHECK((int)(l.S.size() + l.Sbar.size()) <= i);
                // complement relations between the four sets
                for (int r = 1; r <= n; ++r) {
                    bool inS = std::count(l.S.begin(), l.S.end(), r);
                    bool inRbar = std::count(l.Rbar.begin(), l.Rbar.end(), r);
                    CHECK(inS != inRbar);
                    bool inSbar = std::count(l.Sbar.begin(), l.Sbar.end(), r);
                    bool inR = std::count(l.R.begin(), l.R.end(), r);
                    CHECK(inSbar != inR);
                }
            }
        }
    }
}

TEST_CASE("ordered set restriction") {
    std::vector<int> b{1, 3, 4};
    CHECK(set_restrict(b, 1, RestrictSide::head) == std::vector<int>{3, 4});
    CHECK(set_restrict(b, 2, RestrictSide::tail) == std::vector<int>{1});
    CHECK(set_restrict({1, 3}, 5, RestrictSide::head).empty());
    CHECK(set_restrict({1, 3}, 0, RestrictSide::tail) == std::vector<int>{1, 3});
}

TEST_CASE("path json roundtrip") {
    Algebra b3 = Algebra::type_b(3);
    for (const auto& p : enum_paths(b3, {2, 0})) {
        CHECK(path_from_json(path_to_json(p)) == p);
    }
}
