#include "bsnake/tableaux.hpp"

#include <algorithm>

#include "doctest.h"

using namespace bsnake;

namespace {
const SkewDiagram nongeneric16{{{-2, 1}, {-2, 1}, {-4, 0}, {-5, -3}}};
const SkewDiagram reduced13{{{-3, 1}, {-5, -1}, {-6, -4}}};

std::vector<Letter> column_letters(const Tableau& t, int j) { return t.fill[j - 1]; }

std::vector<Letter> letters(std::initializer_list<int> vs) {
    std::vector<Letter> out;
    for (int v : vs) out.push_back({v});
    return out;
}
} // namespace

TEST_CASE("letters and tokens") {
    CHECK(Letter{1} < Letter{2});
    CHECK(Letter{2} < Letter{0});
    CHECK(Letter{0} < Letter{-2});
    CHECK(Letter{-2} < Letter{-1});
    CHECK(Letter{-1}.token() == "1b");
    CHECK(Letter{0}.token() == "0");
    CHECK(Letter::parse_token("3") == Letter{3});
    CHECK(Letter::parse_token("2b") == Letter{-2});
    CHECK_THROWS_AS(Letter::parse_token("x"), parse_error);
}

TEST_CASE("diagram validation") {
    Algebra b2 = Algebra::type_b(2);
    CHECK(validate_diagram(b2, nongeneric16).ok);
    CHECK_FALSE(is_generic(b2, nongeneric16));
    CHECK(nongeneric_columns(b2, nongeneric16) == std::vector<int>{1});

    SkewDiagram single{{{1, 1}}};
    CHECK(validate_diagram(b2, single).ok);
    CHECK(is_generic(b2, single));

    // a (2N+1) x 2 rectangle is not super
    SkewDiagram rect{{{1, 5}, {1, 5}}};
    CHECK_FALSE(validate_diagram(b2, rect).ok);

    SkewDiagram upside{{{2, 1}}};
    CHECK_FALSE(validate_diagram(b2, upside).ok);
    SkewDiagram staircase_bad{{{0, 1}, {0, 2}}};
    CHECK_FALSE(validate_diagram(b2, staircase_bad).ok);

    SkewDiagram empty;
    CHECK(validate_diagram(b2, empty).ok);
    CHECK(enum_tableaux_serial(b2, empty).size() == 1);
}

TEST_CASE("tableau enumeration for a single box") {
    Algebra b2 = Algebra::type_b(2);
    SkewDiagram single{{{1, 1}}};
    auto tabs = enum_tableaux_serial(b2, single);
    CHECK(tabs.size() == 5);
    QCharacter chi;
    for (const auto& t : tabs) chi.add(tab_monomial(b2, t));
    CHECK(chi.mult(Monomial::y(1, 0)) == 1);
    CHECK(chi.mult(Monomial::y(1, 4, -1) * Monomial::y(2, 1) * Monomial::y(2, 3)) == 1);
    CHECK(chi.mult(Monomial::y(2, 5, -1) * Monomial::y(2, 1)) == 1);
    CHECK(chi.mult(Monomial::y(2, 3, -1) * Monomial::y(2, 5, -1) * Monomial::y(1, 2)) == 1);
    CHECK(chi.mult(Monomial::y(1, 6, -1)) == 1);
    // the same five monomials through the path model
    CHECK(chi == snake_qchar(b2, Monomial::y(1, 0)));
}

TEST_CASE("box monomials use the stated conventions") {
    Algebra b2 = Algebra::type_b(2);
    CHECK(box_monomial(b2, {1}, 0) == Monomial::y(1, 0));
    CHECK(box_monomial(b2, {0}, 0) == Monomial::y(2, 5, -1) * Monomial::y(2, 1));
    Algebra b3 = Algebra::type_b(3);
    // the vector character has 2N+1 letter contributions that telescope
    QCharacter sum;
    for (int v : {1, 2, 3, 0, -3, -2, -1}) sum.add(box_monomial(b3, {v}, 0));
    CHECK(sum == snake_qchar(b3, Monomial::y(1, 0)));
}

TEST_CASE("dominant tableau of the worked non-generic diagram") {
    Algebra b2 = Algebra::type_b(2);
    auto tp = dominant_tableau(b2, nongeneric16);
    CHECK(column_letters(tp, 1) == letters({1, 2, 0, 0}));
    CHECK(column_letters(tp, 2) == letters({1, 2, -2, -1}));
    CHECK(column_letters(tp, 3) == letters({1, 2, 0, 0, -2}));
    CHECK(column_letters(tp, 4) == letters({1, 2, 0}));
    CHECK(tab_monomial(b2, tp) ==
          Monomial::parse("Y[2,1] Y[1,14] Y[2,27] Y[2,29] Y[2,35]"));

    SkewDiagram shortcol{{{1, 2}}};
    CHECK(column_letters(dominant_tableau(b2, shortcol), 1) == letters({1, 2}));
}

TEST_CASE("special columns and varsigma") {
    Algebra b2 = Algebra::type_b(2);
    CHECK(special_columns(b2, nongeneric16) == std::vector<int>{3, 4});
    CHECK(varsigma(b2, nongeneric16, 1) == 1);
    CHECK(varsigma(b2, nongeneric16, 4) == 5);
    SkewDiagram shallow{{{1, 1}, {1, 1}}};
    CHECK(special_columns(b2, shallow).empty());
}

TEST_CASE("dominant monomial via bottom boxes") {
    Algebra b2 = Algebra::type_b(2);
    Monomial expect = Monomial::parse("Y[2,1] Y[1,14] Y[2,27] Y[2,29] Y[2,35]");
    CHECK(diagram_dominant_monomial(b2, nongeneric16) == expect);
    CHECK(diagram_dominant_monomial(b2, reduced13) == expect);
    SkewDiagram single{{{1, 1}}};
    CHECK(diagram_dominant_monomial(b2, single) == Monomial::y(1, 0));

    // always agrees with the filled dominant tableau
    for (const SkewDiagram& d :
         {nongeneric16, reduced13, SkewDiagram{{{0, 3}, {-1, 2}}}, SkewDiagram{{{0, 6}, {-2, 1}}}}) {
        CHECK(diagram_dominant_monomial(b2, d) == tab_monomial(b2, dominant_tableau(b2, d)));
    }
}

TEST_CASE("snake of a generic diagram dominant monomial") {
    Algebra b2 = Algebra::type_b(2);
    auto seq = x_sequence(b2, diagram_dominant_monomial(b2, reduced13));
    CHECK(is_snake(b2, seq));
    CHECK(seq.size() == 5);
}

TEST_CASE("non-generic reduction") {
    Algebra b2 = Algebra::type_b(2);
    auto close = closely_related(b2, nongeneric16);
    CHECK(close == reduced13);
    CHECK(close.box_count() == nongeneric16.box_count() - (2 * 2 - 1));
    CHECK(close.column_count() == nongeneric16.column_count() - 1);
    CHECK(is_generic(b2, close));
    CHECK(related_generic(b2, nongeneric16) == reduced13);
    CHECK(related_generic(b2, reduced13) == reduced13);
    CHECK_THROWS_AS(closely_related(b2, reduced13), std::invalid_argument);
}

TEST_CASE("tau is a monomial-preserving bijection") {
    Algebra b2 = Algebra::type_b(2);
    auto tabs = enum_tableaux_serial(b2, nongeneric16);
    auto reduced_tabs = enum_tableaux_serial(b2, reduced13);
    CHECK(tabs.size() == reduced_tabs.size());
    QCharacter before, after;
    for (const auto& t : tabs) {
        before.add(tab_monomial(b2, t));
        auto tt = tau(b2, t);
        CHECK(tab_monomial(b2, tt) == tab_monomial(b2, t));
    }
    for (const auto& t : reduced_tabs) after.add(tab_monomial(b2, t));
    CHECK(before == after);
    // all multiplicities are one, so monomial preservation forces injectivity
    CHECK(is_thin_char(before));
    CHECK(tau(b2, dominant_tableau(b2, nongeneric16)) == dominant_tableau(b2, reduced13));
}

TEST_CASE("bijection between tuples and tableaux") {
    Algebra b2 = Algebra::type_b(2);
    for (const SkewDiagram& d :
         {reduced13, SkewDiagram{{{1, 1}}}, SkewDiagram{{{0, 3}, {-1, 2}}},
          SkewDiagram{{{0, 4}, {-3, 2}, {-4, -1}}}}) {
        REQUIRE(is_generic(b2, d));
        auto owners = x_sequence(b2, diagram_dominant_monomial(b2, d));
        std::vector<const PathSet*> sets;
        for (auto o : owners) sets.push_back(&path_set(b2, o));
        auto tabs = enum_tableaux_serial(b2, d);
        std::size_t tuples = 0;
        bool all_ok = true;
        for_each_tuple(b2, owners, [&](const std::vector<int>& idx) {
            ++tuples;
            std::vector<Path> tup;
            Monomial prod;
            for (std::size_t t = 0; t < idx.size(); ++t) {
                tup.push_back(sets[t]->paths[idx[t]]);
                prod *= sets[t]->monomials[idx[t]];
            }
            auto tb = tuple_to_tableau(b2, tup, d);
            if (!(tab_monomial(b2, tb) == prod)) all_ok = false;
            if (!(tableau_to_tuple(b2, tb) == tup)) all_ok = false;
        });
        CHECK(all_ok);
        CHECK(tuples == tabs.size());

        // all-highest maps to the dominant tableau
        std::vector<Path> hi;
        for (auto o : owners) hi.push_back(highest_path(b2, o));
        CHECK(tuple_to_tableau(b2, hi, d) == dominant_tableau(b2, d));

        // exactly one tableau has a dominant monomial
        int ndom = 0;
        for (const auto& t : tabs) ndom += tab_monomial(b2, t).dominant();
        CHECK(ndom == 1);
    }
}

namespace {
// anchored connected diagrams: bottom of column 1 at row 0, adjacent columns
// share at least one row, generic overlaps only
void small_diagram_sweep(const Algebra& alg, int max_cols, int max_boxes,
                         const std::function<void(const SkewDiagram&)>& fn) {
    const int n = alg.rank();
    SkewDiagram cur;
    std::function<void(int)> grow = [&](int used) {
        if (!cur.columns.empty()) fn(cur);
        if ((int)cur.columns.size() == max_cols) return;
        if (cur.columns.empty()) {
            for (int len = 1; len <= max_boxes; ++len) {
                cur.columns.push_back({1 - len, 0});
                grow(len);
                cur.columns.pop_back();
            }
            return;
        }
        ColumnSpan last = cur.columns.back();
        for (int b = last.top; b <= std::min(last.bottom, last.top + 2 * n - 2); ++b) {
            for (int len = b - last.top + 1; used + len <= max_boxes; ++len) {
                cur.columns.push_back({b - len + 1, b});
                grow(used + len);
                cur.columns.pop_back();
            }
        }
    };
    grow(0);
}
} // namespace

TEST_CASE("exhaustive bijection sweep on small shapes") {
    for (int n : {2, 3}) {
        Algebra alg = Algebra::type_b(n);
        long long diagrams = 0, tableaux = 0;
        bool all_ok = true;
        small_diagram_sweep(alg, 3, n == 2 ? 9 : 8, [&](const SkewDiagram& d) {
            REQUIRE(is_generic(alg, d));
            Monomial m_plus = diagram_dominant_monomial(alg, d);
            auto seq = x_sequence(alg, m_plus);
            if (!is_snake(alg, seq)) all_ok = false;
            std::unordered_map<Monomial, long long, MonomialHash> bag;
            long long tabs = 0, tuples = 0;
            for_each_tableau_monomial(alg, d, [&](const Monomial& m) {
                ++tabs;
                ++bag[m];
            });
            for_each_tuple_monomial(alg, seq, [&](const Monomial& m) {
                ++tuples;
                auto it = bag.find(m);
                if (it == bag.end()) { all_ok = false; return; }
                if (--it->second == 0) bag.erase(it);
            });
            if (!bag.empty() || tabs != tuples) all_ok = false;
            ++diagrams;
            tableaux += tabs;
        });
        CHECK(all_ok);
        CHECK(diagrams > 100);
        CHECK(tableaux > 1000);
    }
}

TEST_CASE("bijection on disconnected diagrams") {
    // columns sharing no rows impose no horizontal constraints; the
    // correspondence must still hold
    Algebra b2 = Algebra::type_b(2);
    for (const SkewDiagram& d :
         {SkewDiagram{{{0, 1}, {-4, -3}}}, SkewDiagram{{{0, 0}, {-2, -2}, {-6, -5}}}}) {
        REQUIRE(validate_diagram(b2, d).ok);
        REQUIRE(is_generic(b2, d));
        Monomial m_plus = diagram_dominant_monomial(b2, d);
        auto seq = x_sequence(b2, m_plus);
        CHECK(is_snake(b2, seq));
        QCharacter from_tabs, from_paths;
        for_each_tableau_monomial(b2, d, [&](const Monomial& m) { from_tabs.add(m); });
        for_each_tuple_monomial(b2, seq, [&](const Monomial& m) { from_paths.add(m); });
        CHECK(from_tabs == from_paths);
    }
}

TEST_CASE("owner mismatch is rejected") {
    Algebra b2 = Algebra::type_b(2);
    SkewDiagram single{{{1, 1}}};
    std::vector<Path> wrong{highest_path(b2, {2, 1})};
    CHECK_THROWS_AS(tuple_to_tableau(b2, wrong, single), std::invalid_argument);
    CHECK_THROWS_AS(tuple_to_tableau(b2, {}, single), std::invalid_argument);
}

TEST_CASE("diagram json") {
    Algebra b2 = Algebra::type_b(2);
    auto js = diagram_to_json(b2, nongeneric16);
    auto [alg2, d2] = diagram_from_json(js);
    CHECK(alg2.rank() == 2);
    CHECK(d2 == nongeneric16);
    CHECK_THROWS_AS(diagram_from_json("{}"), parse_error);
    CHECK_THROWS_AS(diagram_from_json(R"({"N":2,"columns":[{"j":2,"top":0,"bottom":0}]})"),
                    parse_error);
}

TEST_CASE("serial and parallel enumeration agree") {
    Algebra b2 = Algebra::type_b(2);
    for (const SkewDiagram& d : {nongeneric16, reduced13, SkewDiagram{{{0, 4}, {-3, 2}, {-4, 0}}}}) {
        CHECK(enum_tableaux(b2, d) == enum_tableaux_serial(b2, d));
    }
}
