#include "bsnake/sl2.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsnake {

namespace {

void check_steps(const QString& a, const QString& b) {
    if (a.step != b.step)
        throw std::invalid_argument("q-strings with different steps");
}

bool same_residue(const QString& a, const QString& b) {
    return ((a.lo() - b.lo()) % (2 * a.step)) == 0;
}

// single node of a monomial's support; 0 when empty
int support_node(const Monomial& m) {
    int node = 0;
    for (const auto& f : m.factors()) {
        if (node == 0) node = f.node;
        else if (node != f.node)
            throw std::invalid_argument("monomial not supported on a single node");
    }
    return node;
}

} // namespace

bool contains(const QString& a, const QString& b) {
    check_steps(a, b);
    return same_residue(a, b) && a.lo() <= b.lo() && b.hi() <= a.hi();
}

bool disjoint(const QString& a, const QString& b) {
    check_steps(a, b);
    if (!same_residue(a, b)) return true;
    return b.lo() > a.hi() || a.lo() > b.hi();
}

bool general_position(const QString& a, const QString& b) {
    check_steps(a, b);
    if (contains(a, b) || contains(b, a)) return true;
    const QString& lo = a.lo() <= b.lo() ? a : b;
    const QString& hi = a.lo() <= b.lo() ? b : a;
    bool union_is_string = same_residue(a, b) && hi.lo() <= lo.hi() + 2 * a.step;
    return !union_is_string;
}

std::vector<QString> qstring_decompose(const Monomial& m, int step) {
    if (step < 1) throw std::invalid_argument("step must be positive");
    if (!m.dominant()) throw std::invalid_argument("monomial not dominant");
    support_node(m);
    std::vector<QString> v;
    for (const auto& f : m.factors())
        for (int c = 0; c < f.exp; ++c) v.push_back({f.level, 1, step});
    std::sort(v.begin(), v.end());
    // Merge the least violating pair until everything is in pairwise general
    // position.  A merge replaces two strings by their union run and overlap
    // run, preserving the product of string monomials.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < v.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < v.size() && !merged; ++j) {
                if (general_position(v[i], v[j])) continue;
                int lo = std::min(v[i].lo(), v[j].lo());
                int hi = std::max(v[i].hi(), v[j].hi());
                int ilo = std::max(v[i].lo(), v[j].lo());
                int ihi = std::min(v[i].hi(), v[j].hi());
                QString u{(lo + hi) / 2, (hi - lo) / (2 * step) + 1, step};
                v.erase(v.begin() + j);
                v.erase(v.begin() + i);
                v.push_back(u);
                if (ilo <= ihi)
                    v.push_back({(ilo + ihi) / 2, (ihi - ilo) / (2 * step) + 1, step});
                std::sort(v.begin(), v.end());
                merged = true;
            }
        }
    }
    return v;
}

Monomial qstring_monomial(const QString& s, int node) {
    Monomial m;
    for (int l = s.lo(); l <= s.hi(); l += 2 * s.step) m *= Monomial::y(node, l);
    return m;
}

QCharacter eval_char(const QString& s, int node) {
    QCharacter chi;
    Monomial cur = qstring_monomial(s, node);
    chi.add(cur);
    for (int t = 0; t < s.length; ++t) {
        int c = s.center + s.step * (s.length - 2 * t);
        cur *= Monomial::y(node, c + s.step, -1);
        cur *= Monomial::y(node, c - s.step, -1);
        chi.add(cur);
    }
    return chi;
}

QCharacter sl2_char(const Monomial& m, int step) {
    int node = support_node(m);
    if (node == 0) node = 1;
    QCharacter chi;
    chi.add(Monomial{});
    for (const auto& s : qstring_decompose(m, step)) chi = chi * eval_char(s, node);
    return chi;
}

bool is_thin_sl2(const Monomial& m, int step) {
    auto v = qstring_decompose(m, step);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!disjoint(v[i], v[j])) return false;
    return true;
}

bool lowerable_sl2(const Monomial& m, int b, int step) {
    support_node(m);
    for (const auto& f : m.factors()) {
        if (f.exp > 1 || f.exp < -1)
            throw std::invalid_argument("not a thin-module monomial");
        // forbidden drop u_l = 1, u_{l+2s} = -1
        if (f.exp - m.u(f.node, f.level + 2 * step) == 2)
            throw std::invalid_argument("not a thin-module monomial");
    }
    int node = support_node(m);
    if (node == 0) return false;
    return m.u(node, b) == 1 && m.u(node, b + 2 * step) == 0;
}

} // namespace bsnake
