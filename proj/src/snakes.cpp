#include "bsnake/snakes.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bsnake {

namespace {

int dN(const Algebra& alg, int i) { return i == alg.rank() ? 1 : 0; }

struct TupleSpace {
    std::vector<const PathSet*> sets;
    // above[s][t][a] = bitmask over b of strictly_above(paths_s[a], paths_t[b])
    std::vector<std::vector<std::vector<std::vector<std::uint64_t>>>> above;
};

TupleSpace build_space(const Algebra& alg, const std::vector<SpectralPoint>& owners) {
    TupleSpace sp;
    const int T = (int)owners.size();
    for (const auto& o : owners) sp.sets.push_back(&path_set(alg, o));
    sp.above.assign(T, std::vector<std::vector<std::vector<std::uint64_t>>>(T));
    for (int s = 0; s < T; ++s) {
        for (int t = s + 1; t < T; ++t) {
            const auto& A = *sp.sets[s];
            const auto& B = *sp.sets[t];
            const int words = ((int)B.paths.size() + 63) / 64;
            auto& mat = sp.above[s][t];
            mat.assign(A.paths.size(), std::vector<std::uint64_t>(words, 0));
            const int cols = 4 * alg.rank() - 1;
            for (std::size_t a = 0; a < A.paths.size(); ++a) {
                for (std::size_t b = 0; b < B.paths.size(); ++b) {
                    bool ok = true;
                    for (int x = 0; x < cols && ok; ++x) {
                        int pm = A.col_max[a][x], qm = B.col_min[b][x];
                        if (pm != INT_MIN && qm != INT_MAX && pm >= qm) ok = false;
                    }
                    if (ok) mat[a][b / 64] |= std::uint64_t(1) << (b % 64);
                }
            }
        }
    }
    return sp;
}

// Depth-first product with bitmask pruning; emit(indices) per complete tuple.
// When products is non-null it is filled with prefix products of the chosen
// path monomials so emit can read products[T-1] instead of remultiplying.
// All mask storage is preallocated; the hot loop performs no allocation.
template <class Emit>
void walk(const TupleSpace& sp, int first, const Emit& emit,
          std::vector<Monomial>* products = nullptr) {
    const int T = (int)sp.sets.size();
    std::vector<int> chosen(T, -1);
    // allowed[depth][t] is the candidate mask for position t after the
    // choices below depth
    std::vector<std::vector<std::vector<std::uint64_t>>> allowed(
        T + 1, std::vector<std::vector<std::uint64_t>>(T));
    for (int t = 0; t < T; ++t) {
        int nb = (int)sp.sets[t]->paths.size();
        std::vector<std::uint64_t> m((nb + 63) / 64, ~std::uint64_t(0));
        if (nb % 64) m.back() = (std::uint64_t(1) << (nb % 64)) - 1;
        for (int d = 0; d <= T; ++d) allowed[d][t] = m;
    }

    std::function<void(int)> rec = [&](int depth) {
        if (depth == T) {
            emit(chosen);
            return;
        }
        const auto& cand = allowed[depth][depth];
        for (std::size_t w = 0; w < cand.size(); ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int b = (int)(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                if (depth == 0 && first >= 0 && b != first) continue;
                chosen[depth] = b;
                bool dead = false;
                for (int t = depth + 1; t < T && !dead; ++t) {
                    const auto& src = allowed[depth][t];
                    const auto& row = sp.above[depth][t][b];
                    auto& dst = allowed[depth + 1][t];
                    std::uint64_t any = 0;
                    for (std::size_t k = 0; k < src.size(); ++k) {
                        dst[k] = src[k] & row[k];
                        any |= dst[k];
                    }
                    if (!any) dead = true;
                }
                if (!dead) {
                    if (products) {
                        const Monomial& mono = sp.sets[depth]->monomials[b];
                        (*products)[depth] = depth ? (*products)[depth - 1] * mono : mono;
                    }
                    rec(depth + 1);
                }
            }
        }
    };
    rec(0);
}

} // namespace

PositionClass position_class(const Algebra& alg, SpectralPoint a, SpectralPoint b) {
    if (!alg.in_x(a) || !alg.in_x(b)) throw std::domain_error("points not in X");
    const int n = alg.rank();
    const int d = b.level - a.level;
    const int da = dN(alg, a.node), db = dN(alg, b.node);
    const int bound1 = 4 + 2 * std::abs(b.node - a.node) - da - db;
    const bool cong1 = mod4(d - (2 * (b.node - a.node) - da - db)) == 0;
    if (d >= bound1 && cong1) {
        int shift = (d - bound1) / 4;
        return {shift == 0 ? Position::MinimalSnake : Position::Snake, shift};
    }
    const int bound2 = 2 * n + 2 + 2 * std::abs(n - a.node - b.node) - da - db;
    if (d >= bound2) return {Position::ExtendedOnly, std::nullopt};
    return {Position::None, std::nullopt};
}

bool is_extended_snake(const Algebra& alg, const std::vector<SpectralPoint>& seq) {
    for (std::size_t t = 1; t < seq.size(); ++t)
        if (position_class(alg, seq[t - 1], seq[t]).kind == Position::None) return false;
    return true;
}

bool is_snake(const Algebra& alg, const std::vector<SpectralPoint>& seq) {
    for (std::size_t t = 1; t < seq.size(); ++t) {
        auto k = position_class(alg, seq[t - 1], seq[t]).kind;
        if (k != Position::Snake && k != Position::MinimalSnake) return false;
    }
    return true;
}

std::vector<SpectralPoint> x_sequence(const Algebra& alg, const Monomial& m) {
    if (!m.dominant()) throw std::invalid_argument("monomial not dominant");
    std::vector<SpectralPoint> seq;
    for (const auto& f : m.factors()) {
        SpectralPoint p{f.node, f.level};
        if (!alg.in_x(p)) throw std::domain_error("monomial not supported on X");
        for (int c = 0; c < f.exp; ++c) seq.push_back(p);
    }
    std::sort(seq.begin(), seq.end(), [](const SpectralPoint& a, const SpectralPoint& b) {
        return std::pair(a.level, a.node) < std::pair(b.level, b.node);
    });
    return seq;
}

void for_each_tuple(const Algebra& alg, const std::vector<SpectralPoint>& owners,
                    const std::function<void(const std::vector<int>&)>& fn) {
    if (owners.empty()) {
        fn({});
        return;
    }
    auto sp = build_space(alg, owners);
    walk(sp, -1, fn);
}

void for_each_tuple_monomial(const Algebra& alg, const std::vector<SpectralPoint>& owners,
                             const std::function<void(const Monomial&)>& fn) {
    if (owners.empty()) {
        fn(Monomial{});
        return;
    }
    auto sp = build_space(alg, owners);
    std::vector<Monomial> products(owners.size());
    walk(sp, -1, [&](const std::vector<int>&) { fn(products.back()); }, &products);
}

QCharacter qchar_tuples_serial(const Algebra& alg, const std::vector<SpectralPoint>& owners) {
    QCharacter chi;
    for_each_tuple_monomial(alg, owners, [&](const Monomial& m) { chi.add(m); });
    return chi;
}

QCharacter qchar_tuples(const Algebra& alg, const std::vector<SpectralPoint>& owners) {
#ifndef _OPENMP
    return qchar_tuples_serial(alg, owners);
#else
    if (owners.size() < 2) return qchar_tuples_serial(alg, owners);
    auto sp = build_space(alg, owners);
    const int n0 = (int)sp.sets[0]->paths.size();
    QCharacter chi;
    #pragma omp parallel
    {
        QCharacter local;
        std::vector<Monomial> products(owners.size());
        #pragma omp for schedule(dynamic) nowait
        for (int first = 0; first < n0; ++first) {
            walk(sp, first,
                 [&](const std::vector<int>&) { local.add(products.back()); }, &products);
        }
        #pragma omp critical
        for (const auto& [m, c] : local.terms()) chi.add(m, c);
    }
    return chi;
#endif
}

namespace {
QCharacter snake_qchar_impl(const Algebra& alg, const Monomial& m, bool parallel) {
    auto seq = x_sequence(alg, m);
    for (std::size_t t = 1; t < seq.size(); ++t)
        if (position_class(alg, seq[t - 1], seq[t]).kind == Position::None)
            throw not_extended_snake(seq[t - 1], seq[t]);
    return parallel ? qchar_tuples(alg, seq) : qchar_tuples_serial(alg, seq);
}
} // namespace

QCharacter snake_qchar(const Algebra& alg, const Monomial& m) {
    return snake_qchar_impl(alg, m, true);
}

QCharacter snake_qchar_serial(const Algebra& alg, const Monomial& m) {
    return snake_qchar_impl(alg, m, false);
}

bool is_special(const QCharacter& chi) {
    int count = 0;
    for (const auto& [m, c] : chi.terms())
        if (m.dominant() && ++count > 1) return false;
    return count == 1;
}

bool is_antispecial(const QCharacter& chi) {
    int count = 0;
    for (const auto& [m, c] : chi.terms())
        if (m.antidominant() && ++count > 1) return false;
    return count == 1;
}

bool is_thin_char(const QCharacter& chi) {
    for (const auto& [m, c] : chi.terms())
        if (c != 1) return false;
    return true;
}

bool splits_after(const Algebra& alg, SpectralPoint a, SpectralPoint b) {
    const int d = b.level - a.level;
    const int da = dN(alg, a.node), db = dN(alg, b.node);
    const int ia = a.node, ib = b.node;
    const int n = alg.rank();
    bool t0 = d >= 4 + 2 * ia + 2 * ib - da - db &&
              mod4(d - (2 * (ia - ib) - da - db)) == 0;
    bool t1 = d >= 4 * n + 2 - 2 * std::abs(ia - ib) - da - db &&
              mod4(d - (2 + 2 * (ia - ib) - da - db)) == 0;
    return t0 || t1;
}

std::vector<std::vector<SpectralPoint>> prime_split(const Algebra& alg,
                                                    const std::vector<SpectralPoint>& seq) {
    if (!is_extended_snake(alg, seq))
        throw std::invalid_argument("not an extended snake");
    std::vector<std::vector<SpectralPoint>> out;
    std::vector<SpectralPoint> cur;
    for (std::size_t t = 0; t < seq.size(); ++t) {
        cur.push_back(seq[t]);
        if (t + 1 == seq.size() || splits_after(alg, seq[t], seq[t + 1])) {
            out.push_back(cur);
            cur.clear();
        }
    }
    return out;
}

Monomial coset_key(const Algebra& alg, const Monomial& m, int node, int lmin, int lmax) {
    Monomial key = m;
    const int r = alg.r(node);
    for (int l = lmax; l >= lmin + 2 * r; --l) {
        int e = key.u(node, l);
        if (e == 0) continue;
        if (!alg.in_w({node, l - r})) continue;
        key *= a_var(alg, node, l - r).pow(-e);
    }
    return key;
}

VerifyResult verify_thin_criteria(const Algebra& alg, const Monomial& m_plus,
                                  const std::vector<Monomial>& candidates) {
    VerifyResult res;
    auto fail = [&](int cond, std::string detail) {
        res.pass = false;
        res.condition = cond;
        res.detail = std::move(detail);
        return res;
    };

    std::unordered_map<Monomial, int, MonomialHash> in_set;
    for (const auto& m : candidates) in_set.emplace(m, 1);
    if (in_set.size() != candidates.size())
        return fail(1, "candidate set has duplicate monomials");

    // (1) the unique dominant member is m_plus
    if (!in_set.count(m_plus)) return fail(1, "highest weight missing: " + m_plus.str());
    for (const auto& m : candidates)
        if (m.dominant() && !(m == m_plus))
            return fail(1, "extra dominant monomial: " + m.str());

    int lmin = m_plus.min_level(), lmax = m_plus.max_level();
    for (const auto& m : candidates) {
        if (m.is_one()) continue;
        lmin = std::min(lmin, m.min_level());
        lmax = std::max(lmax, m.max_level());
    }
    std::vector<SpectralPoint> window;
    for (int i = 1; i <= alg.rank(); ++i)
        for (int b = lmin + alg.r(i); b <= lmax - alg.r(i); ++b)
            if (alg.in_w({i, b})) window.push_back({i, b});

    // (2) a monomial one lowering step outside the set must not be reachable
    // by a different single lowering from inside
    std::unordered_map<Monomial, std::pair<SpectralPoint, Monomial>, MonomialHash> exits;
    for (const auto& m : candidates) {
        for (const auto& w : window) {
            Monomial low = m * a_var(alg, w.node, w.level).inv();
            if (in_set.count(low)) continue;
            auto [it, fresh] = exits.emplace(low, std::pair(w, m));
            if (!fresh && !(it->second.first == w))
                return fail(2, "monomial " + low.str() + " leaves the set by A[" +
                                   std::to_string(w.node) + "," + std::to_string(w.level) +
                                   "]^-1 from " + m.str() + " and by A[" +
                                   std::to_string(it->second.first.node) + "," +
                                   std::to_string(it->second.first.level) + "]^-1 from " +
                                   it->second.second.str());
        }
    }

    // (3) every node class must restrict to a thin sl2 character
    for (int i = 1; i <= alg.rank(); ++i) {
        std::unordered_map<Monomial, std::vector<const Monomial*>, MonomialHash> classes;
        for (const auto& m : candidates)
            classes[coset_key(alg, m, i, lmin, lmax)].push_back(&m);
        std::unordered_map<Monomial, QCharacter, MonomialHash> char_cache;
        std::vector<const Monomial*> dominants;
        for (const auto& m : candidates)
            if (m.node_dominant(i)) dominants.push_back(&m);
        for (const auto& [key, members] : classes) {
            QCharacter restricted;
            for (const Monomial* m : members) restricted.add(m->beta(i));
            bool matched = false;
            auto try_candidate = [&](const Monomial* c) {
                if (matched || !c->node_dominant(i)) return;
                Monomial b = c->beta(i);
                auto it = char_cache.find(b);
                if (it == char_cache.end())
                    it = char_cache.emplace(b, sl2_char(b, alg.r(i))).first;
                if ((long long)restricted.dimension() == it->second.dimension() &&
                    restricted == it->second)
                    matched = true;
            };
            for (const Monomial* m : members) try_candidate(m);
            for (const Monomial* m : dominants) try_candidate(m);
            if (!matched)
                return fail(3, "node " + std::to_string(i) + " class of " +
                                   members.front()->str() + " (" +
                                   std::to_string(members.size()) +
                                   " members) is not a thin sl2 character");
        }
    }
    return res;
}

bool is_tame_class(const Algebra& alg, const Monomial& m) {
    return is_extended_snake(alg, x_sequence(alg, m));
}

} // namespace bsnake
