#include "bsnake/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace bsnake {

std::string Letter::token() const {
    if (v > 0) return std::to_string(v);
    if (v == 0) return "0";
    return std::to_string(-v) + "b";
}

Letter Letter::parse_token(std::string_view t) {
    if (t.empty()) throw parse_error("empty letter token", 0);
    bool bar = t.back() == 'b';
    std::string num(bar ? t.substr(0, t.size() - 1) : t);
    if (num.empty() || !std::all_of(num.begin(), num.end(),
                                    [](char c) { return c >= '0' && c <= '9'; }))
        throw parse_error("bad letter token", 0);
    int v = std::stoi(num);
    if (bar && v == 0) throw parse_error("bad letter token", 0);
    return {bar ? -v : v};
}

int SkewDiagram::box_count() const {
    int n = 0;
    for (const auto& c : columns) n += c.length();
    return n;
}

int SkewDiagram::overlap(int j) const {
    if (j < 1 || j >= column_count()) return 0;
    int lo = std::max(col(j).top, col(j + 1).top);
    int hi = std::min(col(j).bottom, col(j + 1).bottom);
    return std::max(0, hi - lo + 1);
}

DiagramVerdict validate_diagram(const Algebra& alg, const SkewDiagram& d) {
    for (int j = 1; j <= d.column_count(); ++j) {
        if (d.col(j).bottom < d.col(j).top)
            return {false, "column " + std::to_string(j) + " has bottom above top"};
    }
    for (int j = 1; j < d.column_count(); ++j) {
        if (d.col(j + 1).top > d.col(j).top || d.col(j + 1).bottom > d.col(j).bottom)
            return {false, "columns " + std::to_string(j) + "," + std::to_string(j + 1) +
                               " violate the staircase condition"};
        if (d.overlap(j) > 2 * alg.rank())
            return {false, "columns " + std::to_string(j) + "," + std::to_string(j + 1) +
                               " share more than 2N rows"};
    }
    return {};
}

bool is_generic(const Algebra& alg, const SkewDiagram& d) {
    return nongeneric_columns(alg, d).empty();
}

std::vector<int> nongeneric_columns(const Algebra& alg, const SkewDiagram& d) {
    auto v = validate_diagram(alg, d);
    if (!v.ok) throw std::invalid_argument("invalid diagram: " + v.violation);
    std::vector<int> out;
    for (int j = 1; j < d.column_count(); ++j)
        if (d.overlap(j) == 2 * alg.rank()) out.push_back(j);
    return out;
}

namespace {

// horizontal rule against the box to the left, if present
bool h_ok(const Tableau& t, int row, int j, Letter c) {
    if (j <= 1 || !t.shape.contains(row, j - 1)) return true;
    Letter left = t.at(row, j - 1);
    if (!(left <= c)) return false;
    return !(left.v == 0 && c.v == 0);
}

bool v_ok(Letter above, Letter c) {
    return above < c || (above.v == 0 && c.v == 0);
}

std::vector<Letter> alphabet(int n) {
    std::vector<Letter> a;
    for (int i = 1; i <= n; ++i) a.push_back({i});
    a.push_back({0});
    for (int i = n; i >= 1; --i) a.push_back({-i});
    return a;
}

} // namespace

bool is_valid_tableau(const Algebra& alg, const Tableau& t) {
    const int n = alg.rank();
    for (int j = 1; j <= t.shape.column_count(); ++j) {
        const auto& cs = t.shape.col(j);
        if ((int)t.fill[j - 1].size() != cs.length()) return false;
        for (int row = cs.top; row <= cs.bottom; ++row) {
            Letter c = t.at(row, j);
            if (c.v > n || c.v < -n) return false;
            if (row > cs.top && !v_ok(t.at(row - 1, j), c)) return false;
            if (!h_ok(t, row, j, c)) return false;
        }
    }
    return true;
}

void for_each_tableau(const Algebra& alg, const SkewDiagram& d,
                      const std::function<void(const Tableau&)>& fn) {
    auto v = validate_diagram(alg, d);
    if (!v.ok) throw std::invalid_argument("invalid diagram: " + v.violation);
    auto letters = alphabet(alg.rank());
    Tableau t;
    t.shape = d;
    t.fill.resize(d.column_count());
    for (int j = 1; j <= d.column_count(); ++j) t.fill[j - 1].resize(d.col(j).length());

    std::function<void(int, int)> rec = [&](int j, int idx) {
        if (j > d.column_count()) {
            fn(t);
            return;
        }
        const auto& cs = d.col(j);
        if (idx == cs.length()) {
            rec(j + 1, 0);
            return;
        }
        int row = cs.top + idx;
        for (Letter c : letters) {
            if (idx > 0 && !v_ok(t.fill[j - 1][idx - 1], c)) continue;
            if (!h_ok(t, row, j, c)) continue;
            t.fill[j - 1][idx] = c;
            rec(j, idx + 1);
        }
    };
    rec(1, 0);
}

void for_each_tableau_monomial(const Algebra& alg, const SkewDiagram& d,
                               const std::function<void(const Monomial&)>& fn) {
    auto v = validate_diagram(alg, d);
    if (!v.ok) throw std::invalid_argument("invalid diagram: " + v.violation);
    auto letters = alphabet(alg.rank());
    const int nletters = (int)letters.size();
    // per-box cache of the letter contributions, and prefix products along
    // the column-major walk
    const int boxes = d.box_count();
    std::vector<std::vector<Monomial>> contrib(boxes, std::vector<Monomial>(nletters));
    std::vector<int> box_of_col(d.column_count() + 2, 0);
    {
        int b = 0;
        for (int j = 1; j <= d.column_count(); ++j) {
            box_of_col[j] = b;
            for (int row = d.col(j).top; row <= d.col(j).bottom; ++row, ++b)
                for (int c = 0; c < nletters; ++c)
                    contrib[b][c] = box_monomial(alg, letters[c], 4 * (j - row));
        }
        box_of_col[d.column_count() + 1] = b;
    }
    Tableau t;
    t.shape = d;
    t.fill.resize(d.column_count());
    for (int j = 1; j <= d.column_count(); ++j) t.fill[j - 1].resize(d.col(j).length());
    std::vector<Monomial> prefix(boxes + 1);

    std::function<void(int, int)> rec = [&](int j, int idx) {
        if (j > d.column_count()) {
            fn(prefix[boxes]);
            return;
        }
        const auto& cs = d.col(j);
        if (idx == cs.length()) {
            rec(j + 1, 0);
            return;
        }
        int row = cs.top + idx;
        int b = box_of_col[j] + idx;
        for (int c = 0; c < nletters; ++c) {
            if (idx > 0 && !v_ok(t.fill[j - 1][idx - 1], letters[c])) continue;
            if (!h_ok(t, row, j, letters[c])) continue;
            t.fill[j - 1][idx] = letters[c];
            prefix[b + 1] = prefix[b] * contrib[b][c];
            rec(j, idx + 1);
        }
    };
    rec(1, 0);
}

std::vector<Tableau> enum_tableaux_serial(const Algebra& alg, const SkewDiagram& d) {
    std::vector<Tableau> out;
    for_each_tableau(alg, d, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::vector<Tableau> enum_tableaux(const Algebra& alg, const SkewDiagram& d) {
#ifndef _OPENMP
    return enum_tableaux_serial(alg, d);
#else
    if (d.column_count() < 2) return enum_tableaux_serial(alg, d);
    // split the search on the fillings of the first column
    SkewDiagram first;
    first.columns = {d.columns[0]};
    auto heads = enum_tableaux_serial(alg, first);
    std::vector<std::vector<Tableau>> blocks(heads.size());
    auto letters = alphabet(alg.rank());
    #pragma omp parallel for schedule(dynamic)
    for (int h = 0; h < (int)heads.size(); ++h) {
        Tableau t;
        t.shape = d;
        t.fill.resize(d.column_count());
        for (int j = 1; j <= d.column_count(); ++j) t.fill[j - 1].resize(d.col(j).length());
        t.fill[0] = heads[h].fill[0];
        std::function<void(int, int)> rec = [&](int j, int idx) {
            if (j > d.column_count()) {
                blocks[h].push_back(t);
                return;
            }
            const auto& cs = d.col(j);
            if (idx == cs.length()) {
                rec(j + 1, 0);
                return;
            }
            int row = cs.top + idx;
            for (Letter c : letters) {
                if (idx > 0 && !v_ok(t.fill[j - 1][idx - 1], c)) continue;
                if (!h_ok(t, row, j, c)) continue;
                t.fill[j - 1][idx] = c;
                rec(j, idx + 1);
            }
        };
        rec(2, 0);
    }
    std::vector<Tableau> out;
    for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
#endif
}

Monomial box_monomial(const Algebra& alg, Letter c, int k) {
    const int n = alg.rank();
    auto y = [&](int node, int level, int exp = 1) {
        if (node < 1 || node > n) return Monomial{};
        return Monomial::y(node, level, exp);
    };
    if (c.v > 0 && c.v < n) {
        int i = c.v;
        return y(i - 1, 2 * i + k, -1) * y(i, 2 * i - 2 + k);
    }
    if (c.v == n)
        return y(n - 1, 2 * n + k, -1) * y(n, 2 * n - 3 + k) * y(n, 2 * n - 1 + k);
    if (c.v == 0)
        return y(n, 2 * n + 1 + k, -1) * y(n, 2 * n - 3 + k);
    if (c.v == -n)
        return y(n, 2 * n - 1 + k, -1) * y(n, 2 * n + 1 + k, -1) * y(n - 1, 2 * n - 2 + k);
    int i = -c.v;
    return y(i, 4 * n - 2 * i + k, -1) * y(i - 1, 4 * n - 2 - 2 * i + k);
}

Monomial tab_monomial(const Algebra& alg, const Tableau& t) {
    Monomial m;
    for (int j = 1; j <= t.shape.column_count(); ++j)
        for (int row = t.shape.col(j).top; row <= t.shape.col(j).bottom; ++row)
            m *= box_monomial(alg, t.at(row, j), 4 * (j - row));
    return m;
}

Tableau dominant_tableau(const Algebra& alg, const SkewDiagram& d) {
    auto v = validate_diagram(alg, d);
    if (!v.ok) throw std::invalid_argument("invalid diagram: " + v.violation);
    const int n = alg.rank();
    Tableau t;
    t.shape = d;
    t.fill.resize(d.column_count());
    for (int j = 1; j <= d.column_count(); ++j) {
        const auto& cs = d.col(j);
        auto& col = t.fill[j - 1];
        col.resize(cs.length());
        int idx = 0;
        // longest prefix 1..r
        for (int c = 1; c <= n && idx < cs.length(); ++c) {
            if (!h_ok(t, cs.top + idx, j, {c})) break;
            col[idx++] = {c};
        }
        // run of zeros
        while (idx < cs.length() && h_ok(t, cs.top + idx, j, {0})) col[idx++] = {0};
        // barred suffix from bar N downward
        for (int c = n; idx < cs.length(); --c) {
            if (c < 1 || !h_ok(t, cs.top + idx, j, {-c}) ||
                (idx > 0 && !v_ok(col[idx - 1], {-c})))
                throw std::logic_error("dominant filling failed");
            col[idx++] = {-c};
        }
    }
    if (!is_valid_tableau(alg, t)) throw std::logic_error("dominant filling invalid");
    return t;
}

std::vector<int> special_columns(const Algebra& alg, const SkewDiagram& d) {
    const int n = alg.rank();
    std::vector<int> out;
    for (int j = 1; j <= d.column_count(); ++j) {
        if (d.col(j).length() < n) continue;
        int s = d.col(j).top + n - 1;
        if (!d.contains(s + 1, j + 1)) out.push_back(j);
    }
    return out;
}

int varsigma(const Algebra& alg, const SkewDiagram& d, int j) {
    auto sp = special_columns(alg, d);
    return j + (int)std::count_if(sp.begin(), sp.end(), [j](int k) { return k < j; });
}

namespace {
// bottom-box contribution to the dominant monomial
Monomial bt(const Algebra& alg, Letter c, int k) {
    const int n = alg.rank();
    if (c.v > 0 && c.v < n) return Monomial::y(c.v, 2 * c.v - 2 + k);
    if (c.v == n || c.v == 0) return Monomial::y(n, 2 * n - 3 + k);
    int i = -c.v;
    if (i == 1) return Monomial{};
    return Monomial::y(i - 1, 4 * n - 2 - 2 * i + k);
}
} // namespace

Monomial diagram_dominant_monomial(const Algebra& alg, const SkewDiagram& d) {
    auto tplus = dominant_tableau(alg, d);
    Monomial m;
    for (int j = 1; j <= d.column_count(); ++j) {
        const auto& cs = d.col(j);
        m *= bt(alg, tplus.at(cs.bottom, j), 4 * (j - cs.bottom));
    }
    const int n = alg.rank();
    for (int j : special_columns(alg, d)) {
        int s = d.col(j).top + n - 1;
        m *= bt(alg, {n}, 4 * (j - s) + 2);
    }
    return m;
}

namespace {

struct BijectionLayout {
    std::vector<SpectralPoint> snake;
    std::vector<int> vs; // varsigma per column (1-based j -> vs[j-1])
};

BijectionLayout layout(const Algebra& alg, const SkewDiagram& d) {
    if (!is_generic(alg, d))
        throw std::invalid_argument("bijection requires a generic diagram");
    BijectionLayout lo;
    lo.snake = x_sequence(alg, diagram_dominant_monomial(alg, d));
    for (int j = 1; j <= d.column_count(); ++j) lo.vs.push_back(varsigma(alg, d, j));
    int expected = d.column_count() + (int)special_columns(alg, d).size();
    if ((int)lo.snake.size() != expected)
        throw std::logic_error("snake length does not match column data");
    return lo;
}

std::vector<PlanePoint> build_half(const Algebra& alg, int level,
                                   const std::vector<int>& downs) {
    const int n = alg.rank();
    auto in = [&](int r) {
        return std::find(downs.begin(), downs.end(), r) != downs.end();
    };
    std::vector<PlanePoint> pts(n + 1);
    int y = level + 2 * n - 1;
    bool forward = mod4(level) == 3;
    pts[0] = {forward ? 0 : 4 * n - 2, y, 0};
    for (int r = 1; r < n; ++r) {
        y += in(r) ? -2 : 2;
        pts[r] = {forward ? 2 * r : 4 * n - 2 - 2 * r, y, 0};
    }
    bool down = in(n);
    pts[n] = {2 * n - 1, down ? y - 1 : y + 1, down ? -1 : 1};
    return pts;
}

std::vector<int> complement_of(const std::vector<int>& s, int n) {
    std::vector<int> out;
    for (int r = 1; r <= n; ++r)
        if (std::find(s.begin(), s.end(), r) == s.end()) out.push_back(r);
    return out;
}

} // namespace

Tableau tuple_to_tableau(const Algebra& alg, const std::vector<Path>& tuple,
                         const SkewDiagram& d) {
    auto lo = layout(alg, d);
    if (tuple.size() != lo.snake.size())
        throw std::invalid_argument("tuple length does not match the diagram");
    for (std::size_t t = 0; t < tuple.size(); ++t)
        if (!(tuple[t].owner == lo.snake[t]))
            throw std::invalid_argument("owner sequence mismatch at position " +
                                        std::to_string(t + 1));
    const int n = alg.rank();
    Tableau out;
    out.shape = d;
    out.fill.resize(d.column_count());
    for (int j = 1; j <= d.column_count(); ++j) {
        const auto& cs = d.col(j);
        auto& col = out.fill[j - 1];
        col.assign(cs.length(), Letter{0});
        int t = lo.vs[j - 1];
        std::vector<int> head, tail; // plain letters from the top, bars from the bottom
        if (cs.length() < n) {
            auto ls = letter_sets(alg, tuple[t - 1]);
            head = ls.S;
            tail = ls.Sbar;
        } else {
            head = letter_sets(alg, tuple[t]).R; // entry vs_j + 1
            tail = letter_sets(alg, tuple[t - 1]).Rbar;
        }
        if ((int)(head.size() + tail.size()) > cs.length())
            throw std::logic_error("column letters exceed its length");
        for (std::size_t a = 0; a < head.size(); ++a) col[a] = {head[a]};
        // bars in increasing alphabet order downward, i.e. numerals decreasing
        std::sort(tail.rbegin(), tail.rend());
        for (std::size_t a = 0; a < tail.size(); ++a)
            col[cs.length() - tail.size() + a] = {-tail[a]};
    }
    if (!is_valid_tableau(alg, out))
        throw std::logic_error("tuple does not map to a valid tableau");
    return out;
}

std::vector<Path> tableau_to_tuple(const Algebra& alg, const Tableau& t) {
    const SkewDiagram& d = t.shape;
    auto lo = layout(alg, d);
    const int n = alg.rank();
    const int T = (int)lo.snake.size();
    // collected constraints per entry; -1 marks "unknown"
    std::vector<std::vector<int>> S(T), Sb(T), R(T), Rb(T);
    std::vector<int> hasS(T, 0), hasSb(T, 0), hasR(T, 0), hasRb(T, 0);
    for (int j = 1; j <= d.column_count(); ++j) {
        const auto& cs = d.col(j);
        std::vector<int> plains, bars;
        for (int row = cs.top; row <= cs.bottom; ++row) {
            Letter c = t.at(row, j);
            if (c.v > 0) plains.push_back(c.v);
            if (c.v < 0) bars.push_back(-c.v);
        }
        std::sort(plains.begin(), plains.end());
        std::sort(bars.begin(), bars.end());
        int e = lo.vs[j - 1];
        if (cs.length() < n) {
            S[e - 1] = plains;
            hasS[e - 1] = 1;
            Sb[e - 1] = bars;
            hasSb[e - 1] = 1;
        } else {
            Rb[e - 1] = bars;
            hasRb[e - 1] = 1;
            R[e] = plains;
            hasR[e] = 1;
        }
    }
    std::vector<Path> out;
    for (int e = 0; e < T; ++e) {
        auto owner = lo.snake[e];
        if (owner.node == n) {
            std::vector<int> downs;
            if (hasR[e]) downs = R[e];
            else if (hasRb[e]) downs = complement_of(Rb[e], n);
            else throw std::logic_error("spin path underdetermined");
            Path p;
            p.owner = owner;
            p.points = build_half(alg, owner.level, downs);
            out.push_back(std::move(p));
        } else {
            std::vector<int> adowns, bdowns;
            if (hasS[e]) adowns = S[e];
            else if (hasRb[e]) adowns = complement_of(Rb[e], n);
            else throw std::logic_error("first half underdetermined");
            if (hasR[e]) bdowns = R[e];
            else if (hasSb[e]) bdowns = complement_of(Sb[e], n);
            else throw std::logic_error("second half underdetermined");
            const int off = 2 * n - 2 * owner.node - 1;
            auto a = build_half(alg, owner.level - off, adowns);
            auto b = build_half(alg, owner.level + off, bdowns);
            if (a.back().scaled_y() <= b.back().scaled_y())
                throw std::logic_error("halves do not glue");
            Path p;
            p.owner = owner;
            p.points = a;
            p.points.insert(p.points.end(), b.rbegin(), b.rend());
            out.push_back(std::move(p));
        }
    }
    return out;
}

SkewDiagram closely_related(const Algebra& alg, const SkewDiagram& d) {
    auto ng = nongeneric_columns(alg, d);
    if (ng.empty()) throw std::invalid_argument("diagram is already generic");
    const int jp = ng.back(); // all columns past jp are generic
    SkewDiagram out;
    for (int j = 1; j < jp; ++j) out.columns.push_back(d.col(j));
    ColumnSpan ext = d.col(jp);
    ext.top -= d.col(jp + 1).length() - 2 * alg.rank() + 1;
    out.columns.push_back(ext);
    for (int j = jp + 2; j <= d.column_count(); ++j)
        out.columns.push_back({d.col(j).top - 1, d.col(j).bottom - 1});
    return out;
}

SkewDiagram related_generic(const Algebra& alg, const SkewDiagram& d) {
    SkewDiagram cur = d;
    while (!is_generic(alg, cur)) cur = closely_related(alg, cur);
    return cur;
}

Tableau tau(const Algebra& alg, const Tableau& t) {
    const SkewDiagram& d = t.shape;
    auto ng = nongeneric_columns(alg, d);
    if (ng.empty()) throw std::invalid_argument("diagram is already generic");
    const int jp = ng.back();
    SkewDiagram nd = closely_related(alg, d);
    const int n = alg.rank();
    Tableau out;
    out.shape = nd;
    out.fill.resize(nd.column_count());
    for (int j = 1; j <= nd.column_count(); ++j) {
        const auto& cs = nd.col(j);
        auto& col = out.fill[j - 1];
        col.resize(cs.length());
        for (int row = cs.top; row <= cs.bottom; ++row) {
            Letter c;
            if (j < jp) c = t.at(row, j);
            else if (j > jp) c = t.at(row + 1, j + 1);
            else if (row > cs.bottom - n) c = t.at(row, j);
            else if (row < cs.top + n) c = t.at(row + 1, j + 1);
            else c = {0};
            col[row - cs.top] = c;
        }
    }
    if (!is_valid_tableau(alg, out)) throw std::logic_error("tau produced an invalid tableau");
    return out;
}

std::string diagram_to_json(const Algebra& alg, const SkewDiagram& d) {
    nlohmann::json cols = nlohmann::json::array();
    for (int j = 1; j <= d.column_count(); ++j)
        cols.push_back({{"j", j}, {"top", d.col(j).top}, {"bottom", d.col(j).bottom}});
    nlohmann::json out{{"N", alg.rank()}, {"columns", cols}};
    return out.dump();
}

std::pair<Algebra, SkewDiagram> diagram_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(e.what(), 0);
    }
    if (!j.is_object() || !j.contains("N") || !j.contains("columns"))
        throw parse_error("expected object with 'N' and 'columns'", 0);
    Algebra alg = Algebra::type_b(j["N"].get<int>());
    SkewDiagram d;
    int expect = 1;
    for (const auto& c : j["columns"]) {
        if (c.at("j").get<int>() != expect)
            throw parse_error("columns must be numbered 1..J in order", 0);
        d.columns.push_back({c.at("top").get<int>(), c.at("bottom").get<int>()});
        ++expect;
    }
    return {alg, d};
}

} // namespace bsnake
