#include "bsnake/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace bsnake {

namespace {
// canonical factor order
bool factor_less(const YFactor& a, const YFactor& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.node < b.node;
}
} // namespace

Monomial Monomial::y(int node, int level, int exp) {
    Monomial m;
    if (exp != 0) m.factors_.push_back({node, level, exp});
    return m;
}

int Monomial::u(int node, int level) const {
    for (const auto& f : factors_)
        if (f.node == node && f.level == level) return f.exp;
    return 0;
}

Monomial& Monomial::operator*=(const Monomial& o) {
    if (o.factors_.empty()) return *this;
    std::vector<YFactor> out;
    out.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = o.factors_.begin(), be = o.factors_.end();
    while (a != ae && b != be) {
        if (a->node == b->node && a->level == b->level) {
            int e = a->exp + b->exp;
            if (e != 0) out.push_back({a->node, a->level, e});
            ++a; ++b;
        } else if (factor_less(*a, *b)) {
            out.push_back(*a++);
        } else {
            out.push_back(*b++);
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    factors_ = std::move(out);
    return *this;
}

Monomial Monomial::inv() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
    Monomial m;
    if (e == 0) return m;
    m.factors_ = factors_;
    for (auto& f : m.factors_) f.exp *= e;
    return m;
}

bool Monomial::dominant() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const YFactor& f) { return f.exp > 0; });
}

bool Monomial::antidominant() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const YFactor& f) { return f.exp < 0; });
}

bool Monomial::node_dominant(int j) const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [j](const YFactor& f) { return f.node != j || f.exp > 0; });
}

Monomial Monomial::beta(const std::vector<int>& nodes) const {
    Monomial m;
    for (const auto& f : factors_)
        if (std::find(nodes.begin(), nodes.end(), f.node) != nodes.end())
            m.factors_.push_back(f);
    return m;
}

Monomial Monomial::beta(int node) const { return beta(std::vector<int>{node}); }

int Monomial::min_level() const {
    return factors_.empty() ? 0 : factors_.front().level;
}

int Monomial::max_level() const {
    return factors_.empty() ? 0 : factors_.back().level;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    const auto &fa = a.factors_, &fb = b.factors_;
    for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
        if (auto c = fa[i].level <=> fb[i].level; c != 0) return c;
        if (auto c = fa[i].node <=> fb[i].node; c != 0) return c;
        if (auto c = fa[i].exp <=> fb[i].exp; c != 0) return c;
    }
    return fa.size() <=> fb.size();
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull; // FNV-1a
    auto mix = [&h](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (const auto& f : factors_) {
        mix(static_cast<std::size_t>(f.node) + 0x9e3779b9);
        mix(static_cast<std::size_t>(f.level + 1000003));
        mix(static_cast<std::size_t>(f.exp + 1000003));
    }
    return h;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors_) {
        if (!first) os << ' ';
        first = false;
        os << "Y[" << f.node << ',' << f.level << ']';
        if (f.exp != 1) os << '^' << f.exp;
    }
    return os.str();
}

Monomial Monomial::parse(std::string_view text) {
    Monomial out;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; };
    auto parse_int = [&]() -> int {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit((unsigned char)text[start])))
            throw parse_error("expected integer", start);
        long v = std::stol(std::string(text.substr(start, pos - start)));
        if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
            throw parse_error("integer out of range", start);
        return static_cast<int>(v);
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
        std::size_t save = ++pos;
        skip_ws();
        if (pos == text.size()) return out;
        pos = save - 1;
        throw parse_error("unexpected input after '1'", save);
    }
    bool any = false;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != 'Y') throw parse_error("expected 'Y'", pos);
        ++pos;
        if (pos == text.size() || text[pos] != '[') throw parse_error("expected '['", pos);
        ++pos;
        int node = parse_int();
        if (pos == text.size() || text[pos] != ',') throw parse_error("expected ','", pos);
        ++pos;
        int level = parse_int();
        if (pos == text.size() || text[pos] != ']') throw parse_error("expected ']'", pos);
        ++pos;
        int exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t epos = pos;
            exp = parse_int();
            if (exp == 0) throw parse_error("zero exponent", epos);
        }
        if (node < 1) throw parse_error("node must be positive", pos);
        out *= Monomial::y(node, level, exp);
        any = true;
    }
    if (!any) throw parse_error("empty monomial text", 0);
    return out;
}

Monomial a_var(const Algebra& alg, int i, int k) {
    const int n = alg.rank();
    if (i < 1 || i > n) throw std::domain_error("node out of range");
    Monomial m;
    if (alg.sl2_mode()) {
        m *= Monomial::y(1, k + 1);
        m *= Monomial::y(1, k - 1);
        return m;
    }
    if (i == n) {
        m *= Monomial::y(n, k + 1);
        m *= Monomial::y(n, k - 1);
        m *= Monomial::y(n - 1, k, -1);
        return m;
    }
    m *= Monomial::y(i, k + 2);
    m *= Monomial::y(i, k - 2);
    if (i - 1 >= 1) m *= Monomial::y(i - 1, k, -1);
    if (i + 1 < n) {
        m *= Monomial::y(i + 1, k, -1);
    } else {
        // adjacent to the short root: two spin factors
        m *= Monomial::y(n, k + 1, -1);
        m *= Monomial::y(n, k - 1, -1);
    }
    return m;
}

Weight weight(const Algebra& alg, const Monomial& m) {
    Weight w(alg.rank(), 0);
    for (const auto& f : m.factors()) {
        if (f.node < 1 || f.node > alg.rank())
            throw std::domain_error("node out of range");
        w[f.node - 1] += f.exp;
    }
    return w;
}

Weight simple_root(const Algebra& alg, int i) {
    Weight w(alg.rank(), 0);
    for (int j = 1; j <= alg.rank(); ++j) w[j - 1] = alg.cartan(j, i);
    return w;
}

void QCharacter::add(const Monomial& m, long long mult) {
    if (mult == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        terms_.emplace(m, mult);
    } else {
        it->second += mult;
        if (it->second < 0) throw std::invalid_argument("negative multiplicity");
        if (it->second == 0) terms_.erase(it);
    }
}

long long QCharacter::mult(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

long long QCharacter::dimension() const {
    long long d = 0;
    for (const auto& [m, c] : terms_) d += c;
    return d;
}

std::vector<std::pair<Monomial, long long>> QCharacter::sorted_terms() const {
    std::vector<std::pair<Monomial, long long>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

QCharacter QCharacter::operator*(const QCharacter& o) const {
    QCharacter out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add(m1 * m2, c1 * c2);
    return out;
}

std::string QCharacter::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : sorted_terms()) {
        nlohmann::json fac = nlohmann::json::array();
        for (const auto& f : m.factors())
            fac.push_back({f.node, f.level, f.exp});
        terms.push_back({{"m", fac}, {"mult", c}});
    }
    nlohmann::json j{{"terms", terms}};
    return j.dump();
}

QCharacter QCharacter::from_json(std::string_view text) {
    QCharacter out;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(e.what(), 0);
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw parse_error("expected object with 'terms' array", 0);
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("m") || !t.contains("mult"))
            throw parse_error("term must carry 'm' and 'mult'", 0);
        Monomial m;
        for (const auto& f : t["m"]) {
            if (!f.is_array() || f.size() != 3)
                throw parse_error("factor must be [i,k,e]", 0);
            m *= Monomial::y(f[0].get<int>(), f[1].get<int>(), f[2].get<int>());
        }
        long long c = t["mult"].get<long long>();
        if (c < 1) throw parse_error("multiplicity must be >= 1", 0);
        out.add(m, c);
    }
    return out;
}

AFactorization a_minus_factorization(const Algebra& alg, const Monomial& base,
                                     const Monomial& m) {
    AFactorization res;
    Monomial q = base * m.inv(); // want q = prod A^{+c}
    if (q.is_one()) {
        res.in_lattice = res.all_nonnegative = res.support_in_w = true;
        return res;
    }
    const int lmin = q.min_level();
    // Eliminate from the top: the A with the highest variable Y_{j,l} is
    // A_{j,l-r_j}, and all other A's touching Y_{j,l} have strictly higher
    // top variables, so coefficients are forced level by level.
    std::vector<std::pair<SpectralPoint, int>> fac;
    while (!q.is_one()) {
        YFactor top = q.factors().back();
        int b = top.level - alg.r(top.node);
        if (b - alg.r(top.node) < lmin) return res; // below any admissible bottom
        fac.push_back({{top.node, b}, top.exp});
        q *= a_var(alg, top.node, b).pow(-top.exp);
    }
    res.in_lattice = true;
    res.all_nonnegative = true;
    res.support_in_w = true;
    for (const auto& [p, c] : fac) {
        if (c < 0) res.all_nonnegative = false;
        if (!alg.in_w(p)) res.support_in_w = false;
    }
    res.factors = std::move(fac);
    return res;
}

} // namespace bsnake
