#include "bsnake/paths.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "json.hpp"

namespace bsnake {

namespace {

// Spin-point paths: N-1 signed +-2 steps, then a final +-(1+eps) step.
std::vector<Path> enum_spin_paths(const Algebra& alg, SpectralPoint owner) {
    const int n = alg.rank();
    std::vector<int> xs(n + 1);
    if (mod4(owner.level) == 3)
        for (int j = 0; j <= n; ++j) xs[j] = j < n ? 2 * j : 2 * n - 1;
    else
        for (int j = 0; j <= n; ++j) xs[j] = j < n ? 4 * n - 2 - 2 * j : 2 * n - 1;
    std::vector<Path> out;
    out.reserve(std::size_t(1) << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Path p;
        p.owner = owner;
        p.points.resize(n + 1);
        int y = owner.level + 2 * n - 1;
        p.points[0] = {xs[0], y, 0};
        for (int j = 1; j < n; ++j) {
            y += (mask >> (j - 1)) & 1 ? 2 : -2;
            p.points[j] = {xs[j], y, 0};
        }
        bool up = (mask >> (n - 1)) & 1;
        p.points[n] = {xs[n], up ? y + 1 : y - 1, up ? 1 : -1};
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

std::vector<Path> enum_paths(const Algebra& alg, SpectralPoint owner) {
    if (alg.sl2_mode())
        throw std::domain_error("path model is defined for type B only");
    if (!alg.in_x(owner))
        throw std::domain_error("owner not in X");
    const int n = alg.rank();
    if (owner.node == n) return enum_spin_paths(alg, owner);
    const int off = 2 * n - 2 * owner.node - 1;
    auto first = enum_spin_paths(alg, {n, owner.level - off});
    auto second = enum_spin_paths(alg, {n, owner.level + off});
    std::vector<Path> out;
    for (const auto& a : first) {
        for (const auto& b : second) {
            if (a.points.back().scaled_y() <= b.points.back().scaled_y()) continue;
            Path p;
            p.owner = owner;
            p.points = a.points;
            p.points.insert(p.points.end(), b.points.rbegin(), b.points.rend());
            out.push_back(std::move(p));
        }
    }
    return out;
}

Corners corners(const Algebra& alg, const Path& p) {
    const int n = alg.rank();
    const int spin_x = 2 * n - 1;
    Corners c;
    for (std::size_t r = 1; r + 1 < p.points.size(); ++r) {
        const auto& pt = p.points[r];
        if (pt.x == 0 || pt.x == spin_x || pt.x == 4 * n - 2) continue;
        int y0 = p.points[r - 1].scaled_y(), y1 = pt.scaled_y(), y2 = p.points[r + 1].scaled_y();
        if (y0 > y1 && y2 > y1) c.upper.push_back(alg.iota_inverse(pt));
        if (y0 < y1 && y2 < y1) c.lower.push_back(alg.iota_inverse(pt));
    }
    // spin clauses: a single visit at l -+ eps makes (N,l) an upper/lower corner
    auto has = [&](int y, int eps) {
        for (const auto& pt : p.points)
            if (pt.x == spin_x && pt.y == y && pt.eps == eps) return true;
        return false;
    };
    for (const auto& pt : p.points) {
        if (pt.x != spin_x) continue;
        if (pt.eps == -1 && !has(pt.y, +1)) c.upper.push_back({n, pt.y});
        if (pt.eps == +1 && !has(pt.y, -1)) c.lower.push_back({n, pt.y});
    }
    auto key = [](const SpectralPoint& s) { return std::pair(s.level, s.node); };
    std::sort(c.upper.begin(), c.upper.end(),
              [&](auto& a, auto& b) { return key(a) < key(b); });
    std::sort(c.lower.begin(), c.lower.end(),
              [&](auto& a, auto& b) { return key(a) < key(b); });
    return c;
}

Monomial path_monomial(const Algebra& alg, const Path& p) {
    auto c = corners(alg, p);
    Monomial m;
    for (const auto& s : c.upper) m *= Monomial::y(s.node, s.level);
    for (const auto& s : c.lower) m *= Monomial::y(s.node, s.level, -1);
    return m;
}

const PathSet& path_set(const Algebra& alg, SpectralPoint owner) {
    struct Key {
        int rank, node, level;
        auto operator<=>(const Key&) const = default;
    };
    static std::map<Key, PathSet> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    Key key{alg.rank(), owner.node, owner.level};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    PathSet ps;
    ps.owner = owner;
    ps.paths = enum_paths(alg, owner);
    const int cols = 4 * alg.rank() - 1;
    for (int i = 0; i < (int)ps.paths.size(); ++i) {
        ps.corners.push_back(corners(alg, ps.paths[i]));
        Monomial m;
        for (const auto& s : ps.corners.back().upper) m *= Monomial::y(s.node, s.level);
        for (const auto& s : ps.corners.back().lower) m *= Monomial::y(s.node, s.level, -1);
        ps.monomials.push_back(m);
        if (!ps.index_by_monomial.emplace(m, i).second)
            throw std::logic_error("path monomials not injective");
        if (ps.corners.back().lower.empty()) {
            if (ps.highest >= 0) throw std::logic_error("two highest paths");
            ps.highest = i;
        }
        if (ps.corners.back().upper.empty()) {
            if (ps.lowest >= 0) throw std::logic_error("two lowest paths");
            ps.lowest = i;
        }
        std::vector<int> cmin(cols, INT_MAX), cmax(cols, INT_MIN);
        for (const auto& pt : ps.paths[i].points) {
            cmin[pt.x] = std::min(cmin[pt.x], pt.scaled_y());
            cmax[pt.x] = std::max(cmax[pt.x], pt.scaled_y());
        }
        ps.col_min.push_back(std::move(cmin));
        ps.col_max.push_back(std::move(cmax));
    }
    if (ps.highest < 0 || ps.lowest < 0)
        throw std::logic_error("missing extremal path");
    return cache.emplace(key, std::move(ps)).first->second;
}

Path highest_path(const Algebra& alg, SpectralPoint owner) {
    const auto& ps = path_set(alg, owner);
    return ps.paths[ps.highest];
}

Path lowest_path(const Algebra& alg, SpectralPoint owner) {
    const auto& ps = path_set(alg, owner);
    return ps.paths[ps.lowest];
}

bool can_lower(const Algebra& alg, const Path& p, SpectralPoint at) {
    if (!alg.in_w(at)) throw std::domain_error("lowering point not in W");
    auto c = corners(alg, p);
    int rj = alg.r(at.node);
    auto in = [&](const std::vector<SpectralPoint>& v, SpectralPoint s) {
        return std::find(v.begin(), v.end(), s) != v.end();
    };
    return in(c.upper, {at.node, at.level - rj}) && !in(c.upper, {at.node, at.level + rj});
}

Path lower(const Algebra& alg, const Path& p, SpectralPoint at) {
    if (!can_lower(alg, p, at))
        throw std::invalid_argument("path cannot be lowered at this point");
    const auto& ps = path_set(alg, p.owner);
    Monomial target = path_monomial(alg, p) * a_var(alg, at.node, at.level).inv();
    auto it = ps.index_by_monomial.find(target);
    if (it == ps.index_by_monomial.end())
        throw std::logic_error("lowering has no image path");
    return ps.paths[it->second];
}

bool can_raise(const Algebra& alg, const Path& p, SpectralPoint at) {
    if (!alg.in_w(at)) throw std::domain_error("raising point not in W");
    auto c = corners(alg, p);
    int rj = alg.r(at.node);
    auto in = [&](const std::vector<SpectralPoint>& v, SpectralPoint s) {
        return std::find(v.begin(), v.end(), s) != v.end();
    };
    return in(c.lower, {at.node, at.level + rj}) && !in(c.lower, {at.node, at.level - rj});
}

Path raise(const Algebra& alg, const Path& p, SpectralPoint at) {
    if (!can_raise(alg, p, at))
        throw std::invalid_argument("path cannot be raised at this point");
    const auto& ps = path_set(alg, p.owner);
    Monomial target = path_monomial(alg, p) * a_var(alg, at.node, at.level);
    auto it = ps.index_by_monomial.find(target);
    if (it == ps.index_by_monomial.end())
        throw std::logic_error("raising has no image path");
    return ps.paths[it->second];
}

bool strictly_above(const Algebra& alg, const Path& p, const Path& q) {
    const int cols = 4 * alg.rank() - 1;
    std::vector<int> pmax(cols, INT_MIN), qmin(cols, INT_MAX);
    for (const auto& pt : p.points) pmax[pt.x] = std::max(pmax[pt.x], pt.scaled_y());
    for (const auto& pt : q.points) qmin[pt.x] = std::min(qmin[pt.x], pt.scaled_y());
    for (int x = 0; x < cols; ++x)
        if (pmax[x] != INT_MIN && qmin[x] != INT_MAX && pmax[x] >= qmin[x]) return false;
    return true;
}

bool non_overlapping(const Algebra& alg, const std::vector<Path>& tuple) {
    for (std::size_t s = 0; s < tuple.size(); ++s)
        for (std::size_t t = s + 1; t < tuple.size(); ++t)
            if (!strictly_above(alg, tuple[s], tuple[t])) return false;
    return true;
}

LetterSets letter_sets(const Algebra& alg, const Path& p) {
    const int n = alg.rank();
    LetterSets ls;
    if (p.owner.node == n) {
        // one half; letter r records the sign of step r, descents into R
        for (int r = 1; r <= n; ++r) {
            int dy = p.points[r].scaled_y() - p.points[r - 1].scaled_y();
            (dy < 0 ? ls.R : ls.Rbar).push_back(r);
        }
        return ls;
    }
    // first half read forwards, second half read from its outer end
    for (int r = 1; r <= n; ++r) {
        int dy = p.points[r].scaled_y() - p.points[r - 1].scaled_y();
        (dy > 0 ? ls.Rbar : ls.S).push_back(r);
    }
    const int last = (int)p.points.size() - 1; // = 2n+1
    for (int r = 1; r <= n; ++r) {
        int dy = p.points[last - r].scaled_y() - p.points[last - r + 1].scaled_y();
        (dy < 0 ? ls.R : ls.Sbar).push_back(r);
    }
    return ls;
}

std::vector<int> set_restrict(const std::vector<int>& ordered, int k, RestrictSide side) {
    if (k < 0) throw std::invalid_argument("restriction count must be >= 0");
    if (k >= (int)ordered.size()) return {};
    if (side == RestrictSide::head)
        return std::vector<int>(ordered.begin() + k, ordered.end());
    return std::vector<int>(ordered.begin(), ordered.end() - k);
}

std::string path_to_json(const Path& p) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& pt : p.points) pts.push_back({pt.x, pt.y, pt.eps});
    nlohmann::json j{{"owner", {p.owner.node, p.owner.level}}, {"points", pts}};
    return j.dump();
}

Path path_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(e.what(), 0);
    }
    Path p;
    p.owner = {j.at("owner").at(0).get<int>(), j.at("owner").at(1).get<int>()};
    for (const auto& pt : j.at("points"))
        p.points.push_back({pt.at(0).get<int>(), pt.at(1).get<int>(), pt.at(2).get<int>()});
    return p;
}

} // namespace bsnake
