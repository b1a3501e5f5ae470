#include "bsnake/render.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace bsnake {

namespace {
// fixed-point coordinates (eps drawn as 0.3)
std::string coord(int v10) {
    std::ostringstream os;
    os << v10 / 10;
    if (v10 % 10) os << '.' << std::abs(v10 % 10);
    return os.str();
}
} // namespace

std::string svg_paths(const Algebra& alg, const std::vector<Path>& paths) {
    const int n = alg.rank();
    const int cols = 4 * n - 2;
    int ymin = 0, ymax = 1;
    for (const auto& p : paths)
        for (const auto& pt : p.points) {
            ymin = std::min(ymin, pt.y - 1);
            ymax = std::max(ymax, pt.y + 1);
        }
    const int scale = 20, margin = 20;
    auto px = [&](int x) { return margin * 10 + x * scale * 10; };
    auto py = [&](int y10) { return margin * 10 + (y10 - ymin * 10) * scale; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << coord(px(cols) + margin * 10) << "\" height=\""
       << coord(py(ymax * 10) + margin * 10) << "\">\n";
    for (int x = 0; x <= cols; ++x)
        os << "<line x1=\"" << coord(px(x)) << "\" y1=\"" << coord(py(ymin * 10))
           << "\" x2=\"" << coord(px(x)) << "\" y2=\"" << coord(py(ymax * 10))
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (int y = ymin; y <= ymax; ++y)
        os << "<line x1=\"" << coord(px(0)) << "\" y1=\"" << coord(py(y * 10))
           << "\" x2=\"" << coord(px(cols)) << "\" y2=\"" << coord(py(y * 10))
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (const auto& p : paths) {
        os << "<polyline fill=\"none\" stroke=\"#202020\" stroke-width=\"2\" points=\"";
        bool first = true;
        for (const auto& pt : p.points) {
            if (!first) os << ' ';
            first = false;
            os << coord(px(pt.x)) << ',' << coord(py(pt.y * 10 + pt.eps * 3));
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string ascii_tableau(const Tableau& t) {
    const auto& d = t.shape;
    if (d.column_count() == 0) return "";
    int rmin = INT_MAX, rmax = INT_MIN;
    for (const auto& c : d.columns) {
        rmin = std::min(rmin, c.top);
        rmax = std::max(rmax, c.bottom);
    }
    std::size_t width = 1;
    for (const auto& col : t.fill)
        for (const auto& c : col) width = std::max(width, c.token().size());
    std::ostringstream os;
    for (int row = rmin; row <= rmax; ++row) {
        for (int j = 1; j <= d.column_count(); ++j) {
            std::string tok = d.contains(row, j) ? t.at(row, j).token() : ".";
            os << std::string(width + 1 - tok.size(), ' ') << tok;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace bsnake
