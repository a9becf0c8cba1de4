#include "taut/render.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace taut::lamination {

namespace {

// Fixed-precision, locale-independent float text.
std::string fmt(double v) {
    if (v == 0) v = 0;  // avoid "-0.000000"
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 6);
    return std::string(buf, res.ptr);
}

struct Vec {
    double x, y;
};

Vec point_on_circle(const CirclePoint& p) {
    double frac = static_cast<double>(p.num);
    for (int i = 0; i < p.scale; ++i) frac /= p.q;
    const double a = 2.0 * std::numbers::pi * frac;
    // y is negated so angles run counterclockwise on screen.
    return {std::cos(a), -std::sin(a)};
}

// Shade from dark to light as depth grows.
std::string depth_color(int depth, int max_depth) {
    const double t =
        max_depth <= 1 ? 0.0
                       : static_cast<double>(depth - 1) / (max_depth - 1);
    const int v = 32 + static_cast<int>(t * 150);
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", v, v, v);
    return buf;
}

const char* kPalette[] = {"#c6443c", "#3c78c6", "#3ca05a", "#c69a3c",
                          "#8a5ac6", "#3cb8b0", "#c65a96", "#7a8a3c"};

}  // namespace

std::string render_svg(const Lamination& lam, const PinchResult* result,
                       const RenderOptions& opts) {
    if (lam.chords.size() > opts.max_chords)
        throw BudgetError("lamination too large to render: " +
                          std::to_string(lam.chords.size()) + " chords");
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
       << "width=\"" << opts.size_px << "\" height=\"" << opts.size_px
       << "\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n"
       << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000000\" "
          "stroke-width=\"0.006\"/>\n";

    // Component tint: arcs of the pinched circle, colored by length class.
    if (result != nullptr && !result->boundaries.empty()) {
        for (std::size_t ci = 0; ci < result->boundaries.size(); ++ci) {
            std::uint64_t len = result->lengths[ci];
            int m = 0;
            while (len > 1) {
                len >>= 1;
                ++m;
            }
            const char* color = kPalette[m % (sizeof(kPalette) / sizeof(*kPalette))];
            for (const BoundaryItem& item : result->boundaries[ci]) {
                if (item.kind != BoundaryItem::Kind::arc) continue;
                const double f0 =
                    static_cast<double>(item.start) / result->grid;
                const double f1 = static_cast<double>(item.end) / result->grid;
                const double a0 = 2.0 * std::numbers::pi * f0;
                const double a1 = 2.0 * std::numbers::pi * f1;
                const Vec p0{std::cos(a0), -std::sin(a0)};
                const Vec p1{std::cos(a1), -std::sin(a1)};
                const int large = (f1 - f0) > 0.5 ? 1 : 0;
                os << "<path d=\"M " << fmt(p0.x) << ' ' << fmt(p0.y)
                   << " A 1 1 0 " << large << " 0 " << fmt(p1.x) << ' '
                   << fmt(p1.y) << "\" fill=\"none\" stroke=\"" << color
                   << "\" stroke-width=\"0.02\"/>\n";
            }
        }
    }

    for (const Chord& c : lam.chords) {
        const Vec u = point_on_circle(c.a);
        const Vec v = point_on_circle(c.b);
        const std::string color = depth_color(c.depth, lam.depth);
        const std::string width = fmt(std::max(0.0015, 0.008 / c.depth));
        const double dot = u.x * v.x + u.y * v.y;
        const bool diameter = std::abs(1.0 + dot) < 1e-9;
        if (opts.style == ChordStyle::straight || diameter) {
            os << "<line x1=\"" << fmt(u.x) << "\" y1=\"" << fmt(u.y)
               << "\" x2=\"" << fmt(v.x) << "\" y2=\"" << fmt(v.y)
               << "\" stroke=\"" << color << "\" stroke-width=\"" << width
               << "\"/>\n";
            continue;
        }
        // Circle through u, v orthogonal to the unit circle.
        const Vec ctr{(u.x + v.x) / (1.0 + dot), (u.y + v.y) / (1.0 + dot)};
        const double r =
            std::sqrt(std::max(0.0, ctr.x * ctr.x + ctr.y * ctr.y - 1.0));
        const double cross = (u.x - ctr.x) * (v.y - ctr.y) -
                             (u.y - ctr.y) * (v.x - ctr.x);
        const int sweep = cross > 0 ? 1 : 0;
        os << "<path d=\"M " << fmt(u.x) << ' ' << fmt(u.y) << " A " << fmt(r)
           << ' ' << fmt(r) << " 0 0 " << sweep << ' ' << fmt(v.x) << ' '
           << fmt(v.y) << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"" << width << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace taut::lamination
