#include <sstream>

#include "asv/errors.hpp"
#include "asv/geometry.hpp"

namespace asv {

namespace {

using Poly = std::vector<Point2>;

// Sutherland-Hodgman step: keep the part of `poly` where a*x + b*y <= r.
Poly clip(const Poly& poly, const Rational& a, const Rational& b, const Rational& r) {
    Poly out;
    auto val = [&](const Point2& p) { return Rational(a * p.x + b * p.y - r); };
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % poly.size()];
        Rational fp = val(p), fq = val(q);
        if (fp <= 0) out.push_back(p);
        if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
            Rational t = fp / (fp - fq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

}  // namespace

std::string region_svg(const std::vector<std::pair<Region, std::string>>& layers, const SvgWindow& w,
                       const std::string& title) {
    const int size = 400;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
        << size << ' ' << size << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty()) out << "<title>" << title << "</title>\n";
    auto sx = [&](const Rational& x) { return Rational((x - w.xmin) / (w.xmax - w.xmin) * size).get_d(); };
    auto sy = [&](const Rational& y) { return Rational((w.ymax - y) / (w.ymax - w.ymin) * size).get_d(); };

    // Axes through the origin when visible.
    if (w.xmin <= 0 && w.xmax >= 0) out << "<line x1=\"" << sx(0) << "\" y1=\"0\" x2=\"" << sx(0) << "\" y2=\"" << size << "\" stroke=\"#999\"/>\n";
    if (w.ymin <= 0 && w.ymax >= 0) out << "<line x1=\"0\" y1=\"" << sy(0) << "\" x2=\"" << size << "\" y2=\"" << sy(0) << "\" stroke=\"#999\"/>\n";

    for (const auto& [region, colour] : layers) {
        if (region.vars.size() != 2) throw DomainError("SVG output needs a region over exactly two variables");
        const int ix = static_cast<int>(region.vars[0]);
        const int iy = static_cast<int>(region.vars[1]);
        for (const auto& cell : region.cells) {
            Poly poly{{w.xmin, w.ymin}, {w.xmax, w.ymin}, {w.xmax, w.ymax}, {w.xmin, w.ymax}};
            bool dashed = false;
            for (const auto& c : simplify(cell).cons) {
                Rational a = c.coef[ix], b = c.coef[iy];
                if (c.rel == Rel::Lt) dashed = true;
                if (c.rel == Rel::Eq) {
                    poly = clip(poly, a, b, c.rhs);
                    poly = clip(poly, -a, -b, -c.rhs);
                } else {
                    poly = clip(poly, a, b, c.rhs);
                }
                if (poly.empty()) break;
            }
            if (poly.empty()) continue;
            out << "<polygon points=\"";
            for (const auto& p : poly) out << sx(p.x) << ',' << sy(p.y) << ' ';
            out << "\" fill=\"" << colour << "\" fill-opacity=\"0.35\" stroke=\"" << colour << "\"";
            if (dashed) out << " stroke-dasharray=\"4 3\"";
            out << "/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace asv
