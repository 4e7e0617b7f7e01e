#include "kisslab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace kisslab {

namespace {

// Fixed-format decimal, locale-independent enough for SVG (the global C
// locale is never changed by this library).
std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v == 0 ? 0.0 : v); // normalize -0
    return buf;
}

struct Bounds {
    double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
    bool any = false;

    void add(const Point& p) {
        const double x = scalar_double(p.x), y = scalar_double(p.y);
        if (!any) {
            xmin = xmax = x;
            ymin = ymax = y;
            any = true;
        } else {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
};

// Display coordinates flip the y-axis so the mathematical orientation is
// preserved on screen.
std::string coord_pair(const Point& p) {
    return num(scalar_double(p.x)) + "," + num(-scalar_double(p.y));
}

std::string polygon_points(const std::vector<Point>& ring, const Vector& shift) {
    std::string out;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (i) out += " ";
        out += coord_pair(ring[i] + shift);
    }
    return out;
}

std::string star_path(const SegmentStar& s, const Vector& shift) {
    std::string out;
    const Point c = s.center() + shift;
    for (const Point& e : s.endpoints()) {
        out += "M " + coord_pair(c) + " L " + coord_pair(e + shift) + " ";
    }
    if (!out.empty()) out.pop_back();
    return out;
}

} // namespace

std::string render_svg(const ShapeBase& base, const std::vector<Vector>& vectors,
                       const RenderOptions& options) {
    const auto* poly = std::get_if<SimplePolygon>(&base);
    const auto* star = std::get_if<SegmentStar>(&base);

    std::vector<Point> nodes;
    if (poly) {
        nodes = poly->vertices();
    } else {
        nodes.push_back(star->center());
        for (const Point& e : star->endpoints()) nodes.push_back(e);
    }

    Bounds b;
    for (const Point& p : nodes) b.add(p);
    for (const Vector& x : vectors)
        for (const Point& p : nodes) b.add(p + x);
    if (options.draw_vectors) b.add(Point{0, 0});
    if (!b.any) b.add(Point{0, 0});

    const double w = b.xmax - b.xmin, h = b.ymax - b.ymin;
    const double margin = 0.05 * std::max({w, h, 1.0});
    const double vx = b.xmin - margin;
    const double vy = -(b.ymax + margin); // flipped axis
    const double vw = w + 2 * margin;
    const double vh = h + 2 * margin;
    const double stroke = std::max(vw, vh) / 400.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(vx)
        << " " << num(vy) << " " << num(vw) << " " << num(vh) << "\">\n";

    const std::string base_style =
        "fill=\"#b9cdea\" stroke=\"#27457c\" stroke-width=\"" + num(stroke) + "\"";
    const std::string base_star_style =
        "fill=\"none\" stroke=\"#27457c\" stroke-width=\"" + num(2 * stroke) +
        "\" stroke-linecap=\"round\"";
    const std::string ok_style =
        "fill=\"none\" stroke=\"#4a4a4a\" stroke-width=\"" + num(stroke) + "\"";
    const std::string bad_style = "fill=\"none\" stroke=\"#c22424\" stroke-width=\"" +
                                  num(1.5 * stroke) + "\" stroke-dasharray=\"" +
                                  num(4 * stroke) + " " + num(3 * stroke) + "\"";

    std::vector<std::size_t> bad = options.violating;
    std::sort(bad.begin(), bad.end());
    const auto is_bad = [&](std::size_t i) {
        return std::binary_search(bad.begin(), bad.end(), i);
    };

    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const std::string& style = is_bad(i) ? bad_style : ok_style;
        if (poly)
            svg << "  <polygon points=\"" << polygon_points(poly->vertices(), vectors[i])
                << "\" " << style << "/>\n";
        else
            svg << "  <path d=\"" << star_path(*star, vectors[i]) << "\" " << style
                << " stroke-linecap=\"round\"/>\n";
    }

    if (poly)
        svg << "  <polygon points=\"" << polygon_points(poly->vertices(), Vector{0, 0})
            << "\" " << base_style << "/>\n";
    else
        svg << "  <path d=\"" << star_path(*star, Vector{0, 0}) << "\" " << base_star_style
            << "/>\n";

    if (options.draw_vectors) {
        const std::string arrow_style =
            "stroke=\"#1a7a3a\" stroke-width=\"" + num(stroke) + "\"";
        for (const Vector& x : vectors) {
            svg << "  <line x1=\"0\" y1=\"0\" x2=\"" << num(scalar_double(x.x)) << "\" y2=\""
                << num(-scalar_double(x.y)) << "\" " << arrow_style << "/>\n";
            svg << "  <circle cx=\"" << num(scalar_double(x.x)) << "\" cy=\""
                << num(-scalar_double(x.y)) << "\" r=\"" << num(2 * stroke)
                << "\" fill=\"#1a7a3a\"/>\n";
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace kisslab
