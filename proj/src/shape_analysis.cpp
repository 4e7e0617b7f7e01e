#include "kisslab/shape_analysis.hpp"

#include "kisslab/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace kisslab {

namespace {

std::size_t index_of_vertex(const SimplePolygon& j, const Point& p) {
    for (std::size_t i = 0; i < j.size(); ++i)
        if (j.vertex(i) == p) return i;
    throw std::logic_error("hull vertex missing from the polygon");
}

} // namespace

PocketReport pockets(const SimplePolygon& j) {
    PocketReport report{convex_hull(j.vertices()), {}};
    const ConvexPolygon& hull = report.hull;
    const std::size_t n = j.size();

    for (std::size_t h = 0; h < hull.size(); ++h) {
        const Point& a = hull.vertex(h);
        const Point& b = hull.vertex((h + 1) % hull.size());
        const std::size_t ia = index_of_vertex(j, a);
        const std::size_t ib = index_of_vertex(j, b);
        if ((ia + 1) % n == ib) continue; // the hull edge is a polygon edge

        // Boundary arc from a to b in polygon order. Pockets split where the
        // arc returns to the chord: arc vertices on [a, b] pinch the region
        // between chord and arc into separate components.
        std::vector<Point> arc{a};
        for (std::size_t i = (ia + 1) % n; i != ib; i = (i + 1) % n) arc.push_back(j.vertex(i));
        arc.push_back(b);

        const Segment chord{a, b};
        std::vector<std::size_t> anchors;
        for (std::size_t i = 0; i < arc.size(); ++i)
            if (on_segment(arc[i], chord)) anchors.push_back(i);

        for (std::size_t t = 0; t + 1 < anchors.size(); ++t) {
            const std::size_t lo = anchors[t], hi = anchors[t + 1];
            if (hi == lo + 1) continue; // arc piece lies on the chord itself
            std::vector<Point> ring{arc[lo], arc[hi]};
            for (std::size_t i = hi - 1; i > lo; --i) ring.push_back(arc[i]);
            report.pockets.emplace_back(std::move(ring));
        }
    }
    return report;
}

namespace {

// Clips a convex region by the closed half-plane left of the directed edge.
std::vector<Point> clip_half_plane(const std::vector<Point>& subject, const Segment& edge) {
    const Vector d = edge.b - edge.a;
    const auto side = [&](const Point& p) { return cross(d, p - edge.a); };
    std::vector<Point> out;
    const std::size_t n = subject.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& s = subject[i];
        const Point& e = subject[(i + 1) % n];
        const Scalar ss = side(s), se = side(e);
        if (ss >= 0) out.push_back(s);
        if ((ss > 0 && se < 0) || (ss < 0 && se > 0)) {
            const Scalar t = ss / (ss - se);
            out.push_back(s + t * (e - s));
        }
    }
    return out;
}

Point vertex_average(const std::vector<Point>& pts) {
    Scalar sx = 0, sy = 0;
    for (const Point& p : pts) {
        sx += p.x;
        sy += p.y;
    }
    const Scalar n{static_cast<long>(pts.size())};
    return {sx / n, sy / n};
}

} // namespace

bool is_starlike_at(const SimplePolygon& j, const Point& center) {
    // The kernel of a simple polygon is the intersection of the inner closed
    // half-planes of its edges; membership needs no further clipping to J.
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Segment e = j.edge(i);
        if (cross(e.b - e.a, center - e.a) < 0) return false;
    }
    return true;
}

StarKernel star_kernel(const SimplePolygon& j) {
    const Box& b = j.box();
    std::vector<Point> region{{b.xmin, b.ymin}, {b.xmax, b.ymin}, {b.xmax, b.ymax},
                              {b.xmin, b.ymax}};
    for (std::size_t i = 0; i < j.size() && !region.empty(); ++i)
        region = clip_half_plane(region, j.edge(i));

    StarKernel kernel;
    const std::vector<Point> flat = hull_or_flat(region);
    if (flat.empty()) return kernel;
    if (flat.size() >= 3) {
        kernel.region = ConvexPolygon(flat);
        kernel.witness = vertex_average(kernel.region->vertices());
    } else {
        // Point or segment kernel: starlike, but no positive-area region.
        kernel.witness = flat.front();
    }
    return kernel;
}

namespace {

// Primitive integer direction with a lexicographically positive sign, the
// canonical representative of "parallel to".
std::pair<Int, Int> primitive_direction(const Vector& v) {
    Int a = numerator(v.x) * denominator(v.y);
    Int b = numerator(v.y) * denominator(v.x);
    const Int g = gcd(abs(a), abs(b)); // nonzero: v is a real direction
    a /= g;
    b /= g;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

// Intersection of J's boundary with the line through `anchor` along `u`,
// merged into maximal pieces and returned as parameter intervals along u
// (point pieces collapse to zero-length intervals).
std::vector<std::pair<Scalar, Scalar>> line_boundary_pieces(const SimplePolygon& j,
                                                            const Point& anchor, const Vector& u) {
    const Scalar uu = dot(u, u);
    std::vector<std::pair<Scalar, Scalar>> raw;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Segment e = j.edge(i);
        const bool a_on = cross(u, e.a - anchor) == 0;
        const bool b_on = cross(u, e.b - anchor) == 0;
        if (a_on && b_on) {
            Scalar ta = dot(e.a - anchor, u) / uu;
            Scalar tb = dot(e.b - anchor, u) / uu;
            if (ta > tb) std::swap(ta, tb);
            raw.emplace_back(ta, tb);
        } else if (a_on) {
            const Scalar t = dot(e.a - anchor, u) / uu;
            raw.emplace_back(t, t);
        } else if (b_on) {
            const Scalar t = dot(e.b - anchor, u) / uu;
            raw.emplace_back(t, t);
        }
        // A transversal edge crossing strictly between its endpoints cannot
        // happen on a supporting line (the edge would leave the hull).
    }
    std::sort(raw.begin(), raw.end());
    std::vector<std::pair<Scalar, Scalar>> merged;
    for (const auto& piece : raw) {
        if (!merged.empty() && piece.first <= merged.back().second) {
            if (piece.second > merged.back().second) merged.back().second = piece.second;
        } else {
            merged.push_back(piece);
        }
    }
    return merged;
}

} // namespace

std::optional<ParallelStripWitness> parallelogram_like_witness(const SimplePolygon& j) {
    const ConvexPolygon hull = convex_hull(j.vertices());

    std::vector<std::pair<Int, Int>> directions;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Segment e = hull.edge(i);
        directions.push_back(primitive_direction(e.b - e.a));
    }
    std::sort(directions.begin(), directions.end());
    directions.erase(std::unique(directions.begin(), directions.end()), directions.end());

    for (const auto& [dx, dy] : directions) {
        const Vector u{Scalar(dx), Scalar(dy)};
        const Vector normal{-u.y, u.x};
        // The two supporting lines of the hull orthogonal to `normal`.
        Scalar cmin = dot(normal, j.vertex(0)), cmax = cmin;
        Point amin = j.vertex(0), amax = j.vertex(0);
        for (const Point& v : j.vertices()) {
            const Scalar c = dot(normal, v);
            if (c < cmin) {
                cmin = c;
                amin = v;
            }
            if (c > cmax) {
                cmax = c;
                amax = v;
            }
        }
        const auto bottom = line_boundary_pieces(j, amin, u);
        const auto top = line_boundary_pieces(j, amax, u);
        // Theorem condition: each supporting line meets J in a single segment
        // of the same positive length lambda.
        if (bottom.size() != 1 || top.size() != 1) continue;
        const Scalar len_b = bottom[0].second - bottom[0].first;
        const Scalar len_t = top[0].second - top[0].first;
        if (len_b != len_t || len_b == 0) continue;

        const Segment seg_b{amin + bottom[0].first * u, amin + bottom[0].second * u};
        const Segment seg_t{amax + top[0].first * u, amax + top[0].second * u};
        // v = lambda * (unit u), which is exactly the shared segment vector;
        // prefer the lexicographically positive orientation.
        const Vector v = seg_b.b - seg_b.a; // parallel to u with |v| = lambda
        for (const Vector& cand : {v, -v}) {
            if (disk_relation(j, j.translated(cand)).relation == DiskRelation::Touch)
                return ParallelStripWitness{cand, seg_b, seg_t};
        }
    }
    return std::nullopt;
}

BoundsReport hadwiger_bounds(const SimplePolygon& j) {
    BoundsReport r;
    const auto exact = [&r](int value, BoundTag tag) {
        r.lower = value;
        r.upper = value;
        r.exact = value;
        r.rationale.push_back(tag);
    };
    if (j.convex()) {
        const bool parallelogram =
            j.size() == 4 && j.vertex(0) + j.vertex(2) == j.vertex(1) + j.vertex(3);
        exact(parallelogram ? 8 : 6, parallelogram ? BoundTag::Gruenbaum8 : BoundTag::Gruenbaum6);
        return r;
    }
    const PocketReport pr = pockets(j);
    if (pr.pockets.size() == 1) {
        const bool strip = parallelogram_like_witness(j).has_value();
        exact(strip ? 8 : 6, strip ? BoundTag::Pocket8 : BoundTag::Pocket6);
        return r;
    }
    const StarKernel kernel = star_kernel(j);
    if (kernel.starlike()) {
        r.lower = 6;
        r.rationale.push_back(BoundTag::GeneralLower6);
        r.upper = 35;
        r.rationale.push_back(BoundTag::Starlike35);
        const Point center = vertex_average(j.vertices());
        std::vector<Point> direct = j.vertices();
        std::vector<Point> mirrored;
        mirrored.reserve(direct.size());
        for (const Point& v : direct) mirrored.push_back(Scalar(2) * center - v);
        std::sort(direct.begin(), direct.end(), lex_less);
        std::sort(mirrored.begin(), mirrored.end(), lex_less);
        if (direct == mirrored && is_starlike_at(j, center)) {
            r.upper = 12;
            r.rationale.push_back(BoundTag::CentrallySymmetricStarlike12);
        }
        return r;
    }
    r.lower = 6;
    r.rationale = {BoundTag::GeneralLower6, BoundTag::Unbounded};
    return r;
}

const char* bound_tag_name(BoundTag tag) {
    switch (tag) {
        case BoundTag::Gruenbaum8: return "Gruenbaum8";
        case BoundTag::Gruenbaum6: return "Gruenbaum6";
        case BoundTag::Pocket8: return "Pocket8";
        case BoundTag::Pocket6: return "Pocket6";
        case BoundTag::Starlike35: return "Starlike35";
        case BoundTag::CentrallySymmetricStarlike12: return "CentrallySymmetricStarlike12";
        case BoundTag::GeneralLower6: return "GeneralLower6";
        case BoundTag::Unbounded: return "Unbounded";
    }
    return "?";
}

} // namespace kisslab
