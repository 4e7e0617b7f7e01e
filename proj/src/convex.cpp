#include "kisslab/convex.hpp"

#include "kisslab/errors.hpp"

#include <algorithm>
#include <utility>

namespace kisslab {

namespace {

// Rotates a CCW strictly convex ring so the lexicographically smallest vertex
// leads; the canonical form behind ConvexPolygon equality.
std::vector<Point> canonical_rotation(std::vector<Point> ring) {
    const auto lead = std::min_element(ring.begin(), ring.end(), lex_less);
    std::rotate(ring.begin(), lead, ring.end());
    return ring;
}

// Collapses collinear runs in a convex CCW ring (as produced by edge merges).
std::vector<Point> strict_convex_ring(const std::vector<Point>& ring) {
    std::vector<Point> out;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& prev = ring[(i + n - 1) % n];
        const Point& v = ring[i];
        const Point& next = ring[(i + 1) % n];
        if (v == next) continue;
        if (orientation(prev, v, next) == Orientation::Collinear) continue;
        out.push_back(v);
    }
    return out;
}

} // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) {
    std::vector<Point> ring = strict_convex_ring(vertices);
    if (ring.size() < 3) throw ValidationError("convex polygon needs at least 3 vertices");
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]) !=
            Orientation::CounterClockwise)
            throw ValidationError("vertex ring is not counterclockwise convex");
    }
    vertices_ = canonical_rotation(std::move(ring));
    box_ = bounding_box(vertices_);
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices, Trusted)
    : vertices_(std::move(vertices)), box_(bounding_box(vertices_)) {}

Segment ConvexPolygon::edge(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
}

Scalar ConvexPolygon::area() const { return signed_area_twice(vertices_) / 2; }

ConvexPolygon ConvexPolygon::translated(const Vector& t) const {
    std::vector<Point> moved;
    moved.reserve(vertices_.size());
    for (const Point& v : vertices_) moved.push_back(v + t);
    return ConvexPolygon(canonical_rotation(std::move(moved)), Trusted{});
}

ConvexPolygon ConvexPolygon::reflected() const {
    std::vector<Point> moved;
    moved.reserve(vertices_.size());
    // Point reflection keeps the counterclockwise order.
    for (const Point& v : vertices_) moved.push_back(-v);
    return ConvexPolygon(canonical_rotation(std::move(moved)), Trusted{});
}

ConvexPolygon ConvexPolygon::scaled(const Scalar& s) const {
    if (s <= 0) throw ValidationError("scale factor must be positive");
    std::vector<Point> moved;
    moved.reserve(vertices_.size());
    for (const Point& v : vertices_) moved.push_back(s * v);
    return ConvexPolygon(canonical_rotation(std::move(moved)), Trusted{});
}

SimplePolygon ConvexPolygon::as_simple() const { return SimplePolygon(vertices_); }

namespace {

std::vector<Point> dedup_sorted(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

std::vector<Point> hull_or_flat(const std::vector<Point>& points) {
    std::vector<Point> pts = dedup_sorted(points);
    if (pts.size() <= 2) return pts;
    // Andrew's monotone chain with strict turns, so collinear points drop out.
    std::vector<Point> lower, upper;
    for (const Point& p : pts) {
        while (lower.size() >= 2 &&
               orientation(lower[lower.size() - 2], lower.back(), p) !=
                   Orientation::CounterClockwise)
            lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 &&
               orientation(upper[upper.size() - 2], upper.back(), *it) !=
                   Orientation::CounterClockwise)
            upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

ConvexPolygon convex_hull(const std::vector<Point>& points) {
    std::vector<Point> ring = hull_or_flat(points);
    if (ring.size() < 3) throw DegenerateHull("hull is a point or a segment");
    // Monotone chain already starts at the lexicographic minimum.
    return ConvexPolygon(std::move(ring));
}

ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b) {
    // Classic edge-sequence merge. Start both rings at their bottommost (then
    // leftmost) vertex so edge directions are sorted by angle in [0, 2pi).
    const auto bottom_start = [](const ConvexPolygon& p) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < p.size(); ++i) {
            const Point& v = p.vertex(i);
            const Point& w = p.vertex(best);
            if (v.y < w.y || (v.y == w.y && v.x < w.x)) best = i;
        }
        return best;
    };
    // Angle order on directions with angles in [0, 2pi): by half-plane, then
    // by cross product within the half.
    const auto angle_less = [](const Vector& u, const Vector& v) {
        const int hu = (u.y > 0 || (u.y == 0 && u.x > 0)) ? 0 : 1;
        const int hv = (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
        if (hu != hv) return hu < hv;
        return cross(u, v) > 0;
    };

    const std::size_t na = a.size(), nb = b.size();
    const std::size_t sa = bottom_start(a), sb = bottom_start(b);
    std::vector<Point> ring;
    ring.reserve(na + nb);
    Point cur = a.vertex(sa) + b.vertex(sb);
    std::size_t i = 0, j = 0;
    while (i < na || j < nb) {
        ring.push_back(cur);
        const Vector ea = a.edge((sa + i) % na).b - a.edge((sa + i) % na).a;
        const Vector eb = b.edge((sb + j) % nb).b - b.edge((sb + j) % nb).a;
        if (j >= nb || (i < na && angle_less(ea, eb))) {
            cur = cur + ea;
            ++i;
        } else if (i >= na || angle_less(eb, ea)) {
            cur = cur + eb;
            ++j;
        } else { // parallel edges advance together
            cur = cur + ea + eb;
            ++i;
            ++j;
        }
    }
    return ConvexPolygon(std::move(ring));
}

ConvexPolygon difference_body(const ConvexPolygon& k) { return minkowski_sum(k, k.reflected()); }

ConvexPolygon central_symmetral(const ConvexPolygon& k) {
    return difference_body(k).scaled(Scalar(1, 2));
}

bool centrally_symmetric(const ConvexPolygon& k, const Point& center) {
    std::vector<Point> direct = k.vertices();
    std::vector<Point> mirrored;
    mirrored.reserve(direct.size());
    for (const Point& v : direct) mirrored.push_back(Scalar(2) * center - v);
    std::sort(direct.begin(), direct.end(), lex_less);
    std::sort(mirrored.begin(), mirrored.end(), lex_less);
    return direct == mirrored;
}

std::optional<Point> symmetry_center(const ConvexPolygon& k) {
    // A symmetric vertex set averages to its center, so there is one candidate.
    Scalar sx = 0, sy = 0;
    for (const Point& v : k.vertices()) {
        sx += v.x;
        sy += v.y;
    }
    const Scalar n{static_cast<long>(k.size())};
    const Point c{sx / n, sy / n};
    if (centrally_symmetric(k, c)) return c;
    return std::nullopt;
}

namespace {

// Chord of `disk` cut by the line through `anchor` parallel to d, as a
// parameter interval along d. The anchor must lie in the disk.
std::pair<Scalar, Scalar> chord_span(const ConvexPolygon& disk, const Point& anchor,
                                     const Vector& d) {
    bool have = false;
    Scalar lo = 0, hi = 0;
    const auto take = [&](const Scalar& t) {
        if (!have) {
            lo = hi = t;
            have = true;
        } else {
            if (t < lo) lo = t;
            if (t > hi) hi = t;
        }
    };
    const Scalar dd = dot(d, d);
    for (std::size_t i = 0; i < disk.size(); ++i) {
        const Segment e = disk.edge(i);
        const Vector de = e.b - e.a;
        const Scalar denom = cross(d, de);
        if (denom == 0) {
            // Parallel edge: on the line it contributes both endpoints.
            if (cross(e.a - anchor, d) == 0) {
                take(dot(e.a - anchor, d) / dd);
                take(dot(e.b - anchor, d) / dd);
            }
            continue;
        }
        const Scalar t = cross(e.a - anchor, de) / denom;      // along the line
        const Scalar s = cross(e.a - anchor, d) / denom;       // along the edge
        if (s >= 0 && s <= 1) take(t);
    }
    return {lo, hi};
}

} // namespace

Segment longest_chord(const ConvexPolygon& disk, const Direction& dir) {
    const Vector d = dir.vector();
    // The chord length against the line offset is concave and piecewise
    // linear, so some vertex-anchored line attains the maximum; when a whole
    // strip of chords ties, the extreme offsets are vertex-anchored too and
    // carry the lexicographic minimum.
    std::optional<Segment> best;
    Scalar best_len = -1; // in units of |d|, comparable across anchors
    for (const Point& v : disk.vertices()) {
        const auto [lo, hi] = chord_span(disk, v, d);
        const Scalar len = hi - lo;
        Point p = v + lo * d;
        Point q = v + hi * d;
        if (lex_less(q, p)) std::swap(p, q);
        const bool better =
            len > best_len ||
            (len == best_len && (lex_less(p, best->a) || (p == best->a && lex_less(q, best->b))));
        if (better) {
            best = Segment{p, q};
            best_len = len;
        }
    }
    return *best;
}

Scalar gauge(const ConvexPolygon& b, const Vector& v) {
    if (v.x == 0 && v.y == 0) return 0;
    if (point_location(Point{0, 0}, b.vertices()) != Location::Interior)
        throw ValidationError("gauge body must contain the origin in its interior");
    // v sits on the boundary of g*b exactly when v/g is on an edge of b.
    // Solve v/g = e.a + w*de per edge: crossing with de isolates g. The origin
    // is interior, so no edge line passes through it and cross(e.a, de) != 0.
    for (std::size_t i = 0; i < b.size(); ++i) {
        const Segment e = b.edge(i);
        const Vector de = e.b - e.a;
        if (cross(v, de) == 0) continue; // ray parallel to the edge
        const Scalar g = cross(v, de) / cross(e.a, de);
        if (g <= 0) continue;
        const Point hit{v.x / g, v.y / g};
        if (on_segment(hit, e)) return g;
    }
    throw ValidationError("gauge ray escaped the body (invalid convex polygon)");
}

Scalar minkowski_perimeter(const ConvexPolygon& c, const ConvexPolygon& b) {
    if (!centrally_symmetric(b, Point{0, 0}))
        throw ValidationError("norm body must be centrally symmetric about the origin");
    Scalar total = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Segment e = c.edge(i);
        total += gauge(b, e.b - e.a);
    }
    return total;
}

Scalar relative_distance(const ConvexPolygon& disk, const Point& p, const Point& q) {
    if (p == q) return 0;
    const Vector d = q - p;
    const Segment chord = longest_chord(disk, Direction(d));
    const Vector cd = chord.b - chord.a;
    // Ratio of parallel segments, exact: pick a nonzero coordinate of cd.
    const Scalar ratio = (cd.x != 0) ? d.x / cd.x : d.y / cd.y;
    const Scalar r = ratio < 0 ? -ratio : ratio;
    return 2 * r;
}

std::optional<Vector> parallelogram_translate_witness(const ConvexPolygon& k) {
    const ConvexPolygon sym = central_symmetral(k);
    if (sym.size() != 4) return std::nullopt;
    // The symmetral is a parallelogram; k must then be one of its translates.
    if (k.size() != 4)
        throw std::logic_error("symmetral is a parallelogram but the body is not");
    Scalar sx = 0, sy = 0;
    for (const Point& v : k.vertices()) {
        sx += v.x;
        sy += v.y;
    }
    const Vector t{sx / 4, sy / 4}; // symmetral is centered on the origin
    if (!(sym.translated(t) == k))
        throw std::logic_error("symmetral is a parallelogram but the body is not its translate");
    return t;
}

} // namespace kisslab
