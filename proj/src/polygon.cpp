#include "kisslab/polygon.hpp"

#include "kisslab/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace kisslab {

Scalar signed_area_twice(const std::vector<Point>& ring) {
    Scalar s = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % ring.size()];
        s += cross(a, b);
    }
    return s;
}

namespace {

// Removes consecutive duplicates and vertices lying strictly between their
// cyclic neighbours on one line, repeating until stable (a removal can make a
// new triple collinear). Spur tips (collinear but not between) are kept; the
// simplicity check rejects them with a better diagnostic.
std::vector<Point> normalize_ring(std::vector<Point> ring) {
    bool changed = true;
    while (changed && ring.size() >= 3) {
        changed = false;
        std::vector<Point> next;
        next.reserve(ring.size());
        const std::size_t n = ring.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& prev = ring[(i + n - 1) % n];
            const Point& v = ring[i];
            const Point& nxt = ring[(i + 1) % n];
            if (v == nxt) { // keep the later copy only
                changed = true;
                continue;
            }
            if (prev != nxt && orientation(prev, v, nxt) == Orientation::Collinear &&
                on_segment(v, Segment{prev, nxt}) && v != prev && v != nxt) {
                changed = true;
                continue;
            }
            next.push_back(v);
        }
        ring = std::move(next);
    }
    return ring;
}

[[noreturn]] void edge_pair_error(std::size_t i, std::size_t j, const char* what) {
    std::ostringstream msg;
    msg << "polygon boundary is not simple: edges " << i << " and " << j << " " << what;
    throw ValidationError(msg.str());
}

void require_simple(const std::vector<Point>& ring) {
    const std::size_t n = ring.size();
    const auto edge = [&](std::size_t i) {
        return Segment{ring[i], ring[(i + 1) % n]};
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const SegmentRelation rel = segments_relation(edge(i), edge(j));
            if (adjacent) {
                if (rel == SegmentRelation::CollinearOverlap) edge_pair_error(i, j, "overlap");
            } else if (rel != SegmentRelation::Disjoint) {
                edge_pair_error(i, j, "intersect");
            }
        }
    }
}

} // namespace

namespace {

bool ring_convex(const std::vector<Point>& ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]) !=
            Orientation::CounterClockwise)
            return false;
    }
    return true;
}

} // namespace

SimplePolygon::SimplePolygon(std::vector<Point> vertices)
    : vertices_(normalize_ring(std::move(vertices))) {
    if (vertices_.size() < 3)
        throw ValidationError("polygon needs at least 3 vertices after normalization");
    require_simple(vertices_);
    const Scalar area2 = signed_area_twice(vertices_);
    if (area2 == 0) throw ValidationError("polygon has zero area");
    if (area2 < 0) std::reverse(vertices_.begin(), vertices_.end());
    box_ = bounding_box(vertices_);
    convex_ = ring_convex(vertices_);
}

SimplePolygon::SimplePolygon(std::vector<Point> vertices, Trusted)
    : vertices_(std::move(vertices)), box_(bounding_box(vertices_)),
      convex_(ring_convex(vertices_)) {}

Segment SimplePolygon::edge(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
}

Scalar SimplePolygon::area() const { return signed_area_twice(vertices_) / 2; }

SimplePolygon SimplePolygon::translated(const Vector& t) const {
    std::vector<Point> moved;
    moved.reserve(vertices_.size());
    for (const Point& v : vertices_) moved.push_back(v + t);
    return SimplePolygon(std::move(moved), Trusted{});
}

SimplePolygon SimplePolygon::affine_image(const Scalar& m00, const Scalar& m01, const Scalar& m10,
                                          const Scalar& m11, const Vector& t) const {
    const Scalar det = m00 * m11 - m01 * m10;
    if (det == 0) throw ValidationError("affine map is singular");
    std::vector<Point> moved;
    moved.reserve(vertices_.size());
    for (const Point& v : vertices_)
        moved.push_back(Point{m00 * v.x + m01 * v.y + t.x, m10 * v.x + m11 * v.y + t.y});
    // Invertible affine maps preserve simplicity, betweenness and vertex
    // distinctness, so the image is already normalized; only the orientation
    // can flip.
    if (det < 0) std::reverse(moved.begin(), moved.end());
    return SimplePolygon(std::move(moved), Trusted{});
}

bool same_region(const SimplePolygon& a, const SimplePolygon& b) {
    const std::size_t n = a.size();
    if (n != b.size()) return false;
    for (std::size_t shift = 0; shift < n; ++shift) {
        if (b.vertex(shift) != a.vertex(0)) continue;
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i)
            all = a.vertex(i) == b.vertex((shift + i) % n);
        if (all) return true;
    }
    return false;
}

Location point_location(const Point& p, const std::vector<Point>& ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (on_segment(p, Segment{ring[i], ring[(i + 1) % n]})) return Location::Boundary;
    }
    // Crossing number along the ray x > p.x at height p.y. The half-open rule
    // ((a.y > p.y) != (b.y > p.y)) counts each vertex-level crossing once and
    // skips horizontal edges; p is strictly off the boundary here, so every
    // counted crossing is transversal.
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            const Scalar xi = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (xi > p.x) inside = !inside;
        }
    }
    return inside ? Location::Interior : Location::Exterior;
}

Location point_location(const Point& p, const SimplePolygon& poly) {
    const Box& b = poly.box();
    if (p.x < b.xmin || p.x > b.xmax || p.y < b.ymin || p.y > b.ymax) return Location::Exterior;
    return point_location(p, poly.vertices());
}

namespace {

// Splits edge e at every intersection with the other polygon's boundary and
// reports whether some open piece runs through the other's interior. Pieces
// between consecutive cuts never cross the boundary, so the location of a
// piece midpoint decides the whole piece.
bool edge_pierces_interior(const Segment& e, const SimplePolygon& other) {
    const Vector d = e.b - e.a;
    const Scalar dd = dot(d, d);
    std::vector<Scalar> cuts{Scalar(0), dd};
    for (std::size_t i = 0; i < other.size(); ++i) {
        const auto inter = segment_intersection(e, other.edge(i));
        if (std::holds_alternative<Point>(inter)) {
            cuts.push_back(dot(std::get<Point>(inter) - e.a, d));
        } else if (std::holds_alternative<Segment>(inter)) {
            const Segment& s = std::get<Segment>(inter);
            cuts.push_back(dot(s.a - e.a, d));
            cuts.push_back(dot(s.b - e.a, d));
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Scalar mid = (cuts[i] + cuts[i + 1]) / 2;
        const Point m = e.a + (mid / dd) * d;
        if (point_location(m, other) == Location::Interior) return true;
    }
    return false;
}

// Separating-axis certificate for two convex polygons. Interiors are disjoint
// exactly when some edge normal (of either polygon) separates the projections
// with <=; the sets themselves are disjoint exactly when some axis separates
// strictly. (Both follow from applying "origin outside an edge half-plane" to
// the convex difference A - B, whose edge directions come from A and B.)
enum class SatVerdict { InteriorsOverlap, TouchOnly, Apart };

SatVerdict convex_sat(const SimplePolygon& a, const SimplePolygon& b) {
    bool strict = false;
    bool weak = false;
    const auto test_axes = [&](const SimplePolygon& from, const SimplePolygon& other) {
        for (std::size_t i = 0; i < from.size() && !strict; ++i) {
            const Segment e = from.edge(i);
            const Vector n{-(e.b.y - e.a.y), e.b.x - e.a.x}; // inward normal
            Scalar lo_other = dot(n, other.vertex(0)), hi_other = lo_other;
            for (const Point& v : other.vertices()) {
                const Scalar d = dot(n, v);
                if (d < lo_other) lo_other = d;
                if (d > hi_other) hi_other = d;
            }
            Scalar lo_from = dot(n, from.vertex(0)), hi_from = lo_from;
            for (const Point& v : from.vertices()) {
                const Scalar d = dot(n, v);
                if (d < lo_from) lo_from = d;
                if (d > hi_from) hi_from = d;
            }
            if (hi_from < lo_other || hi_other < lo_from) strict = true;
            else if (hi_from <= lo_other || hi_other <= lo_from) weak = true;
        }
    };
    test_axes(a, b);
    if (!strict) test_axes(b, a);
    if (strict) return SatVerdict::Apart;
    return weak ? SatVerdict::TouchOnly : SatVerdict::InteriorsOverlap;
}

} // namespace

bool interiors_overlap(const SimplePolygon& a, const SimplePolygon& b) {
    if (boxes_interiors_disjoint(a.box(), b.box())) return false;
    if (a.convex() && b.convex())
        return convex_sat(a, b) == SatVerdict::InteriorsOverlap;
    // A transversal boundary crossing always exposes interior on both sides.
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (segments_relation(a.edge(i), b.edge(j)) == SegmentRelation::ProperCross)
                return true;
        }
    }
    for (const Point& v : a.vertices())
        if (point_location(v, b) == Location::Interior) return true;
    for (const Point& v : b.vertices())
        if (point_location(v, a) == Location::Interior) return true;
    // No vertex strictly inside: interiors can still meet along edges that
    // pass through (identical polygons, or crossings subdivided by touching
    // vertices). Check boundary pieces on both sides.
    for (std::size_t i = 0; i < a.size(); ++i)
        if (edge_pierces_interior(a.edge(i), b)) return true;
    for (std::size_t j = 0; j < b.size(); ++j)
        if (edge_pierces_interior(b.edge(j), a)) return true;
    return same_region(a, b);
}

DiskContact disk_relation(const SimplePolygon& a, const SimplePolygon& b) {
    if (boxes_strictly_apart(a.box(), b.box())) return {DiskRelation::Disjoint, std::nullopt};
    if (a.convex() && b.convex()) {
        switch (convex_sat(a, b)) {
            case SatVerdict::InteriorsOverlap: return {DiskRelation::Overlap, std::nullopt};
            case SatVerdict::Apart: return {DiskRelation::Disjoint, std::nullopt};
            case SatVerdict::TouchOnly: break; // fall through to the witness scan
        }
    } else if (interiors_overlap(a, b)) {
        return {DiskRelation::Overlap, std::nullopt};
    }
    // Interiors are disjoint; any boundary intersection point makes it Touch.
    // Witness: the lexicographically smallest vertex of the boundary-boundary
    // intersection (isolated points and endpoints of shared arcs).
    std::optional<Point> witness;
    const auto offer = [&](const Point& p) {
        if (!witness || lex_less(p, *witness)) witness = p;
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const auto inter = segment_intersection(a.edge(i), b.edge(j));
            if (std::holds_alternative<Point>(inter)) {
                offer(std::get<Point>(inter));
            } else if (std::holds_alternative<Segment>(inter)) {
                offer(std::get<Segment>(inter).a);
                offer(std::get<Segment>(inter).b);
            }
        }
    }
    if (witness) return {DiskRelation::Touch, witness};
    return {DiskRelation::Disjoint, std::nullopt};
}

bool segment_in_polygon(const Segment& s, const SimplePolygon& poly) {
    if (point_location(s.a, poly) == Location::Exterior) return false;
    if (point_location(s.b, poly) == Location::Exterior) return false;
    if (s.a == s.b) return true;
    // Split at all boundary meetings; every open piece lies fully inside or
    // fully outside, so midpoints decide.
    const Vector d = s.b - s.a;
    const Scalar dd = dot(d, d);
    std::vector<Scalar> cuts{Scalar(0), dd};
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto inter = segment_intersection(s, poly.edge(i));
        if (std::holds_alternative<Point>(inter)) {
            cuts.push_back(dot(std::get<Point>(inter) - s.a, d));
        } else if (std::holds_alternative<Segment>(inter)) {
            cuts.push_back(dot(std::get<Segment>(inter).a - s.a, d));
            cuts.push_back(dot(std::get<Segment>(inter).b - s.a, d));
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Scalar mid = (cuts[i] + cuts[i + 1]) / 2;
        const Point m = s.a + (mid / dd) * d;
        if (point_location(m, poly) == Location::Exterior) return false;
    }
    return true;
}

} // namespace kisslab
