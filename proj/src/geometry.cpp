#include "kisslab/geometry.hpp"

#include "kisslab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kisslab {

namespace {

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    const auto bad = [&] {
        return ParseError("not an exact rational: \"" + std::string(text) + "\"");
    };
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer_text(text)) throw bad();
        return Scalar(Int(std::string(text)));
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den)) throw bad();
    Int d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    return Scalar(Int(std::string(num)), d);
}

std::string scalar_text(const Scalar& value) {
    const Int num = numerator(value);
    const Int den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Int scalar_floor(const Scalar& value) {
    const Int num = numerator(value);
    const Int den = denominator(value);
    Int q = num / den; // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

double scalar_double(const Scalar& value) { return value.convert_to<double>(); }

bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Scalar cross(const Vector& a, const Vector& b) { return a.x * b.y - a.y * b.x; }

Scalar dot(const Vector& a, const Vector& b) { return a.x * b.x + a.y * b.y; }

Orientation orientation(const Point& a, const Point& b, const Point& c) {
    const Scalar s = cross(b - a, c - a);
    if (s > 0) return Orientation::CounterClockwise;
    if (s < 0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

bool on_segment(const Point& p, const Segment& s) {
    if (orientation(s.a, s.b, p) != Orientation::Collinear) return false;
    // Collinear: p is inside the segment iff it is between the endpoints.
    const Scalar t = dot(p - s.a, s.b - s.a);
    return t >= 0 && t <= dot(s.b - s.a, s.b - s.a);
}

namespace {

void require_proper(const Segment& s) {
    if (s.a == s.b) throw ValidationError("degenerate segment");
}

// Relation of two segments known to lie on one common line, via the scalar
// projection onto that line.
SegmentRelation collinear_relation(const Segment& s, const Segment& t) {
    const Vector d = s.b - s.a;
    Scalar s0 = 0, s1 = dot(d, d);
    Scalar t0 = dot(t.a - s.a, d), t1 = dot(t.b - s.a, d);
    if (t0 > t1) std::swap(t0, t1);
    const Scalar lo = std::max(s0, t0), hi = std::min(s1, t1);
    if (lo > hi) return SegmentRelation::Disjoint;
    if (lo == hi) return SegmentRelation::Touch;
    return SegmentRelation::CollinearOverlap;
}

} // namespace

SegmentRelation segments_relation(const Segment& s, const Segment& t) {
    require_proper(s);
    require_proper(t);
    const Orientation o1 = orientation(s.a, s.b, t.a);
    const Orientation o2 = orientation(s.a, s.b, t.b);
    const Orientation o3 = orientation(t.a, t.b, s.a);
    const Orientation o4 = orientation(t.a, t.b, s.b);

    if (o1 == Orientation::Collinear && o2 == Orientation::Collinear)
        return collinear_relation(s, t);

    if (o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
        o3 != Orientation::Collinear && o4 != Orientation::Collinear)
        return SegmentRelation::ProperCross;

    if (on_segment(t.a, s) || on_segment(t.b, s) || on_segment(s.a, t) || on_segment(s.b, t))
        return SegmentRelation::Touch;

    return SegmentRelation::Disjoint;
}

std::variant<std::monostate, Point, Segment> segment_intersection(const Segment& s,
                                                                  const Segment& t) {
    require_proper(s);
    require_proper(t);
    const Orientation o1 = orientation(s.a, s.b, t.a);
    const Orientation o2 = orientation(s.a, s.b, t.b);

    if (o1 == Orientation::Collinear && o2 == Orientation::Collinear) {
        // One common line: intersect the parameter intervals along it.
        const Vector d = s.b - s.a;
        const Scalar dd = dot(d, d);
        Scalar t0 = dot(t.a - s.a, d), t1 = dot(t.b - s.a, d);
        if (t0 > t1) std::swap(t0, t1);
        const Scalar lo = std::max(Scalar(0), t0), hi = std::min(dd, t1);
        if (lo > hi) return std::monostate{};
        const Point pa = s.a + (lo / dd) * d;
        const Point pb = s.a + (hi / dd) * d;
        if (pa == pb) return pa;
        return Segment{pa, pb};
    }

    const Vector ds = s.b - s.a;
    const Vector dt = t.b - t.a;
    const Scalar denom = cross(ds, dt);
    if (denom == 0) return std::monostate{}; // parallel, not collinear
    // s.a + u ds = t.a + w dt; solve exactly.
    const Scalar u = cross(t.a - s.a, dt) / denom;
    const Scalar w = cross(t.a - s.a, ds) / denom;
    if (u < 0 || u > 1 || w < 0 || w > 1) return std::monostate{};
    return s.a + u * ds;
}

Box bounding_box(const std::vector<Point>& points) {
    Box b{points.front().x, points.front().y, points.front().x, points.front().y};
    for (const Point& p : points) {
        if (p.x < b.xmin) b.xmin = p.x;
        if (p.x > b.xmax) b.xmax = p.x;
        if (p.y < b.ymin) b.ymin = p.y;
        if (p.y > b.ymax) b.ymax = p.y;
    }
    return b;
}

bool boxes_interiors_disjoint(const Box& a, const Box& b) {
    return a.xmax <= b.xmin || b.xmax <= a.xmin || a.ymax <= b.ymin || b.ymax <= a.ymin;
}

bool boxes_strictly_apart(const Box& a, const Box& b) {
    return a.xmax < b.xmin || b.xmax < a.xmin || a.ymax < b.ymin || b.ymax < a.ymin;
}

Direction::Direction(Vector v) : v_(std::move(v)) {
    if (v_.x == 0 && v_.y == 0) throw ValidationError("zero direction");
}

bool operator==(const Direction& a, const Direction& b) {
    return cross(a.v_, b.v_) == 0 && dot(a.v_, b.v_) > 0;
}

} // namespace kisslab
