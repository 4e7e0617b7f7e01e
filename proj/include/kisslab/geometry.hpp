#pragma once

#include "kisslab/scalar.hpp"

#include <compare>
#include <optional>
#include <variant>
#include <vector>

namespace kisslab {

// A point of the plane; also used as a translation vector.
struct Point {
    Scalar x;
    Scalar y;

    friend bool operator==(const Point& a, const Point& b) = default;

    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator-(const Point& a) { return {-a.x, -a.y}; }
    friend Point operator*(const Scalar& s, const Point& a) { return {s * a.x, s * a.y}; }
};

using Vector = Point;

// Lexicographic (x, then y) order; the tie-break order used everywhere.
bool lex_less(const Point& a, const Point& b);

Scalar cross(const Vector& a, const Vector& b);
Scalar dot(const Vector& a, const Vector& b);

enum class Orientation { CounterClockwise, Clockwise, Collinear };

// Sign of the signed area of triangle (a, b, c).
Orientation orientation(const Point& a, const Point& b, const Point& c);

// Closed segment with distinct endpoints.
struct Segment {
    Point a;
    Point b;

    friend bool operator==(const Segment& s, const Segment& t) = default;
};

enum class SegmentRelation {
    ProperCross,      // one transversal intersection, interior to both segments
    Touch,            // single common point, an endpoint of at least one segment
    CollinearOverlap, // collinear with a common sub-segment of positive length
    Disjoint,
};

// Exact relation of two segments. Degenerate (zero length) input is rejected.
SegmentRelation segments_relation(const Segment& s, const Segment& t);

// Exact intersection of two segments: empty, a single point, or a sub-segment.
std::variant<std::monostate, Point, Segment> segment_intersection(const Segment& s,
                                                                  const Segment& t);

// True when p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);

// Axis-aligned bounding box, used only as an exact early-out.
struct Box {
    Scalar xmin, ymin, xmax, ymax;
};

Box bounding_box(const std::vector<Point>& points);
bool boxes_interiors_disjoint(const Box& a, const Box& b);
bool boxes_strictly_apart(const Box& a, const Box& b);

// A direction of the plane: a nonzero vector considered up to positive scaling.
class Direction {
public:
    explicit Direction(Vector v);

    const Vector& vector() const { return v_; }

    // Equality up to positive scaling.
    friend bool operator==(const Direction& a, const Direction& b);

private:
    Vector v_;
};

} // namespace kisslab
