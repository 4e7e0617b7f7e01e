#pragma once

#include "kisslab/geometry.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace kisslab {

enum class Location { Interior, Boundary, Exterior };

enum class DiskRelation {
    Overlap,  // interiors intersect
    Touch,    // boundaries meet, interiors do not
    Disjoint, // no common point at all
};

struct DiskContact {
    DiskRelation relation = DiskRelation::Disjoint;
    // For Touch: the lexicographically smallest vertex of the boundary
    // intersection (isolated touch points and endpoints of shared arcs).
    std::optional<Point> witness;
};

// A simple polygon (polygonal disk). Construction normalizes and validates:
//   - consecutive duplicates and vertices collinear between their neighbours
//     are removed,
//   - clockwise rings are reversed, zero-area rings rejected,
//   - at least 3 vertices remain and the boundary is simple: adjacent edges
//     share exactly their common endpoint, non-adjacent edges are disjoint.
// Instances are immutable; translates reuse validation instead of re-running it.
class SimplePolygon {
public:
    explicit SimplePolygon(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point& vertex(std::size_t i) const { return vertices_[i]; }
    // Edge i runs from vertex i to vertex (i+1) mod n.
    Segment edge(std::size_t i) const;

    const Box& box() const { return box_; }
    Scalar area() const;

    SimplePolygon translated(const Vector& t) const;
    // Maps p to (m00 p.x + m01 p.y, m10 p.x + m11 p.y) + t; det must be nonzero.
    // Orientation-reversing maps flip the ring back to counterclockwise.
    SimplePolygon affine_image(const Scalar& m00, const Scalar& m01, const Scalar& m10,
                               const Scalar& m11, const Vector& t) const;

    bool convex() const { return convex_; }

    friend bool operator==(const SimplePolygon& a, const SimplePolygon& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    struct Trusted {};
    SimplePolygon(std::vector<Point> vertices, Trusted);

    std::vector<Point> vertices_;
    Box box_{0, 0, 0, 0};
    bool convex_ = false;
};

// True when the two rings describe the same polygon up to cyclic rotation.
bool same_region(const SimplePolygon& a, const SimplePolygon& b);

// Exact point-in-polygon classification (crossing number on a ray, with a
// separate boundary test so the parity argument only ever sees clean crossings).
Location point_location(const Point& p, const std::vector<Point>& ring);
Location point_location(const Point& p, const SimplePolygon& poly);

// Exact overlap/touch/disjoint classification of two polygonal disks.
DiskContact disk_relation(const SimplePolygon& a, const SimplePolygon& b);

// Overlap test only; skips witness bookkeeping. Used in search hot paths.
bool interiors_overlap(const SimplePolygon& a, const SimplePolygon& b);

// Twice the signed area of a ring (positive for counterclockwise).
Scalar signed_area_twice(const std::vector<Point>& ring);

// True when the closed segment lies entirely inside the closed polygon.
bool segment_in_polygon(const Segment& s, const SimplePolygon& poly);

} // namespace kisslab
