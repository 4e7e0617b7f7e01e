#pragma once

#include "kisslab/polygon.hpp"

#include <optional>
#include <vector>

namespace kisslab {

// A convex polygon with strictly convex vertices (no three collinear), stored
// counterclockwise and rotated so the lexicographically smallest vertex comes
// first. That canonical form makes equality plain vector comparison.
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point& vertex(std::size_t i) const { return vertices_[i]; }
    Segment edge(std::size_t i) const;
    const Box& box() const { return box_; }
    Scalar area() const;

    ConvexPolygon translated(const Vector& t) const;
    ConvexPolygon reflected() const;               // x -> -x
    ConvexPolygon scaled(const Scalar& s) const;   // x -> s x, s > 0

    SimplePolygon as_simple() const;

    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    struct Trusted {};
    ConvexPolygon(std::vector<Point> vertices, Trusted);

    std::vector<Point> vertices_;
    Box box_{0, 0, 0, 0};
};

// Convex hull of a point set (duplicates welcome). Throws DegenerateHull when
// the points do not span the plane.
ConvexPolygon convex_hull(const std::vector<Point>& points);

// Hull that tolerates flat input: returns 1 point, 2 extreme points of a
// collinear set, or the full hull ring. Used where degeneracy is expected.
std::vector<Point> hull_or_flat(const std::vector<Point>& points);

ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b);

// K + (-K): the difference body, centrally symmetric about the origin.
ConvexPolygon difference_body(const ConvexPolygon& k);

// (1/2)(K + (-K)): the central symmetral, same shape at half scale.
ConvexPolygon central_symmetral(const ConvexPolygon& k);

bool centrally_symmetric(const ConvexPolygon& k, const Point& center);
// Center of symmetry (vertex average) when the polygon has one.
std::optional<Point> symmetry_center(const ConvexPolygon& k);

// Longest chord of the disk in the given direction. Endpoints are returned
// with the lexicographically smaller one first; among equally long chords the
// one with the smallest endpoint pair wins.
Segment longest_chord(const ConvexPolygon& disk, const Direction& dir);

// Minkowski gauge of v measured by the body b, which must contain the origin
// in its interior: the unique g >= 0 with v on the boundary of g * b.
Scalar gauge(const ConvexPolygon& b, const Vector& v);

// Perimeter of c measured in the norm whose unit disk is b; b must be
// centrally symmetric about the origin.
Scalar minkowski_perimeter(const ConvexPolygon& c, const ConvexPolygon& b);

// Distance of p and q relative to the disk: 2 |pq| / |rs| where rs is a
// longest chord of the disk parallel to pq. Zero when p == q.
Scalar relative_distance(const ConvexPolygon& disk, const Point& p, const Point& q);

// When the central symmetral of k is a parallelogram, k itself must be a
// translate of it; returns that translation, or nothing when the symmetral
// has more than four vertices. A symmetral parallelogram with a non-translate
// k indicates a broken invariant and aborts.
std::optional<Vector> parallelogram_translate_witness(const ConvexPolygon& k);

} // namespace kisslab
