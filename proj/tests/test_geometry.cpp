// Exact scalar arithmetic, orientation, segment relations, point location and
// disk relations of polygonal disks.

#include <doctest.h>

#include "kisslab/errors.hpp"
#include "kisslab/geometry.hpp"
#include "kisslab/polygon.hpp"

#include "oracles.hpp"

using namespace kisslab;

namespace {

SimplePolygon unit_square() {
    return SimplePolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

Point pt(long x, long y) { return {Scalar(x), Scalar(y)}; }

} // namespace

TEST_CASE("scalar parsing and printing round-trips canonical forms") {
    CHECK(parse_scalar("3/2") == Scalar(3) / 2);
    CHECK(parse_scalar("-7") == Scalar(-7));
    CHECK(parse_scalar("4/6") == Scalar(2) / 3); // reduced on construction
    CHECK(scalar_text(Scalar(5)) == "5");
    CHECK(scalar_text(Scalar(-3) / 4) == "-3/4");
    CHECK(scalar_text(parse_scalar("0/9")) == "0");

    CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1e3"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);

    oracles::Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        const Scalar v = rng.rational(1000, 1000);
        CHECK(parse_scalar(scalar_text(v)) == v);
    }
}

TEST_CASE("scalar floor is the exact integer floor") {
    CHECK(scalar_floor(Scalar(7) / 2) == 3);
    CHECK(scalar_floor(Scalar(-7) / 2) == -4);
    CHECK(scalar_floor(Scalar(4)) == 4);
    CHECK(scalar_floor(Scalar(0)) == 0);
}

TEST_CASE("orientation basic cases") {
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == Orientation::CounterClockwise);
    CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == Orientation::Collinear);
    CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == Orientation::Clockwise);
}

TEST_CASE("orientation is antisymmetric and translation invariant") {
    oracles::Rng rng(202);
    for (int i = 0; i < 200; ++i) {
        const Point a = rng.point(50, 7), b = rng.point(50, 7), c = rng.point(50, 7);
        const Point t = rng.point(50, 7);
        const Orientation o1 = orientation(a, b, c);
        const Orientation o2 = orientation(a, c, b);
        if (o1 == Orientation::Collinear) {
            CHECK(o2 == Orientation::Collinear);
        } else {
            CHECK(o1 != o2);
        }
        CHECK(orientation(a + t, b + t, c + t) == o1);
        // Against the independent sign computation.
        const Scalar s = oracles::ocross(a, b, c);
        if (s > 0) CHECK(o1 == Orientation::CounterClockwise);
        if (s < 0) CHECK(o1 == Orientation::Clockwise);
        if (s == 0) CHECK(o1 == Orientation::Collinear);
    }
}

TEST_CASE("segment relations: the four kinds") {
    const Segment diag1{pt(0, 0), pt(2, 2)};
    const Segment diag2{pt(0, 2), pt(2, 0)};
    CHECK(segments_relation(diag1, diag2) == SegmentRelation::ProperCross);

    CHECK(segments_relation({pt(0, 0), pt(1, 0)}, {pt(1, 0), pt(2, 0)}) ==
          SegmentRelation::Touch);
    CHECK(segments_relation({pt(0, 0), pt(1, 0)}, {pt(0, 1), pt(1, 1)}) ==
          SegmentRelation::Disjoint);
    CHECK(segments_relation({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(3, 0)}) ==
          SegmentRelation::CollinearOverlap);

    // Endpoint resting on the other segment's interior: a touch, not a cross.
    CHECK(segments_relation({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(1, 2)}) ==
          SegmentRelation::Touch);
    // T-shape with crossing through the interior of both.
    CHECK(segments_relation({pt(0, 0), pt(2, 0)}, {pt(1, -1), pt(1, 1)}) ==
          SegmentRelation::ProperCross);
    // Collinear, single shared endpoint: touch, not overlap.
    CHECK(segments_relation({pt(0, 0), pt(1, 0)}, {pt(1, 0), pt(3, 0)}) ==
          SegmentRelation::Touch);
}

TEST_CASE("segment relation is symmetric") {
    oracles::Rng rng(303);
    for (int i = 0; i < 300; ++i) {
        const Point a = rng.point(8, 3), b = rng.point(8, 3);
        const Point c = rng.point(8, 3), d = rng.point(8, 3);
        if (a == b || c == d) continue;
        CHECK(segments_relation({a, b}, {c, d}) == segments_relation({c, d}, {a, b}));
    }
}

TEST_CASE("segment intersection agrees with the relation") {
    oracles::Rng rng(404);
    for (int i = 0; i < 300; ++i) {
        const Point a = rng.point(6, 2), b = rng.point(6, 2);
        const Point c = rng.point(6, 2), d = rng.point(6, 2);
        if (a == b || c == d) continue;
        const Segment s{a, b}, t{c, d};
        const auto inter = segment_intersection(s, t);
        switch (segments_relation(s, t)) {
        case SegmentRelation::Disjoint:
            CHECK(std::holds_alternative<std::monostate>(inter));
            break;
        case SegmentRelation::ProperCross:
        case SegmentRelation::Touch: {
            REQUIRE(std::holds_alternative<Point>(inter));
            const Point p = std::get<Point>(inter);
            CHECK(on_segment(p, s));
            CHECK(on_segment(p, t));
            break;
        }
        case SegmentRelation::CollinearOverlap: {
            REQUIRE(std::holds_alternative<Segment>(inter));
            const Segment o = std::get<Segment>(inter);
            CHECK(on_segment(o.a, s));
            CHECK(on_segment(o.a, t));
            CHECK(on_segment(o.b, s));
            CHECK(on_segment(o.b, t));
            break;
        }
        }
    }
}

TEST_CASE("degenerate segments are rejected") {
    CHECK_THROWS_AS(segments_relation({pt(1, 1), pt(1, 1)}, {pt(0, 0), pt(1, 0)}),
                    ValidationError);
}

TEST_CASE("point location in the unit square") {
    const SimplePolygon sq = unit_square();
    CHECK(point_location({Scalar(1) / 2, Scalar(1) / 2}, sq) == Location::Interior);
    CHECK(point_location(pt(0, 0), sq) == Location::Boundary);
    CHECK(point_location({Scalar(1), Scalar(1) / 2}, sq) == Location::Boundary);
    CHECK(point_location(pt(5, 5), sq) == Location::Exterior);
    CHECK(point_location({Scalar(1) / 2, Scalar(-1) / 1000}, sq) == Location::Exterior);
}

TEST_CASE("point location agrees with the winding-number oracle") {
    oracles::Rng rng(505);
    for (int iter = 0; iter < 40; ++iter) {
        const SimplePolygon poly = oracles::random_simple_polygon(rng, 10);
        for (int i = 0; i < 25; ++i) {
            const Point p = rng.point(25, 3);
            const int w = oracles::winding_location(p, poly.vertices());
            const Location loc = point_location(p, poly);
            if (w > 0) CHECK(loc == Location::Interior);
            if (w == 0) CHECK(loc == Location::Boundary);
            if (w < 0) CHECK(loc == Location::Exterior);
        }
        // Vertices and edge midpoints are boundary.
        for (std::size_t i = 0; i < poly.size(); ++i) {
            CHECK(point_location(poly.vertex(i), poly) == Location::Boundary);
            const Segment e = poly.edge(i);
            const Point mid = {(e.a.x + e.b.x) / 2, (e.a.y + e.b.y) / 2};
            CHECK(point_location(mid, poly) == Location::Boundary);
        }
    }
}

TEST_CASE("polygon construction normalizes and validates") {
    // Clockwise input is reversed to counterclockwise.
    const SimplePolygon cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(signed_area_twice(cw.vertices()) > 0);

    // Collinear intermediate vertices are removed.
    const SimplePolygon straight({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(straight.size() == 4);

    // Duplicate consecutive vertices are removed.
    const SimplePolygon dup({{0, 0}, {0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(dup.size() == 4);

    CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, 0}, {2, 0}}), ValidationError); // flat
    // Self-intersecting bow tie.
    CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), ValidationError);

    // Normalization is idempotent.
    const SimplePolygon again(straight.vertices());
    CHECK(again == straight);
}

TEST_CASE("polygon area is exact") {
    CHECK(unit_square().area() == 1);
    const SimplePolygon lshape({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    CHECK(lshape.area() == 3);
    CHECK(lshape.area() * 2 == oracles::shoelace_area2(lshape.vertices()));
}

TEST_CASE("disk relation on square translates") {
    const SimplePolygon sq = unit_square();
    const DiskContact touch = disk_relation(sq, sq.translated(pt(1, 0)));
    CHECK(touch.relation == DiskRelation::Touch);
    REQUIRE(touch.witness.has_value());
    CHECK(touch.witness->x == 1); // witness on the shared edge x = 1

    CHECK(disk_relation(sq, sq.translated({Scalar(1) / 2, Scalar(0)})).relation ==
          DiskRelation::Overlap);
    CHECK(disk_relation(sq, sq.translated(pt(3, 0))).relation == DiskRelation::Disjoint);
    // Corner-to-corner touch.
    CHECK(disk_relation(sq, sq.translated(pt(1, 1))).relation == DiskRelation::Touch);
}

TEST_CASE("disk relation is symmetric and translation invariant") {
    oracles::Rng rng(606);
    for (int i = 0; i < 30; ++i) {
        const SimplePolygon a = oracles::random_simple_polygon(rng, 8);
        const SimplePolygon b = oracles::random_simple_polygon(rng, 8);
        const Vector t = rng.point(10, 3);
        const DiskRelation ab = disk_relation(a, b).relation;
        CHECK(disk_relation(b, a).relation == ab);
        CHECK(disk_relation(a.translated(t), b.translated(t)).relation == ab);
    }
}

TEST_CASE("touch witness lies on both boundaries") {
    oracles::Rng rng(707);
    int touches = 0;
    for (int i = 0; i < 200 && touches < 25; ++i) {
        const SimplePolygon a = oracles::random_simple_polygon(rng, 8, 6, 2);
        // Slide b until it touches: try a few integer offsets.
        const Vector t = {Scalar(rng.integer(-8, 8)), Scalar(rng.integer(-8, 8))};
        const SimplePolygon b = a.translated(t);
        const DiskContact c = disk_relation(a, b);
        if (c.relation != DiskRelation::Touch) continue;
        ++touches;
        REQUIRE(c.witness.has_value());
        CHECK(point_location(*c.witness, a) == Location::Boundary);
        CHECK(point_location(*c.witness, b) == Location::Boundary);
    }
    CHECK(touches > 0);
}

TEST_CASE("interiors_overlap matches disk_relation") {
    oracles::Rng rng(808);
    for (int i = 0; i < 60; ++i) {
        const SimplePolygon a = oracles::random_simple_polygon(rng, 8, 8, 2);
        const SimplePolygon b = oracles::random_simple_polygon(rng, 8, 8, 2);
        CHECK(interiors_overlap(a, b) == (disk_relation(a, b).relation == DiskRelation::Overlap));
    }
}

TEST_CASE("segment_in_polygon distinguishes chords from escapes") {
    const SimplePolygon lshape({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    // Chord inside the bottom bar.
    CHECK(segment_in_polygon({{Scalar(1) / 4, Scalar(1) / 2}, {Scalar(7) / 4, Scalar(1) / 2}},
                             lshape));
    // Corner-to-corner segment cutting through the notch: leaves the region.
    CHECK_FALSE(segment_in_polygon({{2, 1}, {1, 2}}, lshape));
    // Boundary edge counts as inside (closed region).
    CHECK(segment_in_polygon({{0, 0}, {2, 0}}, lshape));
}

TEST_CASE("direction equality is positive-scaling invariance") {
    CHECK(Direction(pt(2, 4)) == Direction(pt(1, 2)));
    CHECK_FALSE(Direction(pt(2, 4)) == Direction(pt(-1, -2)));
    CHECK_THROWS_AS(Direction(pt(0, 0)), ValidationError);
}
