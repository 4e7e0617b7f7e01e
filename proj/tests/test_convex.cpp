// Convex hulls, Minkowski calculus, gauges, relative distance and the
// parallelogram translate witness, all against brute-force oracles.

#include <doctest.h>

#include "kisslab/convex.hpp"
#include "kisslab/errors.hpp"

#include "oracles.hpp"

using namespace kisslab;

namespace {

Point pt(long x, long y) { return {Scalar(x), Scalar(y)}; }

ConvexPolygon unit_square() {
    return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ConvexPolygon cs_square() { // [-1,1]^2
    return ConvexPolygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
}

ConvexPolygon triangle() { return ConvexPolygon({{0, 0}, {1, 0}, {0, 1}}); }

// The affine-regular hexagon used throughout: the difference body of the
// triangle above, halved -- also centrally symmetric about the origin.
ConvexPolygon hexagon() {
    return ConvexPolygon({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
}

} // namespace

TEST_CASE("convex hull of simple fixtures") {
    CHECK(convex_hull({{0, 0}, {1, 0}, {0, 1}}) == triangle());

    // Interior point absorbed.
    CHECK(convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {Scalar(1) / 2, Scalar(1) / 2}}) ==
          unit_square());

    // L-shape corners hull to a pentagon.
    const ConvexPolygon pent =
        convex_hull({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    CHECK(pent == ConvexPolygon({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}}));

    CHECK_THROWS_AS(convex_hull({{0, 0}, {1, 1}, {2, 2}, {3, 3}}), DegenerateHull);
}

TEST_CASE("convex hull matches the gift-wrapping oracle on random clouds") {
    oracles::Rng rng(111);
    for (int iter = 0; iter < 150; ++iter) {
        std::vector<Point> cloud;
        const int n = static_cast<int>(rng.integer(3, 14));
        for (int i = 0; i < n; ++i) cloud.push_back(rng.point(12, 4));
        // Sprinkle duplicates and collinear points.
        if (n >= 4) {
            cloud.push_back(cloud[0]);
            const Point mid = {(cloud[1].x + cloud[2].x) / 2, (cloud[1].y + cloud[2].y) / 2};
            cloud.push_back(mid);
        }
        const std::vector<Point> expect = oracles::brute_hull(cloud);
        if (expect.size() < 3) {
            CHECK_THROWS_AS(convex_hull(cloud), DegenerateHull);
            continue;
        }
        CHECK(convex_hull(cloud) == ConvexPolygon(expect));
    }
}

TEST_CASE("hull_or_flat handles degenerate input") {
    const auto flat = hull_or_flat({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    REQUIRE(flat.size() == 2);
    CHECK(flat[0] == pt(0, 0));
    CHECK(flat[1] == pt(3, 3));
    CHECK(hull_or_flat({{2, 5}, {2, 5}}).size() == 1);
}

TEST_CASE("minkowski sum fixtures") {
    CHECK(minkowski_sum(unit_square(), unit_square()) ==
          ConvexPolygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));

    // T + (-T) is the doubled hexagon.
    const ConvexPolygon diff = minkowski_sum(triangle(), triangle().reflected());
    CHECK(diff == hexagon());
    CHECK(diff == difference_body(triangle()));
}

TEST_CASE("minkowski sum matches the vertex-pair oracle") {
    oracles::Rng rng(222);
    for (int iter = 0; iter < 80; ++iter) {
        const ConvexPolygon a = oracles::random_convex(rng, 8);
        const ConvexPolygon b = oracles::random_convex(rng, 8);
        const std::vector<Point> expect = oracles::brute_minkowski(a.vertices(), b.vertices());
        REQUIRE(expect.size() >= 3);
        const ConvexPolygon sum = minkowski_sum(a, b);
        CHECK(sum == ConvexPolygon(expect));
        CHECK(sum.size() <= a.size() + b.size());
    }
}

TEST_CASE("central symmetral fixtures") {
    CHECK(central_symmetral(unit_square()) ==
          ConvexPolygon({{Scalar(-1) / 2, Scalar(-1) / 2},
                         {Scalar(1) / 2, Scalar(-1) / 2},
                         {Scalar(1) / 2, Scalar(1) / 2},
                         {Scalar(-1) / 2, Scalar(1) / 2}}));

    const ConvexPolygon half_hex = central_symmetral(triangle());
    CHECK(half_hex == hexagon().scaled(Scalar(1) / 2));
}

TEST_CASE("symmetral of a centrally symmetric body is the recentered body") {
    oracles::Rng rng(333);
    for (int iter = 0; iter < 40; ++iter) {
        const ConvexPolygon b = oracles::random_cs_convex(rng, 12);
        // b is symmetric about the origin already.
        CHECK(central_symmetral(b) == b);
        const Vector t = rng.point(9, 4);
        CHECK(central_symmetral(b.translated(t)) == b);
    }
}

TEST_CASE("symmetral output is centrally symmetric about the origin") {
    oracles::Rng rng(444);
    for (int iter = 0; iter < 40; ++iter) {
        const ConvexPolygon k = oracles::random_convex(rng, 10);
        const ConvexPolygon s = central_symmetral(k);
        CHECK(centrally_symmetric(s, pt(0, 0)));
        for (const Point& v : s.vertices()) {
            const Point neg = -v;
            CHECK(std::find(s.vertices().begin(), s.vertices().end(), neg) !=
                  s.vertices().end());
        }
    }
}

TEST_CASE("symmetry center detection") {
    CHECK(symmetry_center(cs_square()) == Point{Scalar(0), Scalar(0)});
    CHECK(symmetry_center(unit_square()) == Point{Scalar(1) / 2, Scalar(1) / 2});
    CHECK_FALSE(symmetry_center(triangle()).has_value());
    CHECK(centrally_symmetric(hexagon(), pt(0, 0)));
    CHECK_FALSE(centrally_symmetric(hexagon().translated(pt(1, 0)), pt(0, 0)));
}

TEST_CASE("longest chord fixtures") {
    // Unit square, horizontal: full strip of length-1 chords; lowest wins.
    const Segment c1 = longest_chord(unit_square(), Direction(pt(1, 0)));
    CHECK(c1 == Segment{pt(0, 0), pt(1, 0)});

    // Hexagon/2 in direction (1,0): chord through the origin, length 1.
    const ConvexPolygon half_hex = central_symmetral(triangle());
    const Segment c2 = longest_chord(half_hex, Direction(pt(1, 0)));
    CHECK(c2.b.x - c2.a.x == 1);
    CHECK(c2.a.y == c2.b.y);

    // Triangle, direction parallel to an edge: the edge itself.
    const Segment c3 = longest_chord(triangle(), Direction(pt(1, 0)));
    CHECK(c3 == Segment{pt(0, 0), pt(1, 0)});

    // Diagonal of the square.
    const Segment c4 = longest_chord(unit_square(), Direction(pt(1, 1)));
    CHECK(c4 == Segment{pt(0, 0), pt(1, 1)});
}

TEST_CASE("relative distance fixtures") {
    CHECK(relative_distance(unit_square(), pt(0, 0), pt(1, 0)) == 2);
    CHECK(relative_distance(unit_square(), pt(3, 3), pt(3, 3)) == 0);
    CHECK(relative_distance(triangle(), pt(0, 0), pt(1, 0)) == 2);
    // Cross-check the triangle value through the gauge of the symmetral.
    const ConvexPolygon half_hex = central_symmetral(triangle());
    CHECK(gauge(half_hex, pt(1, 0)) == 2);
}

TEST_CASE("relative distance equals the vertex-chord oracle") {
    oracles::Rng rng(555);
    for (int iter = 0; iter < 120; ++iter) {
        const ConvexPolygon d = oracles::random_convex(rng, 9);
        const Point p = rng.point(15, 4), q = rng.point(15, 4);
        if (p == q) continue;
        CHECK(relative_distance(d, p, q) ==
              oracles::relative_distance_oracle(d.vertices(), p, q));
    }
}

TEST_CASE("relative distance is a translation-invariant metric") {
    oracles::Rng rng(666);
    for (int iter = 0; iter < 60; ++iter) {
        const ConvexPolygon d = oracles::random_convex(rng, 8);
        const Point p = rng.point(12, 3), q = rng.point(12, 3), r = rng.point(12, 3);
        const Vector t = rng.point(12, 3);
        const Scalar pq = relative_distance(d, p, q);
        CHECK(pq == relative_distance(d, q, p));
        CHECK((pq == 0) == (p == q));
        CHECK(relative_distance(d, p + t, q + t) == pq);
        // Triangle inequality.
        CHECK(relative_distance(d, p, r) <= pq + relative_distance(d, q, r));
    }
}

TEST_CASE("relative distance equals the gauge in the symmetral norm") {
    oracles::Rng rng(777);
    for (int iter = 0; iter < 120; ++iter) {
        const ConvexPolygon d = oracles::random_convex(rng, 9);
        const Point p = rng.point(15, 4), q = rng.point(15, 4);
        if (p == q) continue;
        const ConvexPolygon sym = central_symmetral(d);
        CHECK(relative_distance(d, p, q) == gauge(sym, q - p));
    }
}

TEST_CASE("nested disks give monotone distances") {
    oracles::Rng rng(888);
    for (int iter = 0; iter < 60; ++iter) {
        const ConvexPolygon d = oracles::random_convex(rng, 8);
        // Inflate by a Minkowski sum with a body containing the origin, so
        // that d + e really contains d.
        ConvexPolygon e = oracles::random_convex(rng, 6, 3, 2);
        e = e.translated(-e.vertex(0));
        const ConvexPolygon bigger = minkowski_sum(d, e);
        const Point p = rng.point(12, 3), q = rng.point(12, 3);
        if (p == q) continue;
        CHECK(relative_distance(bigger, p, q) <= relative_distance(d, p, q));
    }
}

TEST_CASE("gauge fixtures and homogeneity") {
    CHECK(gauge(cs_square(), pt(1, 0)) == 1);
    CHECK(gauge(cs_square(), pt(2, 2)) == 2);
    CHECK(gauge(cs_square(), pt(0, 0)) == 0);
    CHECK(gauge(hexagon(), pt(1, -1)) == 1);

    oracles::Rng rng(999);
    for (int iter = 0; iter < 100; ++iter) {
        const ConvexPolygon b = oracles::random_cs_convex(rng, 10);
        const Vector v = rng.point(12, 4);
        const Scalar g = gauge(b, v);
        CHECK(g == oracles::gauge_oracle(b.vertices(), v));
        CHECK(gauge(b, -v) == g); // symmetric body, symmetric gauge
        const Scalar lambda = Scalar(rng.integer(1, 5)) / rng.integer(1, 4);
        CHECK(gauge(b, {lambda * v.x, lambda * v.y}) == lambda * g);
    }
}

TEST_CASE("minkowski perimeter fixtures") {
    CHECK(minkowski_perimeter(cs_square(), cs_square()) == 8);
    CHECK(minkowski_perimeter(hexagon(), hexagon()) == 6);
    CHECK(minkowski_perimeter(unit_square(), cs_square()) == 4);
    CHECK_THROWS_AS(minkowski_perimeter(unit_square(), triangle()), ValidationError);
}

TEST_CASE("minkowski perimeter matches the gauge-sum oracle") {
    oracles::Rng rng(1010);
    for (int iter = 0; iter < 60; ++iter) {
        const ConvexPolygon c = oracles::random_convex(rng, 9);
        const ConvexPolygon b = oracles::random_cs_convex(rng, 10);
        CHECK(minkowski_perimeter(c, b) ==
              oracles::perimeter_oracle(c.vertices(), b.vertices()));
    }
}

TEST_CASE("self-perimeter of a centrally symmetric body is between 6 and 8") {
    oracles::Rng rng(1111);
    for (int iter = 0; iter < 100; ++iter) {
        const ConvexPolygon b = oracles::random_cs_convex(rng, 14);
        const Scalar p = minkowski_perimeter(b, b);
        CHECK(p >= 6);
        CHECK(p <= 8);
    }
}

TEST_CASE("perimeter of a body and of its central symmetral agree") {
    oracles::Rng rng(1212);
    for (int iter = 0; iter < 60; ++iter) {
        const ConvexPolygon c = oracles::random_convex(rng, 9);
        const ConvexPolygon b = oracles::random_cs_convex(rng, 10);
        CHECK(minkowski_perimeter(c, b) == minkowski_perimeter(central_symmetral(c), b));
    }
}

TEST_CASE("parallelogram translate witness fixtures") {
    CHECK(parallelogram_translate_witness(unit_square()) ==
          Vector{Scalar(1) / 2, Scalar(1) / 2});
    CHECK_FALSE(parallelogram_translate_witness(triangle()).has_value());
    // Sheared parallelogram.
    const ConvexPolygon sheared({{0, 0}, {2, 0}, {3, 1}, {1, 1}});
    CHECK(parallelogram_translate_witness(sheared) ==
          Vector{Scalar(3) / 2, Scalar(1) / 2});
}

TEST_CASE("every affine image of a parallelogram yields a verified witness") {
    oracles::Rng rng(1313);
    for (int iter = 0; iter < 60; ++iter) {
        const ConvexPolygon para = oracles::random_parallelogram(rng);
        const auto w = parallelogram_translate_witness(para);
        REQUIRE(w.has_value());
        CHECK(central_symmetral(para).translated(*w) == para);

        const oracles::AffineMap m = oracles::random_affine(rng);
        std::vector<Point> mapped;
        for (const Point& v : para.vertices()) mapped.push_back(m.apply(v));
        const ConvexPolygon image = convex_hull(mapped);
        const auto w2 = parallelogram_translate_witness(image);
        REQUIRE(w2.has_value());
        CHECK(central_symmetral(image).translated(*w2) == image);
    }
}

TEST_CASE("non-parallelograms have no translate witness") {
    oracles::Rng rng(1414);
    int checked = 0;
    while (checked < 60) {
        const ConvexPolygon k = oracles::random_convex(rng, 9);
        if (k.size() == 4 && k.vertex(2) - k.vertex(1) == k.vertex(3) - k.vertex(0))
            continue; // skip actual parallelograms
        ++checked;
        CHECK_FALSE(parallelogram_translate_witness(k).has_value());
    }
}

TEST_CASE("convex polygon scaling and reflection") {
    CHECK(cs_square().scaled(Scalar(1) / 2) ==
          ConvexPolygon({{Scalar(-1) / 2, Scalar(-1) / 2},
                         {Scalar(1) / 2, Scalar(-1) / 2},
                         {Scalar(1) / 2, Scalar(1) / 2},
                         {Scalar(-1) / 2, Scalar(1) / 2}}));
    CHECK(triangle().reflected() == ConvexPolygon({{0, 0}, {-1, 0}, {0, -1}}));
}
