#pragma once

#include "kisslab/placement.hpp"
#include "kisslab/polygon.hpp"
#include "kisslab/shape_analysis.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kisslab {

// Union of finitely many closed segments [center, endpoint] sharing the
// center. Arms may only meet at the center: collinear overlapping arms and
// duplicate endpoints are rejected.
class SegmentStar {
public:
    SegmentStar(Point center, std::vector<Point> endpoints);

    const Point& center() const { return center_; }
    const std::vector<Point>& endpoints() const { return endpoints_; }
    std::size_t arm_count() const { return endpoints_.size(); }
    Segment arm(std::size_t i) const { return {center_, endpoints_[i]}; }

    SegmentStar translated(const Vector& t) const;

    friend bool operator==(const SegmentStar& a, const SegmentStar& b) {
        return a.center_ == b.center_ && a.endpoints_ == b.endpoints_;
    }

private:
    Point center_;
    std::vector<Point> endpoints_;
};

using ShapeBase = std::variant<SimplePolygon, SegmentStar>;

// Translation family {x_i + base}. Vectors are pairwise distinct and never
// the origin; construction enforces both.
struct TranslateFamily {
    TranslateFamily(ShapeBase base, std::vector<Vector> vectors);

    ShapeBase base;
    std::vector<Vector> vectors;
};

enum class ViolationKind {
    NotTouching, // polygon translate does not touch the base
    PairOverlap, // two polygon translates have intersecting interiors
    CrossesBase, // a star arm properly crosses a base arm
    CrossesPeer, // a star arm properly crosses another translate's arm
    NoContact,   // star translate shares no point with the base
};

struct Violation {
    std::size_t i = 0;
    std::optional<std::size_t> j;
    ViolationKind kind = ViolationKind::NotTouching;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
};

// Polygon family rules: every translate touches the base and no two
// translates overlap.
ValidationReport validate_family(const SimplePolygon& base, const std::vector<Vector>& vectors);

// Segment-star family rules: every translate shares a point with the base,
// and no arm of a translate properly crosses an arm of the base or of another
// translate. Touch and collinear overlap are not crossings.
ValidationReport validate_segment_star_family(const SegmentStar& base,
                                              const std::vector<Vector>& vectors);

ValidationReport validate(const TranslateFamily& family);

// Contact placements of a star against itself: node-on-arm and arm-on-node
// slides, sampled and filtered down to exact contact-without-crossing.
std::vector<Vector> star_contact_placements(const SegmentStar& s, int samples_per_family);

struct SearchParams {
    int samples_per_family = 16;
    int beam_width = 64;
    long max_backtrack_nodes = 200000;
    std::uint64_t seed = 0;
    int threads = 1;
};

// Best touching family found by sampling contact placements, building the
// pairwise-compatibility graph with exact checks, then greedy seeding plus
// depth-first backtracking. Deterministic for fixed seed and params; the
// result is re-validated before it is returned. A lower-bound certificate,
// never an exactness claim.
TranslateFamily search_max_family(const ShapeBase& base, const SearchParams& params);

const char* violation_kind_name(ViolationKind kind);

// No neighbour count is claimed for segment stars: lower 0, no upper bound.
BoundsReport hadwiger_bounds(const SegmentStar& s);

} // namespace kisslab
