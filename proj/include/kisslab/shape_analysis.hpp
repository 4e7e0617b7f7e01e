#pragma once

#include "kisslab/convex.hpp"

#include <optional>
#include <vector>

namespace kisslab {

// Pockets of a polygonal disk J: the closures of the connected components of
// (conv J) \ J. Each pocket is itself a simple polygon bounded by one hull
// edge chord (possibly split by boundary vertices lying on it) and the arc of
// bd J it cuts off.
struct PocketReport {
    ConvexPolygon hull;
    std::vector<SimplePolygon> pockets;
};

PocketReport pockets(const SimplePolygon& j);

// Star kernel of J: the set of points that see all of J. Equals the
// intersection of the inner closed half-planes of all edges.
//   witness: some kernel point (empty iff J is not starlike),
//   region:  the kernel as a convex polygon when it has positive area;
//            empty for point or segment kernels.
struct StarKernel {
    std::optional<Point> witness;
    std::optional<ConvexPolygon> region;

    bool starlike() const { return witness.has_value(); }
};

StarKernel star_kernel(const SimplePolygon& j);

// Exact membership test for the star kernel.
bool is_starlike_at(const SimplePolygon& j, const Point& center);

// Witness that J sits between two parallel supporting lines of its hull whose
// intersections with J are two segments of the same positive length, with the
// matching translate touching J. This is the configuration that forces the
// eight-neighbour packing in the one-pocket case.
struct ParallelStripWitness {
    Vector translation;   // v with J + v touching J, parallel to both segments
    Segment bottom;       // segment cut from the lower supporting line
    Segment top;          // segment cut from the upper supporting line
};

std::optional<ParallelStripWitness> parallelogram_like_witness(const SimplePolygon& j);

enum class BoundTag {
    Gruenbaum8,                    // parallelogram: exactly 8
    Gruenbaum6,                    // other convex disk: exactly 6
    Pocket8,                       // one pocket, strip witness: exactly 8
    Pocket6,                       // one pocket, no strip witness: exactly 6
    Starlike35,                    // starlike: at most 35
    CentrallySymmetricStarlike12,  // centrally symmetric starlike: at most 12
    GeneralLower6,                 // any polygonal disk: at least 6
    Unbounded,                     // no upper bound claimed
};

struct BoundsReport {
    int lower = 0;
    std::optional<int> upper;      // empty means unbounded
    std::optional<int> exact;      // set when lower == upper
    std::vector<BoundTag> rationale;
};

// Translative neighbour bounds for a polygonal disk, chosen by shape class:
// convex (parallelogram or not), exactly one pocket (strip witness or not),
// starlike (with the centrally symmetric refinement), or none of these.
BoundsReport hadwiger_bounds(const SimplePolygon& j);

const char* bound_tag_name(BoundTag tag);

} // namespace kisslab
