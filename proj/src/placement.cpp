#include "kisslab/placement.hpp"

#include "kisslab/convex.hpp"
#include "kisslab/errors.hpp"

#include <algorithm>

namespace kisslab {

DiskRelation placement_relation(const SimplePolygon& j, const Vector& x) {
    return disk_relation(j, j.translated(x)).relation;
}

std::vector<ContactFamily> contact_families(const SimplePolygon& j) {
    std::vector<ContactFamily> families;
    const std::size_t n = j.size();
    families.reserve(2 * n * n);
    // Vertex v of the moving copy on edge [a,b] of the fixed copy:
    // x + v in [a,b], so x slides along [a-v, b-v].
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t e = 0; e < n; ++e) {
            const Segment s = j.edge(e);
            families.push_back({ContactKind::VertexOnEdge, v, e, s.a - j.vertex(v),
                                s.b - j.vertex(v)});
        }
    }
    // Edge [a,b] of the moving copy across vertex v of the fixed copy:
    // v in x + [a,b], so x slides along [v-b, v-a].
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t e = 0; e < n; ++e) {
            const Segment s = j.edge(e);
            families.push_back({ContactKind::EdgeOnVertex, v, e, j.vertex(v) - s.b,
                                j.vertex(v) - s.a});
        }
    }
    return families;
}

namespace {

std::vector<Vector> sample_families(const std::vector<ContactFamily>& families,
                                    int samples_per_family) {
    std::vector<Vector> samples;
    samples.reserve(families.size() * (samples_per_family + 1));
    const Scalar steps{samples_per_family};
    for (const ContactFamily& f : families) {
        for (int i = 0; i <= samples_per_family; ++i) {
            const Scalar t = Scalar(i) / steps;
            samples.push_back(f.lo + t * (f.hi - f.lo));
        }
    }
    return samples;
}

std::vector<Vector> dedup_lex(std::vector<Vector> xs) {
    std::sort(xs.begin(), xs.end(), lex_less);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

} // namespace

std::vector<Vector> touching_placements(const SimplePolygon& j, int samples_per_family) {
    if (samples_per_family < 1) throw ValidationError("samples_per_family must be >= 1");

    std::vector<Vector> candidates;
    if (j.convex()) {
        // The touching locus of a convex disk is exactly the boundary of the
        // difference body: take its vertices plus edge samples.
        const ConvexPolygon body = difference_body(convex_hull(j.vertices()));
        const Scalar steps{samples_per_family};
        for (std::size_t e = 0; e < body.size(); ++e) {
            const Segment s = body.edge(e);
            for (int i = 0; i < samples_per_family; ++i) {
                const Scalar t = Scalar(i) / steps;
                candidates.push_back(s.a + t * (s.b - s.a));
            }
        }
    } else {
        candidates = sample_families(contact_families(j), samples_per_family);
    }
    candidates = dedup_lex(std::move(candidates));

    // Exact post-validation: only certified touching placements leave here.
    std::vector<Vector> touching;
    touching.reserve(candidates.size());
    for (const Vector& x : candidates) {
        if (x.x == 0 && x.y == 0) continue;
        if (placement_relation(j, x) == DiskRelation::Touch) touching.push_back(x);
    }
    return touching;
}

} // namespace kisslab
