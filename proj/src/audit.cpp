#include "kisslab/audit.hpp"

#include "kisslab/errors.hpp"
#include "kisslab/shape_analysis.hpp"

#include <algorithm>
#include <sstream>

namespace kisslab {

bool separated_pair(const ConvexPolygon& hull_of_base, const Vector& xi, const Vector& xj) {
    const SimplePolygon k = hull_of_base.as_simple();
    const Vector d = xi - xj;
    return point_location(d, k) != Location::Interior &&
           point_location(-d, k) != Location::Interior;
}

namespace {

// Exact maximum independent set over a conflict matrix, include-before-exclude
// in index order, so the first maximum found is the lexicographically
// smallest one.
struct IndependentSetSearch {
    const std::vector<std::vector<bool>>& conflict;
    std::size_t n;
    std::vector<std::size_t> best;
    std::vector<std::size_t> current;

    void run(std::size_t next) {
        if (current.size() + (n - next) <= best.size()) return; // cannot strictly improve
        if (next == n) {
            if (current.size() > best.size()) best = current;
            return;
        }
        bool fits = true;
        for (std::size_t u : current)
            if (conflict[u][next]) {
                fits = false;
                break;
            }
        if (fits) {
            current.push_back(next);
            run(next + 1);
            current.pop_back();
        }
        run(next + 1);
    }
};

int half_plane(const Vector& v) {
    return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
}

// Strict counterclockwise-from-positive-x angular order; equal rays compare
// unordered (callers rule them out first).
bool angle_less(const Vector& a, const Vector& b) {
    const int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

bool same_ray(const Vector& a, const Vector& b) {
    return cross(a, b) == 0 && dot(a, b) > 0;
}

} // namespace

std::vector<std::size_t> extract_separated_subfamily(const SimplePolygon& base,
                                                     const std::vector<Vector>& vectors) {
    const ConvexPolygon hull = convex_hull(base.vertices());
    const std::size_t n = vectors.size();
    std::vector<std::vector<bool>> conflict(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!separated_pair(hull, vectors[i], vectors[j]))
                conflict[i][j] = conflict[j][i] = true;

    IndependentSetSearch search{conflict, n, {}, {}};
    search.run(0);
    return search.best;
}

AuditReport audit_theorem1(const SimplePolygon& base, const std::vector<Vector>& vectors) {
    if (!is_starlike_at(base, Point{0, 0}))
        throw ValidationError("base shape is not starlike at the origin");
    if (!validate_family(base, vectors).valid)
        throw ValidationError("family does not validate; audit requires a valid family");

    AuditReport report;
    const std::size_t n = vectors.size();
    report.n = n;
    const Point origin{0, 0};

    // C = conv of the translation vectors.
    std::optional<ConvexPolygon> c;
    try {
        c = convex_hull(vectors);
    } catch (const DegenerateHull&) {
        c = std::nullopt;
    }

    if (c) {
        const SimplePolygon c_simple = c->as_simple();
        report.lemma1_interior =
            point_location(origin, c_simple) == Location::Interior ? CheckStatus::Pass
                                                                   : CheckStatus::Fail;
        bool all_boundary = true;
        for (const Vector& x : vectors)
            if (point_location(x, c_simple) != Location::Boundary) all_boundary = false;
        report.lemma1_boundary = all_boundary ? CheckStatus::Pass : CheckStatus::Fail;
    } else {
        // Hull is a point or a segment: no interior, and every point of the
        // family lies on it.
        report.lemma1_interior = CheckStatus::Fail;
        report.lemma1_boundary = CheckStatus::Pass;
    }

    // Touch witnesses, one per translate.
    report.witnesses.reserve(n);
    for (const Vector& x : vectors) {
        const DiskContact contact = disk_relation(base, base.translated(x));
        report.witnesses.push_back(contact.witness.value());
    }

    // Cyclic-order check: ordered by angle of x_i around the origin, the
    // witnesses must also run counterclockwise around the origin.
    report.ccw_witnesses = [&]() -> CheckStatus {
        if (n <= 2) return CheckStatus::Pass;
        for (const Point& w : report.witnesses)
            if (w == origin) return CheckStatus::Degenerate;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (same_ray(vectors[i], vectors[j])) return CheckStatus::Degenerate;
                if (report.witnesses[i] == report.witnesses[j] ||
                    same_ray(report.witnesses[i] - origin, report.witnesses[j] - origin))
                    return CheckStatus::Degenerate;
            }
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return angle_less(vectors[a], vectors[b]);
        });
        int descents = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const Point& cur = report.witnesses[order[k]];
            const Point& nxt = report.witnesses[order[(k + 1) % n]];
            if (angle_less(nxt - origin, cur - origin)) ++descents;
        }
        return descents == 1 ? CheckStatus::Pass : CheckStatus::Fail;
    }();

    // Interior-point count per translate hull.
    const ConvexPolygon k_hull = convex_hull(base.vertices());
    const SimplePolygon k_simple = k_hull.as_simple();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> inside;
        const SimplePolygon hull_i = k_simple.translated(vectors[i]);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && point_location(vectors[j], hull_i) == Location::Interior)
                inside.push_back(j);
        for (std::size_t a = 0; a < inside.size(); ++a)
            for (std::size_t b = a + 1; b < inside.size(); ++b)
                report.bezdek_offenders.push_back({i, inside[a], inside[b]});
    }
    report.bezdek = report.bezdek_offenders.empty() ? CheckStatus::Pass : CheckStatus::Fail;

    // Maximum pairwise-separated subfamily and its size guarantee.
    report.separated_subfamily = extract_separated_subfamily(base, vectors);
    const std::size_t threshold = n >= 2 ? (n - 2) / 2 : 0;
    report.separated_size_ok =
        report.separated_subfamily.size() >= threshold ? CheckStatus::Pass : CheckStatus::Fail;

    // Containment of the whole family in the difference body of the hull.
    const SimplePolygon kk = difference_body(k_hull).as_simple();
    bool contained = true;
    for (const Vector& x : vectors)
        if (point_location(x, kk) == Location::Exterior) contained = false;
    report.containment = contained ? CheckStatus::Pass : CheckStatus::Fail;

    // Distance floors on the separated subfamily.
    bool dist_k = true, dist_cbar = true;
    std::optional<ConvexPolygon> cbar;
    if (c) cbar = central_symmetral(*c);
    for (std::size_t a = 0; a < report.separated_subfamily.size(); ++a)
        for (std::size_t b = a + 1; b < report.separated_subfamily.size(); ++b) {
            const Vector& xi = vectors[report.separated_subfamily[a]];
            const Vector& xj = vectors[report.separated_subfamily[b]];
            if (relative_distance(k_hull, xi, xj) < 1) dist_k = false;
            if (cbar && relative_distance(*cbar, xi, xj) < Scalar(1, 2)) dist_cbar = false;
        }
    report.dist_k_ok = dist_k ? CheckStatus::Pass : CheckStatus::Fail;
    report.dist_cbar_ok =
        cbar ? (dist_cbar ? CheckStatus::Pass : CheckStatus::Fail) : CheckStatus::Degenerate;

    // Perimeter of C in the norm of its own symmetral, and the chain bound.
    if (c && cbar) {
        const Scalar perim = minkowski_perimeter(*c, *cbar);
        report.perimeter = perim;
        report.perimeter_ok = perim <= 8 ? CheckStatus::Pass : CheckStatus::Fail;
        const long cap = scalar_floor(Scalar(2) * perim).convert_to<long>();
        const long bound = 2 * cap + 3;
        report.chain_bound = static_cast<int>(std::min<long>(bound, 35));
    } else {
        report.perimeter_ok = CheckStatus::Degenerate;
        report.chain_bound = 35;
    }

    std::ostringstream note;
    if (n == 0) {
        note << "empty family; every check holds vacuously";
    } else if (!c) {
        note << "family hull is degenerate; chain bound defaults to the ceiling 35";
    } else {
        const bool core = report.lemma1_interior == CheckStatus::Pass &&
                          report.bezdek == CheckStatus::Pass &&
                          report.separated_size_ok == CheckStatus::Pass &&
                          report.containment == CheckStatus::Pass &&
                          report.dist_k_ok == CheckStatus::Pass &&
                          report.dist_cbar_ok == CheckStatus::Pass &&
                          report.perimeter_ok == CheckStatus::Pass;
        if (core)
            note << "all proof-chain checks hold; n=" << n << " respects chain bound "
                 << report.chain_bound;
        else
            note << "one or more proof-chain checks failed; the bound derivation does not "
                    "apply to this family";
    }
    report.maximality_note = note.str();
    return report;
}

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Degenerate: return "degenerate";
    }
    return "?";
}

} // namespace kisslab
