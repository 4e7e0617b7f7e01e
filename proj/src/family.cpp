#include "kisslab/family.hpp"

#include "kisslab/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>
#include <utility>

namespace kisslab {

SegmentStar::SegmentStar(Point center, std::vector<Point> endpoints)
    : center_(std::move(center)), endpoints_(std::move(endpoints)) {
    if (endpoints_.size() < 2) throw ValidationError("segment star needs at least 2 arms");
    for (const Point& e : endpoints_)
        if (e == center_) throw ValidationError("star arm endpoint equals the center");
    // Arms may share the center only. Two arms from one point either touch
    // exactly there or overlap collinearly; only the former is a star.
    for (std::size_t i = 0; i < endpoints_.size(); ++i) {
        for (std::size_t j = i + 1; j < endpoints_.size(); ++j) {
            if (segments_relation(arm(i), arm(j)) != SegmentRelation::Touch)
                throw ValidationError("star arms overlap each other");
        }
    }
}

SegmentStar SegmentStar::translated(const Vector& t) const {
    SegmentStar copy = *this;
    copy.center_ = copy.center_ + t;
    for (Point& e : copy.endpoints_) e = e + t;
    return copy;
}

TranslateFamily::TranslateFamily(ShapeBase base_in, std::vector<Vector> vectors_in)
    : base(std::move(base_in)), vectors(std::move(vectors_in)) {
    for (const Vector& v : vectors)
        if (v.x == 0 && v.y == 0) throw ValidationError("family vector equals the origin");
    std::vector<Vector> sorted = vectors;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ValidationError("family vectors are not distinct");
}

ValidationReport validate_family(const SimplePolygon& base, const std::vector<Vector>& vectors) {
    TranslateFamily probe(base, vectors); // enforces distinct, nonzero
    ValidationReport report;
    std::vector<SimplePolygon> translates;
    translates.reserve(vectors.size());
    for (const Vector& x : vectors) translates.push_back(base.translated(x));

    for (std::size_t i = 0; i < translates.size(); ++i) {
        if (disk_relation(base, translates[i]).relation != DiskRelation::Touch)
            report.violations.push_back({i, std::nullopt, ViolationKind::NotTouching});
    }
    for (std::size_t i = 0; i < translates.size(); ++i) {
        for (std::size_t j = i + 1; j < translates.size(); ++j) {
            if (interiors_overlap(translates[i], translates[j]))
                report.violations.push_back({i, j, ViolationKind::PairOverlap});
        }
    }
    report.valid = report.violations.empty();
    return report;
}

namespace {

bool arms_cross(const SegmentStar& a, const SegmentStar& b) {
    for (std::size_t i = 0; i < a.arm_count(); ++i)
        for (std::size_t j = 0; j < b.arm_count(); ++j)
            if (segments_relation(a.arm(i), b.arm(j)) == SegmentRelation::ProperCross) return true;
    return false;
}

bool stars_share_point(const SegmentStar& a, const SegmentStar& b) {
    for (std::size_t i = 0; i < a.arm_count(); ++i)
        for (std::size_t j = 0; j < b.arm_count(); ++j)
            if (segments_relation(a.arm(i), b.arm(j)) != SegmentRelation::Disjoint) return true;
    return false;
}

} // namespace

ValidationReport validate_segment_star_family(const SegmentStar& base,
                                              const std::vector<Vector>& vectors) {
    TranslateFamily probe(base, vectors);
    ValidationReport report;
    std::vector<SegmentStar> translates;
    translates.reserve(vectors.size());
    for (const Vector& x : vectors) translates.push_back(base.translated(x));

    for (std::size_t i = 0; i < translates.size(); ++i) {
        if (!stars_share_point(base, translates[i]))
            report.violations.push_back({i, std::nullopt, ViolationKind::NoContact});
    }
    for (std::size_t i = 0; i < translates.size(); ++i) {
        if (arms_cross(base, translates[i]))
            report.violations.push_back({i, std::nullopt, ViolationKind::CrossesBase});
    }
    for (std::size_t i = 0; i < translates.size(); ++i) {
        for (std::size_t j = i + 1; j < translates.size(); ++j) {
            if (arms_cross(translates[i], translates[j]))
                report.violations.push_back({i, j, ViolationKind::CrossesPeer});
        }
    }
    report.valid = report.violations.empty();
    return report;
}

ValidationReport validate(const TranslateFamily& family) {
    if (const auto* poly = std::get_if<SimplePolygon>(&family.base))
        return validate_family(*poly, family.vectors);
    return validate_segment_star_family(std::get<SegmentStar>(family.base), family.vectors);
}

namespace {

// A star translate is admissible when it shares a point with the base and no
// arm properly crosses a base arm.
bool star_placement_ok(const SegmentStar& s, const Vector& x) {
    const SegmentStar moved = s.translated(x);
    return stars_share_point(s, moved) && !arms_cross(s, moved);
}

std::vector<Vector> dedup_lex(std::vector<Vector> xs) {
    std::sort(xs.begin(), xs.end(), lex_less);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

} // namespace

std::vector<Vector> star_contact_placements(const SegmentStar& s, int samples_per_family) {
    if (samples_per_family < 1) throw ValidationError("samples_per_family must be >= 1");
    // Contact families: a node (center or arm tip) of one copy slides along an
    // arm of the other, in both roles.
    std::vector<Point> nodes{s.center()};
    for (const Point& e : s.endpoints()) nodes.push_back(e);

    std::vector<Vector> candidates;
    const Scalar steps{samples_per_family};
    const auto sample = [&](const Point& lo, const Point& hi) {
        for (int i = 0; i <= samples_per_family; ++i) {
            const Scalar t = Scalar(i) / steps;
            candidates.push_back(lo + t * (hi - lo));
        }
    };
    for (const Point& node : nodes) {
        for (std::size_t a = 0; a < s.arm_count(); ++a) {
            const Segment arm = s.arm(a);
            sample(arm.a - node, arm.b - node); // moving node on fixed arm
            sample(node - arm.b, node - arm.a); // moving arm across fixed node
        }
    }
    candidates = dedup_lex(std::move(candidates));

    std::vector<Vector> valid;
    valid.reserve(candidates.size());
    for (const Vector& x : candidates) {
        if (x.x == 0 && x.y == 0) continue;
        if (star_placement_ok(s, x)) valid.push_back(x);
    }
    return valid;
}

BoundsReport hadwiger_bounds(const SegmentStar&) {
    // The classification rules cover polygonal disks only; no general bound
    // is known for bare segment stars, so none is claimed.
    return BoundsReport{};
}

namespace {

// ---- search internals ----------------------------------------------------

// Scales shape and candidate vectors by the lcm of all coordinate
// denominators. Placement relations are invariant under uniform positive
// scaling, and integer coordinates keep the rational arithmetic in the
// pairwise phase cheap.
Int common_denominator(const std::vector<Point>& pts) {
    Int m = 1;
    for (const Point& p : pts) {
        m = lcm(m, denominator(p.x));
        m = lcm(m, denominator(p.y));
    }
    return m;
}

std::vector<Point> scale_points(const std::vector<Point>& pts, const Scalar& f) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) out.push_back(f * p);
    return out;
}

class BitMatrix {
public:
    BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    void set(std::size_t i, std::size_t j) {
        bits_[i * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
    }
    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1;
    }
    const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
    std::size_t words() const { return words_; }
    std::size_t size() const { return n_; }

private:
    std::size_t n_, words_;
    std::vector<std::uint64_t> bits_;
};

struct RowSet {
    std::vector<std::uint64_t> w;

    explicit RowSet(std::size_t words) : w(words, 0) {}

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }
    bool empty() const {
        for (std::uint64_t x : w)
            if (x) return false;
        return true;
    }
};

// Exact pairwise-compatibility oracle over the scaled candidates, memoized by
// the (sign-normalized) difference vector: the relation of two translates
// depends only on x_j - x_i.
class CompatibilityOracle {
public:
    CompatibilityOracle(const SimplePolygon* poly, const SegmentStar* star)
        : poly_(poly), star_(star) {}

    bool compatible(const Vector& xi, const Vector& xj) {
        Vector d = xj - xi;
        if (d.y < 0 || (d.y == 0 && d.x < 0)) d = -d; // relation is symmetric in the sign
        const auto it = memo_.find(d);
        if (it != memo_.end()) return it->second;
        bool ok;
        if (poly_) {
            ok = !interiors_overlap(*poly_, poly_->translated(d));
        } else {
            ok = !arms_cross(*star_, star_->translated(d));
        }
        memo_.emplace(d, ok);
        return ok;
    }

private:
    struct PointLess {
        bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
    };
    const SimplePolygon* poly_;
    const SegmentStar* star_;
    std::map<Point, bool, PointLess> memo_;
};

struct CliqueSearch {
    const BitMatrix& adj;
    const std::vector<std::size_t>& order; // exploration order, a permutation
    long budget;
    int beam;
    long nodes = 0;
    std::vector<std::size_t> best;
    std::vector<std::size_t> current;
    const std::vector<Vector>& xs; // for the lexicographic tie-break

    CliqueSearch(const BitMatrix& adj_, const std::vector<std::size_t>& order_, long budget_,
                 int beam_, const std::vector<Vector>& xs_)
        : adj(adj_), order(order_), budget(budget_), beam(beam_), xs(xs_) {}

    // Sorted vector list of an index set, the canonical form used for output
    // and tie-breaks.
    std::vector<Vector> vectors_of(const std::vector<std::size_t>& idx) const {
        std::vector<Vector> v;
        v.reserve(idx.size());
        for (std::size_t i : idx) v.push_back(xs[i]);
        std::sort(v.begin(), v.end(), lex_less);
        return v;
    }

    void offer(const std::vector<std::size_t>& clique) {
        if (clique.size() < best.size()) return;
        if (clique.size() > best.size()) {
            best = clique;
            return;
        }
        const std::vector<Vector> a = vectors_of(clique);
        const std::vector<Vector> b = vectors_of(best);
        if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less))
            best = clique;
    }

    // cand holds positions in `order` (not candidate indices), so ascending
    // bit order follows the exploration order.
    void expand(RowSet& cand) {
        if (nodes >= budget) return;
        ++nodes;
        if (current.size() + cand.count() <= best.size()) return;
        int branches = 0;
        const std::size_t words = cand.w.size();
        for (std::size_t wi = 0; wi < words && branches < beam; ++wi) {
            std::uint64_t bits = cand.w[wi];
            while (bits && branches < beam) {
                const int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                const std::size_t pos = wi * 64 + static_cast<std::size_t>(b);
                const std::size_t v = order[pos];
                // Candidates after this branch: still-compatible, later in order.
                RowSet next(words);
                bool any = false;
                for (std::size_t k = 0; k < words; ++k) {
                    std::uint64_t m = cand.w[k] & adj_row_in_order(v, k);
                    if (k == wi) m &= ~((std::uint64_t(2) << b) - 1); // keep > pos
                    else if (k < wi) m = 0;
                    next.w[k] = m;
                    any = any || m;
                }
                current.push_back(v);
                offer(current);
                if (any) expand(next);
                current.pop_back();
                ++branches;
                if (nodes >= budget) return;
            }
        }
    }

    // adj has candidate indexing; cand has order positions. Translate a row
    // word on the fly.
    std::uint64_t adj_row_in_order(std::size_t v, std::size_t word) const {
        std::uint64_t out = 0;
        for (int b = 0; b < 64; ++b) {
            const std::size_t pos = word * 64 + static_cast<std::size_t>(b);
            if (pos >= order.size()) break;
            if (adj.get(v, order[pos])) out |= std::uint64_t(1) << b;
        }
        return out;
    }
};

} // namespace

TranslateFamily search_max_family(const ShapeBase& base, const SearchParams& params) {
    // Candidate placements in original coordinates.
    std::vector<Vector> candidates;
    if (const auto* poly = std::get_if<SimplePolygon>(&base))
        candidates = touching_placements(*poly, params.samples_per_family);
    else
        candidates = star_contact_placements(std::get<SegmentStar>(base), params.samples_per_family);

    if (candidates.empty()) return TranslateFamily(base, {});

    // Scaled copies for the pairwise phase (relation-preserving).
    Int denom = common_denominator(candidates);
    std::optional<SimplePolygon> poly_scaled;
    std::optional<SegmentStar> star_scaled;
    if (const auto* poly = std::get_if<SimplePolygon>(&base)) {
        denom = lcm(denom, common_denominator(poly->vertices()));
        const Scalar f{denom};
        poly_scaled = poly->affine_image(f, 0, 0, f, Vector{0, 0});
    } else {
        const auto& star = std::get<SegmentStar>(base);
        denom = lcm(denom, common_denominator(star.endpoints()));
        denom = lcm(denom, denominator(star.center().x));
        denom = lcm(denom, denominator(star.center().y));
        const Scalar f{denom};
        star_scaled = SegmentStar(f * star.center(), scale_points(star.endpoints(), f));
    }
    const Scalar factor{denom};
    const std::vector<Vector> xs = scale_points(candidates, factor);

    const std::size_t m = xs.size();
    BitMatrix adj(m);
    CompatibilityOracle oracle(poly_scaled ? &*poly_scaled : nullptr,
                               star_scaled ? &*star_scaled : nullptr);

    const int threads = std::max(1, params.threads);
    if (threads == 1 || m < 64) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (oracle.compatible(xs[i], xs[j])) {
                    adj.set(i, j);
                    adj.set(j, i);
                }
    } else {
        // Row-partitioned: workers fill disjoint row ranges of the upper
        // triangle with private memo tables; results do not depend on the
        // partition.
        std::vector<std::thread> pool;
        const std::size_t chunk = (m + static_cast<std::size_t>(threads) - 1) /
                                  static_cast<std::size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            const std::size_t lo = static_cast<std::size_t>(t) * chunk;
            const std::size_t hi = std::min(m, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                CompatibilityOracle local(poly_scaled ? &*poly_scaled : nullptr,
                                          star_scaled ? &*star_scaled : nullptr);
                for (std::size_t i = lo; i < hi; ++i)
                    for (std::size_t j = i + 1; j < m; ++j)
                        if (local.compatible(xs[i], xs[j])) adj.set(i, j);
            });
        }
        for (auto& th : pool) th.join();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (adj.get(i, j)) adj.set(j, i);
    }

    // Exploration order: by degree (descending), index ascending; a nonzero
    // seed shuffles the order for diversified reruns.
    std::vector<std::size_t> degree(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && adj.get(i, j)) ++degree[i];
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return a < b;
    });
    if (params.seed != 0) {
        std::mt19937_64 rng(params.seed);
        std::shuffle(order.begin(), order.end(), rng);
    }

    CliqueSearch search(adj, order, params.max_backtrack_nodes, params.beam_width, xs);

    // Greedy seed along the exploration order.
    std::vector<std::size_t> greedy;
    for (std::size_t pos = 0; pos < m; ++pos) {
        const std::size_t v = order[pos];
        bool ok = true;
        for (std::size_t u : greedy)
            if (!adj.get(u, v)) {
                ok = false;
                break;
            }
        if (ok) greedy.push_back(v);
    }
    search.offer(greedy);

    RowSet all(adj.words() == 0 ? 1 : (m + 63) / 64);
    all.w.assign((m + 63) / 64, 0);
    for (std::size_t pos = 0; pos < m; ++pos) all.w[pos / 64] |= std::uint64_t(1) << (pos % 64);
    search.expand(all);

    std::vector<Vector> out;
    out.reserve(search.best.size());
    for (std::size_t v : search.best) out.push_back(candidates[v]); // unscaled originals
    std::sort(out.begin(), out.end(), lex_less);

    TranslateFamily result(base, std::move(out));
    if (!validate(result).valid)
        throw std::logic_error("search produced an invalid family (predicate bug)");
    return result;
}

const char* violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::NotTouching: return "NotTouching";
        case ViolationKind::PairOverlap: return "PairOverlap";
        case ViolationKind::CrossesBase: return "CrossesBase";
        case ViolationKind::CrossesPeer: return "CrossesPeer";
        case ViolationKind::NoContact: return "NoContact";
    }
    return "?";
}

} // namespace kisslab
