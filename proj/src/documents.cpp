#include "kisslab/documents.hpp"

#include "kisslab/audit.hpp"
#include "kisslab/errors.hpp"
#include "kisslab/shape_analysis.hpp"

namespace kisslab {

Json classify_document(const ShapeFile& file) {
    Json doc = Json::object();
    if (!file.name.empty()) doc["name"] = file.name;

    if (const auto* poly = std::get_if<SimplePolygon>(&file.shape)) {
        doc["kind"] = "polygon";
        doc["convex"] = poly->convex();
        doc["pockets"] = pocket_report_json(pockets(*poly));
        doc["kernel"] = kernel_json(star_kernel(*poly));
        doc["parallelogram_like"] = strip_witness_json(parallelogram_like_witness(*poly));
        doc["bounds"] = bounds_json(hadwiger_bounds(*poly));
    } else {
        const auto& star = std::get<SegmentStar>(file.shape);
        doc["kind"] = "segment_star";
        doc["arms"] = star.arm_count();
        doc["bounds"] = bounds_json(hadwiger_bounds(star));
    }
    return doc;
}

Json search_document(const ShapeFile& file, const SearchParams& params) {
    const TranslateFamily family = search_max_family(file.shape, params);

    Json doc = Json::object();
    doc["size"] = family.vectors.size();
    doc["vectors"] = ring_json(family.vectors);
    doc["validation"] = validation_json(validate(family));
    Json used = Json::object();
    used["samples"] = params.samples_per_family;
    used["beam"] = params.beam_width;
    used["nodes"] = params.max_backtrack_nodes;
    used["seed"] = params.seed;
    used["threads"] = params.threads;
    doc["params"] = std::move(used);
    return doc;
}

AuditOutcome audit_document(const ShapeFile& file, const std::vector<Vector>& vectors,
                            const std::optional<Point>& center_in) {
    const auto* poly = std::get_if<SimplePolygon>(&file.shape);
    if (!poly) throw ValidationError("audit needs a polygon shape");

    Point center{0, 0};
    if (center_in) {
        center = *center_in;
    } else if (!is_starlike_at(*poly, center)) {
        const StarKernel kernel = star_kernel(*poly);
        if (!kernel.witness)
            throw ValidationError("shape is not starlike; audit does not apply");
        center = *kernel.witness;
    }
    const SimplePolygon recentered = poly->translated(-center);

    const AuditReport report = audit_theorem1(recentered, vectors);
    Json doc = Json::object();
    doc["center"] = point_json(center);
    doc["audit"] = audit_json(report);

    // The cyclic witness-order check is reported but not gated: coinciding
    // witnesses make it degenerate on perfectly valid configurations.
    const bool ok = report.lemma1_interior != CheckStatus::Fail &&
                    report.lemma1_boundary != CheckStatus::Fail &&
                    report.bezdek != CheckStatus::Fail &&
                    report.separated_size_ok != CheckStatus::Fail &&
                    report.containment != CheckStatus::Fail &&
                    report.dist_k_ok != CheckStatus::Fail &&
                    report.dist_cbar_ok != CheckStatus::Fail &&
                    report.perimeter_ok != CheckStatus::Fail;
    return {std::move(doc), ok};
}

} // namespace kisslab
