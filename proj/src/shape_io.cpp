#include "kisslab/shape_io.hpp"

#include "kisslab/errors.hpp"

namespace kisslab {

namespace {

Scalar scalar_from_json(const Json& j, const char* where) {
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    if (j.is_number_unsigned()) return Scalar(j.get<unsigned long long>());
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_float())
        throw ParseError(std::string(where) + ": decimal numbers are not exact; "
                                              "write rationals as strings like \"3/2\"");
    throw ParseError(std::string(where) + ": expected an integer or a rational string");
}

Point point_from_json(const Json& j, const char* where) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(std::string(where) + ": expected a coordinate pair [x, y]");
    return Point{scalar_from_json(j[0], where), scalar_from_json(j[1], where)};
}

std::vector<Point> points_from_json(const Json& j, const char* where) {
    if (!j.is_array()) throw ParseError(std::string(where) + ": expected an array of points");
    std::vector<Point> out;
    out.reserve(j.size());
    for (const Json& item : j) out.push_back(point_from_json(item, where));
    return out;
}

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace

ShapeFile parse_shape_file(const std::string& text) {
    const Json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("shape document must be a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw ParseError("shape document needs a string \"kind\" field");

    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
        name = doc["name"].get<std::string>();
    }

    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "polygon") {
        if (!doc.contains("vertices")) throw ParseError("polygon document needs \"vertices\"");
        return ShapeFile{SimplePolygon(points_from_json(doc["vertices"], "vertices")),
                         std::move(name)};
    }
    if (kind == "segment_star") {
        if (!doc.contains("center") || !doc.contains("endpoints"))
            throw ParseError("segment_star document needs \"center\" and \"endpoints\"");
        return ShapeFile{SegmentStar(point_from_json(doc["center"], "center"),
                                     points_from_json(doc["endpoints"], "endpoints")),
                         std::move(name)};
    }
    throw ParseError("unknown shape kind \"" + kind +
                     "\"; expected \"polygon\" or \"segment_star\"");
}

std::string serialize_shape_file(const ShapeFile& file) {
    Json doc = Json::object();
    if (const auto* poly = std::get_if<SimplePolygon>(&file.shape)) {
        doc["kind"] = "polygon";
        if (!file.name.empty()) doc["name"] = file.name;
        doc["vertices"] = ring_json(poly->vertices());
    } else {
        const auto& star = std::get<SegmentStar>(file.shape);
        doc["kind"] = "segment_star";
        if (!file.name.empty()) doc["name"] = file.name;
        doc["center"] = point_json(star.center());
        doc["endpoints"] = ring_json(star.endpoints());
    }
    return doc.dump(2);
}

std::vector<Vector> parse_vector_list(const std::string& text) {
    const Json doc = parse_document(text);
    const Json* list = nullptr;
    if (doc.is_array()) {
        list = &doc;
    } else if (doc.is_object() && doc.contains("vectors")) {
        list = &doc["vectors"];
    } else {
        throw ParseError("vector document must be an array or an object with \"vectors\"");
    }
    return points_from_json(*list, "vectors");
}

std::string serialize_vector_list(const std::vector<Vector>& vectors) {
    Json doc = Json::object();
    doc["vectors"] = ring_json(vectors);
    return doc.dump(2);
}

Point parse_point_text(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw ParseError("expected a point of the form \"x,y\"");
    return Point{parse_scalar(text.substr(0, comma)), parse_scalar(text.substr(comma + 1))};
}

Json point_json(const Point& p) {
    return Json::array({scalar_text(p.x), scalar_text(p.y)});
}

Json ring_json(const std::vector<Point>& ring) {
    Json out = Json::array();
    for (const Point& p : ring) out.push_back(point_json(p));
    return out;
}

Json pocket_report_json(const PocketReport& report) {
    Json doc = Json::object();
    doc["hull"] = ring_json(report.hull.vertices());
    doc["pocket_count"] = report.pockets.size();
    Json list = Json::array();
    for (const SimplePolygon& p : report.pockets) list.push_back(ring_json(p.vertices()));
    doc["pockets"] = std::move(list);
    return doc;
}

Json kernel_json(const StarKernel& kernel) {
    Json doc = Json::object();
    doc["starlike"] = kernel.starlike();
    doc["witness"] = kernel.witness ? point_json(*kernel.witness) : Json(nullptr);
    doc["region"] = kernel.region ? ring_json(kernel.region->vertices()) : Json(nullptr);
    return doc;
}

Json bounds_json(const BoundsReport& bounds) {
    Json doc = Json::object();
    doc["lower"] = bounds.lower;
    doc["upper"] = bounds.upper ? Json(*bounds.upper) : Json(nullptr);
    doc["exact"] = bounds.exact ? Json(*bounds.exact) : Json(nullptr);
    Json tags = Json::array();
    for (BoundTag tag : bounds.rationale) tags.push_back(bound_tag_name(tag));
    doc["rationale"] = std::move(tags);
    return doc;
}

Json strip_witness_json(const std::optional<ParallelStripWitness>& witness) {
    if (!witness) return Json(nullptr);
    Json doc = Json::object();
    doc["translation"] = point_json(witness->translation);
    doc["bottom"] = Json::array({point_json(witness->bottom.a), point_json(witness->bottom.b)});
    doc["top"] = Json::array({point_json(witness->top.a), point_json(witness->top.b)});
    return doc;
}

Json validation_json(const ValidationReport& report) {
    Json doc = Json::object();
    doc["valid"] = report.valid;
    Json list = Json::array();
    for (const Violation& v : report.violations) {
        Json item = Json::object();
        item["index"] = v.i;
        item["partner"] = v.j ? Json(*v.j) : Json(nullptr);
        item["kind"] = violation_kind_name(v.kind);
        list.push_back(std::move(item));
    }
    doc["violations"] = std::move(list);
    return doc;
}

Json audit_json(const AuditReport& report) {
    Json doc = Json::object();
    doc["n"] = report.n;

    Json checks = Json::object();
    checks["lemma1_interior"] = check_status_name(report.lemma1_interior);
    checks["lemma1_boundary"] = check_status_name(report.lemma1_boundary);
    checks["ccw_witnesses"] = check_status_name(report.ccw_witnesses);
    checks["bezdek"] = check_status_name(report.bezdek);
    checks["separated_size_ok"] = check_status_name(report.separated_size_ok);
    checks["containment"] = check_status_name(report.containment);
    checks["dist_k_ok"] = check_status_name(report.dist_k_ok);
    checks["dist_cbar_ok"] = check_status_name(report.dist_cbar_ok);
    checks["perimeter_ok"] = check_status_name(report.perimeter_ok);
    doc["checks"] = std::move(checks);

    doc["witnesses"] = ring_json(report.witnesses);

    Json offenders = Json::array();
    for (const BezdekTriple& t : report.bezdek_offenders)
        offenders.push_back(Json::array({t.i, t.j, t.k}));
    doc["bezdek_offenders"] = std::move(offenders);

    doc["separated_subfamily"] = report.separated_subfamily;
    doc["perimeter"] = report.perimeter ? Json(scalar_text(*report.perimeter)) : Json(nullptr);
    doc["chain_bound"] = report.chain_bound;
    doc["maximality_note"] = report.maximality_note;
    return doc;
}

} // namespace kisslab
