// Python extension module: a thin JSON-string surface over the library, so
// the python package stays schema-identical with the command line tool.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kisslab/documents.hpp"
#include "kisslab/errors.hpp"
#include "kisslab/svg.hpp"

#include <optional>
#include <string>
#include <utility>

namespace py = pybind11;

namespace {

using namespace kisslab;

std::string classify_str(const std::string& shape_json) {
    return classify_document(parse_shape_file(shape_json)).dump(2);
}

std::string validate_str(const std::string& shape_json, const std::string& vectors_json) {
    const ShapeFile file = parse_shape_file(shape_json);
    const std::vector<Vector> vectors = parse_vector_list(vectors_json);
    return validation_json(validate(TranslateFamily(file.shape, vectors))).dump(2);
}

std::string search_str(const std::string& shape_json, int samples, int beam, long nodes,
                       std::uint64_t seed, int threads) {
    SearchParams params;
    params.samples_per_family = samples;
    params.beam_width = beam;
    params.max_backtrack_nodes = nodes;
    params.seed = seed;
    params.threads = threads;
    return search_document(parse_shape_file(shape_json), params).dump(2);
}

std::pair<std::string, bool> audit_str(const std::string& shape_json,
                                       const std::string& vectors_json,
                                       const std::string& center) {
    const ShapeFile file = parse_shape_file(shape_json);
    const std::vector<Vector> vectors = parse_vector_list(vectors_json);
    std::optional<Point> c;
    if (!center.empty()) c = parse_point_text(center);
    const AuditOutcome outcome = audit_document(file, vectors, c);
    return {outcome.document.dump(2), outcome.passed};
}

std::string render_str(const std::string& shape_json, const std::string& vectors_json,
                       bool draw_vectors) {
    const ShapeFile file = parse_shape_file(shape_json);
    const std::vector<Vector> vectors = parse_vector_list(vectors_json);
    const ValidationReport report = validate(TranslateFamily(file.shape, vectors));
    RenderOptions options;
    options.draw_vectors = draw_vectors;
    for (const Violation& v : report.violations) {
        options.violating.push_back(v.i);
        if (v.j) options.violating.push_back(*v.j);
    }
    return render_svg(file.shape, vectors, options);
}

std::string symmetral_str(const std::string& shape_json) {
    const ShapeFile file = parse_shape_file(shape_json);
    std::vector<Point> pts;
    if (const auto* poly = std::get_if<SimplePolygon>(&file.shape)) {
        pts = poly->vertices();
    } else {
        const auto& star = std::get<SegmentStar>(file.shape);
        pts.push_back(star.center());
        for (const Point& e : star.endpoints()) pts.push_back(e);
    }
    const ConvexPolygon sym = central_symmetral(convex_hull(pts));
    Json doc = Json::object();
    doc["vertices"] = ring_json(sym.vertices());
    return doc.dump(2);
}

std::string relnorm_str(const std::string& shape_json, const std::string& p,
                        const std::string& q) {
    const ShapeFile file = parse_shape_file(shape_json);
    std::vector<Point> pts;
    if (const auto* poly = std::get_if<SimplePolygon>(&file.shape)) {
        pts = poly->vertices();
    } else {
        const auto& star = std::get<SegmentStar>(file.shape);
        pts.push_back(star.center());
        for (const Point& e : star.endpoints()) pts.push_back(e);
    }
    const Scalar d =
        relative_distance(convex_hull(pts), parse_point_text(p), parse_point_text(q));
    Json doc = Json::object();
    doc["distance"] = scalar_text(d);
    return doc.dump(2);
}

} // namespace

PYBIND11_MODULE(_kisslab, m) {
    m.doc() = "exact geometry of touching translate families (JSON-string surface)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("classify", &classify_str, py::arg("shape_json"),
          "Pockets, kernel, strip witness, and neighbour bounds as a JSON string.");
    m.def("validate", &validate_str, py::arg("shape_json"), py::arg("vectors_json"),
          "Validation report for a translate family as a JSON string.");
    m.def("search", &search_str, py::arg("shape_json"), py::arg("samples") = 16,
          py::arg("beam") = 64, py::arg("nodes") = 200000L, py::arg("seed") = 0,
          py::arg("threads") = 1,
          "Search for a maximal touching family; returns a JSON string.");
    m.def("audit", &audit_str, py::arg("shape_json"), py::arg("vectors_json"),
          py::arg("center") = std::string(),
          "Proof-chain audit of a family. Returns (report_json, passed); center as "
          "\"x,y\" or empty for automatic kernel selection.");
    m.def("render_svg", &render_str, py::arg("shape_json"), py::arg("vectors_json"),
          py::arg("draw_vectors") = false,
          "Deterministic SVG of the configuration; violations drawn dashed.");
    m.def("symmetral", &symmetral_str, py::arg("shape_json"),
          "Central symmetral of the shape's convex hull as a JSON string.");
    m.def("relative_distance", &relnorm_str, py::arg("shape_json"), py::arg("p"),
          py::arg("q"),
          "Relative distance of two points in the norm of the shape's hull.");
}
