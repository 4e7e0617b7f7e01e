#pragma once

#include "kisslab/audit.hpp"
#include "kisslab/family.hpp"
#include "kisslab/shape_analysis.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace kisslab {

// Insertion-ordered JSON keeps every emitted document byte-deterministic.
using Json = nlohmann::ordered_json;

// Shape document:
//   {"kind": "polygon", "vertices": [["0","0"], ["1","0"], ["0","1"]]}
//   {"kind": "segment_star", "center": ["0","0"], "endpoints": [["1","0"], ...]}
// Coordinates are exact rationals as strings ("3/2", "-1") or JSON integers;
// decimals are rejected. An optional "name" field is carried through.
struct ShapeFile {
    ShapeBase shape;
    std::string name;
};

ShapeFile parse_shape_file(const std::string& text);
std::string serialize_shape_file(const ShapeFile& file);

// Vector list document: {"vectors": [["1","0"], ["0","1"]]}; a bare JSON
// array of pairs is accepted too.
std::vector<Vector> parse_vector_list(const std::string& text);
std::string serialize_vector_list(const std::vector<Vector>& vectors);

// "x,y" with exact rational components, e.g. "3/2,-1".
Point parse_point_text(const std::string& text);

Json point_json(const Point& p);
Json ring_json(const std::vector<Point>& ring);

Json pocket_report_json(const PocketReport& report);
Json kernel_json(const StarKernel& kernel);
Json bounds_json(const BoundsReport& bounds);
Json strip_witness_json(const std::optional<ParallelStripWitness>& witness);
Json validation_json(const ValidationReport& report);
Json audit_json(const AuditReport& report);

} // namespace kisslab
