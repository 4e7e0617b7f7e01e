#pragma once

#include "kisslab/family.hpp"
#include "kisslab/shape_io.hpp"

#include <optional>

namespace kisslab {

// Document-level operations shared by the command line tool and the python
// bindings, so both surfaces emit identical JSON.

Json classify_document(const ShapeFile& file);

Json search_document(const ShapeFile& file, const SearchParams& params);

struct AuditOutcome {
    Json document;
    bool passed = false; // no gated proof-chain check reported Fail
};

// Recenters the polygon so the star center sits at the origin and audits the
// family. With no explicit center, the origin is used when it already lies in
// the kernel, otherwise the kernel witness point.
AuditOutcome audit_document(const ShapeFile& file, const std::vector<Vector>& vectors,
                            const std::optional<Point>& center);

} // namespace kisslab
