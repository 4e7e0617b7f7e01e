#pragma once

#include "kisslab/family.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace kisslab {

struct RenderOptions {
    // Translate indices to draw in the violation style (red dashed outline).
    std::vector<std::size_t> violating;
    // Draw each translation vector as an arrow from the origin.
    bool draw_vectors = false;
};

// Deterministic SVG 1.1 document: the base shape filled, translates outlined,
// violations highlighted. The viewBox covers all geometry with a 5% margin.
// Coordinates are decimal approximations for display only.
std::string render_svg(const ShapeBase& base, const std::vector<Vector>& vectors,
                       const RenderOptions& options);

} // namespace kisslab
