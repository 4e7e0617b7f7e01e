#pragma once

#include <stdexcept>
#include <string>

namespace kisslab {

// Malformed input text: bad rational literal, wrong JSON shape, bad CLI value.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally invalid geometry: too few vertices, zero area, self-intersection,
// duplicate family vectors, and similar contract violations.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Hull requested for a point set whose affine hull is not the whole plane.
class DegenerateHull : public ValidationError {
public:
    using ValidationError::ValidationError;
};

} // namespace kisslab
