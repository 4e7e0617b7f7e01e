#pragma once

#include "kisslab/polygon.hpp"

#include <cstddef>
#include <vector>

namespace kisslab {

// Relation of J and its translate J + x.
DiskRelation placement_relation(const SimplePolygon& j, const Vector& x);

// One contact mode between J and a translate J + x: while x moves along the
// segment [lo, hi], the named features stay in contact.
enum class ContactKind {
    VertexOnEdge, // vertex `vertex` of the translate slides along edge `edge` of J
    EdgeOnVertex, // edge `edge` of the translate slides across vertex `vertex` of J
};

struct ContactFamily {
    ContactKind kind;
    std::size_t vertex = 0;
    std::size_t edge = 0;
    Vector lo; // translation at the start of the slide
    Vector hi; // translation at the end of the slide
};

// Every vertex/edge contact family of J against itself, in deterministic
// (kind, vertex, edge) order. Families are geometric candidates only; sampled
// translations still need exact classification.
std::vector<ContactFamily> contact_families(const SimplePolygon& j);

// Sampled touching placements: each family is sampled at samples_per_family
// equal steps (endpoints included), every sample is verified to give
// DiskRelation::Touch exactly, duplicates removed, result sorted
// lexicographically. For convex J the result covers the boundary of the
// difference body: its vertices plus the sampled edge points.
std::vector<Vector> touching_placements(const SimplePolygon& j, int samples_per_family);

} // namespace kisslab
