#pragma once

#include "kisslab/convex.hpp"
#include "kisslab/family.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kisslab {

enum class CheckStatus { Pass, Fail, Degenerate };

// (i, j, k): the hull of translate i has both x_j and x_k strictly inside,
// one more interior point than a valid configuration admits.
struct BezdekTriple {
    std::size_t i, j, k;
};

// Mechanical re-check of the 35-bound proof chain on one concrete family.
// Every field is computed with exact arithmetic; no check result depends on
// any other, so individual failures stay visible.
struct AuditReport {
    std::size_t n = 0;

    CheckStatus lemma1_interior = CheckStatus::Fail; // o interior to C = conv X
    CheckStatus lemma1_boundary = CheckStatus::Fail; // X on the boundary of C

    // Touch witnesses w_i, one per translate, in the same counterclockwise
    // cyclic order around o as the x_i. Degenerate when witnesses collide or
    // share a ray from o; the order claim presumes distinct rays.
    CheckStatus ccw_witnesses = CheckStatus::Degenerate;
    std::vector<Point> witnesses;

    CheckStatus bezdek = CheckStatus::Pass; // each int conv(x_i + S): at most one x_j
    std::vector<BezdekTriple> bezdek_offenders;

    std::vector<std::size_t> separated_subfamily; // maximum pairwise-separated X'
    CheckStatus separated_size_ok = CheckStatus::Fail; // |X'| >= floor((n-2)/2)

    CheckStatus containment = CheckStatus::Fail;  // X inside K - K
    CheckStatus dist_k_ok = CheckStatus::Fail;    // K-distance >= 1 on X' pairs
    CheckStatus dist_cbar_ok = CheckStatus::Fail; // symmetral-of-C distance >= 1/2 on X' pairs

    std::optional<Scalar> perimeter;              // perimeter of C in its symmetral norm
    CheckStatus perimeter_ok = CheckStatus::Fail; // perimeter <= 8

    // n <= 2 * floor(2 * perimeter) + 3, capped at 35: the distance chain caps
    // |X'| by floor(perimeter / (1/2)) and floor((n-2)/2) <= |X'| caps n.
    int chain_bound = 35;

    std::string maximality_note;
};

// Separatedness of translates i and j: neither x_i inside int conv(x_j + S)
// nor x_j inside int conv(x_i + S).
bool separated_pair(const ConvexPolygon& hull_of_base, const Vector& xi, const Vector& xj);

// Maximum-cardinality pairwise-separated index subset, by exact independent
// set search on the (small) conflict graph. Ties resolve to the
// lexicographically smallest index list.
std::vector<std::size_t> extract_separated_subfamily(const SimplePolygon& base,
                                                     const std::vector<Vector>& vectors);

// Full proof-chain audit. Requires the base to be starlike at the origin and
// the family to validate; violations of either raise ValidationError.
AuditReport audit_theorem1(const SimplePolygon& base, const std::vector<Vector>& vectors);

const char* check_status_name(CheckStatus s);

} // namespace kisslab
