#pragma once

#include "tropsa/curve.hpp"
#include "tropsa/matrix.hpp"

#include <array>
#include <vector>

namespace tropsa {

// x -> linear * x + offset, from Q^r to Q^s.
struct AffineMap {
    RationalMatrix linear;
    RationalVector offset; // empty means zero

    static AffineMap identity(std::size_t r);
};

enum class ContractedLegs { Reject, Drop };

// One positive rational c is applied to the whole curve: every new direction
// is c * Q w and every new length is l / c, so displacements map exactly and
// balancing survives. c is the smallest value making all new directions
// integral with no common factor.
struct DilationRecord {
    Rational scale;
    std::vector<std::size_t> dropped_legs;
};

struct AffineImage {
    TropicalCurve curve;
    DilationRecord dilation;
};

// Throws EdgeContracted if Q w = 0 for an edge, or for a leg under Reject.
AffineImage apply_affine(const TropicalCurve& c, const AffineMap& map,
                         ContractedLegs legs = ContractedLegs::Reject);

struct Projection {
    AffineMap map; // rows: primitive basis of the lambda span
    std::vector<IntegerVector> lambdas;
    AffineImage image;
};

// Projects onto the span of the lambdas of the obstruction with the smallest
// span. Legs the projection contracts are dropped. Pre: superabundant.
Projection project_onto_obstruction(const TropicalCurve& c);

struct NormalForm {
    AffineMap map;
    std::array<IntegerVector, 2> lambdas;
    TropicalCurve curve;
};

// Genus-2 theta type: the map's first two rows are the segment normals
// lambda_1, lambda_2, so the three segments of the image are annihilated by
// e_1, e_2 and e_1 + e_2. For r > 2 the map is completed to an invertible one
// by unit rows instead of projecting, which would contract edges lying in
// both hyperplanes. Pre: genus 2, core is a
// theta, superabundant with independent lambdas. The returned curve is the
// image of the core; trees and legs are left behind.
NormalForm genus2_normal_form(const TropicalCurve& c);

} // namespace tropsa
