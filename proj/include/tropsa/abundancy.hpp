#pragma once

#include "tropsa/curve.hpp"
#include "tropsa/matrix.hpp"
#include "tropsa/smoothing.hpp"

#include <optional>
#include <vector>

namespace tropsa {

// K is (g*r) x b. Row i*r + c, column e holds eta_{i,e} * w_e[c], where
// eta_{i,e} is the signed multiplicity of edge e in basis cycle i. Its kernel
// is the space of length vectors satisfying every cycle closure.
RationalMatrix abundancy_matrix(const TropicalCurve& c, const std::vector<Cycle>& basis);
RationalMatrix abundancy_matrix(const TropicalCurve& c);

struct AbundancyReport {
    std::size_t edges = 0;
    std::size_t legs = 0;
    std::size_t genus = 0;
    int ambient_dim = 0;
    std::size_t rank = 0;
    long actual_dim = 0;   // b - rank K
    long expected_dim = 0; // b - r g
    long excess = 0;       // r g - rank K
    bool superabundant = false;

    bool lengths_in_kernel = false;
    // The curve's own lengths when present, otherwise a point of the open
    // positive cone of ker K if one exists.
    std::optional<RationalVector> positive_witness;
    bool cone_empty = false;

    // n + 3g - 3 - r g, filled in for connected trivalent curves.
    std::optional<long> trivalent_expected_dim;
};

AbundancyReport analyze(const TropicalCurve& c);
AbundancyReport analyze(const TropicalCurve& c, const std::vector<Cycle>& basis);

// One element of the left kernel of K, split into g covectors in Q^r.
struct ObstructionTuple {
    std::vector<IntegerVector> lambdas;         // one per basis cycle
    std::vector<IntegerVector> segment_normals; // nu_j = sum_i eta_ij lambda_i
};

// Everything an obstruction refers to: the core, its cycle basis and its
// segments. Tuples form a basis of the left kernel of K(core).
struct ObstructionSet {
    TropicalCurve core;
    std::vector<Cycle> basis;
    SegmentDecomposition segments;
    RationalMatrix matrix;
    std::vector<ObstructionTuple> tuples;
};

ObstructionSet obstructions(const TropicalCurve& c);

// Recomputes the core data and checks the tuple is nonzero, lies in the left
// kernel and each segment normal annihilates every edge of its segment.
bool verify_obstruction(const TropicalCurve& c, const ObstructionTuple& t);

// Splits a left-kernel vector of length g*r into g covectors and computes the
// segment normals.
ObstructionTuple obstruction_tuple(const IntegerVector& y, const SegmentDecomposition& segs, int r);

} // namespace tropsa
