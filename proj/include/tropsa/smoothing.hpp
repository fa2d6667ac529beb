#pragma once

#include "tropsa/curve.hpp"

#include <vector>

namespace tropsa {

// Maximal chain of edges through 2-valent vertices, oriented from start to
// end. A component that is a bare cycle becomes one closed segment with
// start == end at its lowest vertex.
struct Segment {
    std::vector<OrientedEdge> edges;
    std::size_t start = 0;
    std::size_t end = 0;
    bool closed = false;
};

struct SegmentDecomposition {
    std::vector<Segment> segments;
    // eta[i][j]: +1, -1 or 0 as basis cycle i runs along segment j.
    std::vector<std::vector<int>> eta;
    std::vector<std::size_t> segment_of_edge;
    std::vector<std::size_t> branch_vertices; // valence != 2, ascending
};

// Requires a core: no legs and no bridges. The cycle basis must belong to
// the same graph; each basis cycle is checked to traverse every segment it
// touches in one consistent direction.
SegmentDecomposition smoothing(const TropicalCurve& core, const std::vector<Cycle>& basis);
SegmentDecomposition smoothing(const TropicalCurve& core);

// The subcurve formed by the chosen segments of a core.
TropicalCurve subcurve(const TropicalCurve& core, const SegmentDecomposition& segs,
                       const std::vector<std::size_t>& segment_ids);

// Convenience: takes the core neighbourhood of an arbitrary curve first.
TropicalCurve subcurve(const TropicalCurve& curve, const std::vector<std::size_t>& segment_ids);

// Primitive row basis of the span of a segment's edge directions.
std::vector<IntegerVector> segment_span(const TropicalCurve& core, const Segment& s);

} // namespace tropsa
