#pragma once

#include "tropsa/graph.hpp"
#include "tropsa/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropsa {

// A parametrized tropical curve in R^r.
//
// Edge e runs from tail to head with displacement length * direction.
// Directions are integer vectors and need not be primitive; a direction of
// content m is an edge of weight m. Lengths may be absent when only the
// combinatorial type is known.
struct TropicalCurve {
    int ambient_dim = 0;
    Graph graph;
    std::vector<IntegerVector> edge_directions;
    std::vector<std::optional<Rational>> edge_lengths;
    std::vector<IntegerVector> leg_directions;

    std::size_t base_vertex = 0;
    RationalVector base_position; // empty means the origin

    // Subcurves (cores, segment subsets) waive the balancing condition.
    bool subcurve = false;

    std::map<std::string, std::string> metadata;

    std::size_t add_vertex(std::string name);
    std::size_t add_edge(std::size_t tail, std::size_t head, IntegerVector direction,
                         std::optional<Rational> length);
    std::size_t add_leg(std::size_t vertex, IntegerVector direction);

    bool has_lengths() const;
    // Throws Precondition if any length is missing.
    RationalVector lengths() const;
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::size_t> unbalanced_vertices;
    bool closure_checked = false;

    bool ok() const { return errors.empty(); }
};

// Dimensions, nonzero directions, positive lengths, balancing (unless the
// curve is a subcurve) and cycle closure K l = 0 when lengths are present.
ValidationReport validate(const TropicalCurve& c);

// Sum of outgoing edge and leg directions at v.
IntegerVector balancing_defect(const TropicalCurve& c, std::size_t v);

// Positions reached by walking edges from the base vertex. Vertices in other
// components are nullopt. Needs lengths.
std::vector<std::optional<RationalVector>> vertex_positions(const TropicalCurve& c);

// Keeps the listed edges and their endpoints, drops all legs, marks the
// result as a subcurve. Vertex and edge ids carry over.
TropicalCurve restrict_to_edges(const TropicalCurve& c, const std::vector<bool>& keep_edge);

// Removes legs and bridges, then isolated vertices.
TropicalCurve core_neighbourhood(const TropicalCurve& c);

// Edges that lie on no cycle.
std::vector<bool> bridges(const Graph& g);

struct DegreeProfile {
    // Weighted leg counts in directions e_1..e_r then -(e_1+...+e_r).
    std::vector<long> counts;
    std::vector<std::size_t> nonstandard_legs;
    std::optional<long> standard_degree; // set iff all legs standard and counts equal
};

DegreeProfile degree_profile(const TropicalCurve& c);

// Every vertex has valence three, counting edge ends and legs.
bool is_trivalent(const TropicalCurve& c);

// Replaces edge e by two edges of the same direction, meeting at a new
// vertex a fraction t (0 < t < 1) along it.
TropicalCurve subdivide_edge(const TropicalCurve& c, std::size_t e, const Rational& t);

} // namespace tropsa
