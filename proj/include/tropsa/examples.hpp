#pragma once

#include "tropsa/curve.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropsa::examples {

// tuning_fork_r2, tuning_fork_r3, composite_fig3, phi3_sub, phi3, phi4_sub,
// phi4, triangle_g3, planar_g1
const std::vector<std::string>& builtin_names();

// Trivalent curves with standard legs built around phi3_sub and phi4_sub:
// fixture_g3_d5, fixture_g4
const std::vector<std::string>& fixture_names();

// Any builtin or fixture name. Throws InvalidInput for unknown names.
TropicalCurve builtin(std::string_view name);

// Published numbers a template is meant to reproduce.
struct ExpectedFacts {
    long genus = 0;
    long actual_dim = 0;
    long expected_dim = 0;
    std::optional<bool> irreducible;
    std::optional<bool> indecomposable;
    std::optional<bool> planar;
};

std::optional<ExpectedFacts> expected_facts(std::string_view name);

// Hangs caterpillar trees of standard legs off every unbalanced vertex so
// the curve balances with the fewest legs, then adds `extra_degree` full sets
// {e_1, ..., e_r, u} to the first tree. Vertices that are already trivalent
// in c must be balanced.
TropicalCurve attach_standard_trees(const TropicalCurve& c, long extra_degree = 0);

// Fewest standard legs summing to v: sum(v) + (r+1) max(0, -min v).
long minimal_leg_count(const IntegerVector& v);

// The standard tropical plane in R^3: cones spanned by two of e1, e2, e3,
// u = -(e1+e2+e3).
bool in_standard_tropical_plane(const RationalVector& p);

// Every edge and leg image lies in the standard tropical plane. Needs r = 3
// and lengths.
bool verify_plane_containment(const TropicalCurve& c);

} // namespace tropsa::examples
