#pragma once

#include "tropsa/abundancy.hpp"
#include "tropsa/curve.hpp"
#include "tropsa/transforms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tropsa {

struct SearchOptions {
    std::uint64_t subset_cap = std::uint64_t{1} << 20;
    int coeff_bound = 3;
};

enum class Tristate { No, Yes, Unknown };

std::string to_string(Tristate t);

// A cycle of the core whose edge directions all lie in one hyperplane.
struct PlanarWitness {
    std::vector<int> coefficients; // integer combination of core basis cycles
    std::vector<int> edge_vector;  // signed incidence on core edges, entries in {-1,0,1}
    IntegerVector normal;
};

// Tries the basis cycles of the core and their integer combinations with
// coefficients in [-B, B], keeping only combinations that are cycles
// (incidence in {-1,0,1}).
std::optional<PlanarWitness> find_planar_cycle(const TropicalCurve& c, int coeff_bound = 3);

struct IrreducibilityResult {
    Tristate value = Tristate::Unknown;
    // Segments of the core spanning a superabundant subcurve of lower genus.
    std::vector<std::size_t> witness_segments;
    std::uint64_t subsets_checked = 0;
};

// Enumerates proper subsets of core segments in increasing bitmask order and
// reports the first that gives a superabundant subcurve of genus 1..g-1.
// Pre: c is superabundant. Unknown when 2^segments exceeds the cap.
IrreducibilityResult is_irreducible(const TropicalCurve& c, const SearchOptions& opt = {});

struct IndecomposabilityResult {
    Tristate value = Tristate::Unknown;
    std::optional<RationalMatrix> witness; // projection with fewer than r rows
    bool witness_verified = false;
    std::string method;
};

// Looks for a left-kernel element whose lambdas span a proper subspace. With
// a one-dimensional left kernel the answer is exact; otherwise a bounded
// search runs and may return Unknown. Pre: c is superabundant.
IndecomposabilityResult is_indecomposable(const TropicalCurve& c, const SearchOptions& opt = {});

struct SuperabundanceClass {
    AbundancyReport report;
    std::optional<PlanarWitness> planar;
    std::optional<IrreducibilityResult> irreducible;
    std::optional<IndecomposabilityResult> indecomposable;
};

SuperabundanceClass classify(const TropicalCurve& c, const SearchOptions& opt = {});

enum class Genus2Type { NotSuperabundant, Planar, Canonical };

std::string to_string(Genus2Type t);

struct Genus2Classification {
    Genus2Type type = Genus2Type::NotSuperabundant;
    std::optional<PlanarWitness> planar;
    std::optional<NormalForm> normal_form;
};

Genus2Classification classify_genus2(const TropicalCurve& c, const SearchOptions& opt = {});

// 3g - 3 - r g + (r+1) d. Throws Precondition unless d > 2g - 2.
long moduli_dimension(long g, long r, long d);

enum class Verdict { GenericNonRealizable, Inconclusive, NotSuperabundant, OutOfScope };

std::string to_string(Verdict v);

struct VerdictReport {
    Verdict verdict = Verdict::OutOfScope;
    std::string reason;
    long deformation_dim = 0;
    std::optional<long> moduli_dim;
    std::optional<long> degree;
    std::optional<std::string> core_template;
};

VerdictReport realizability_verdict(const TropicalCurve& c, const SearchOptions& opt = {});

// True when the smoothed cores admit a graph isomorphism carrying each
// segment to one with exactly the same direction span.
bool core_isomorphic(const TropicalCurve& a, const TropicalCurve& b);

namespace serial {

// Reference version of is_irreducible without OpenMP; stops at the first hit.
IrreducibilityResult is_irreducible(const TropicalCurve& c, const SearchOptions& opt = {});

} // namespace serial

} // namespace tropsa
