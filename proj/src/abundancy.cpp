#include "tropsa/abundancy.hpp"

#include "tropsa/error.hpp"
#include "tropsa/linalg.hpp"

namespace tropsa {

RationalMatrix abundancy_matrix(const TropicalCurve& c, const std::vector<Cycle>& basis) {
    const auto r = static_cast<std::size_t>(c.ambient_dim);
    const auto b = c.graph.edges.size();
    RationalMatrix k(basis.size() * r, b);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto eta = cycle_vector(basis[i], b);
        for (std::size_t e = 0; e < b; ++e) {
            if (eta[e] == 0) continue;
            for (std::size_t x = 0; x < r; ++x) k(i * r + x, e) = eta[e] * c.edge_directions[e][x];
        }
    }
    return k;
}

RationalMatrix abundancy_matrix(const TropicalCurve& c) { return abundancy_matrix(c, cycle_basis(c.graph)); }

AbundancyReport analyze(const TropicalCurve& c, const std::vector<Cycle>& basis) {
    AbundancyReport rep;
    const auto k = abundancy_matrix(c, basis);
    const long b = static_cast<long>(c.graph.edges.size());
    const long g = static_cast<long>(basis.size());
    const long r = c.ambient_dim;

    rep.edges = c.graph.edges.size();
    rep.legs = c.graph.legs.size();
    rep.genus = basis.size();
    rep.ambient_dim = c.ambient_dim;
    rep.rank = linalg::rank(k);
    rep.actual_dim = b - static_cast<long>(rep.rank);
    rep.expected_dim = b - r * g;
    rep.excess = r * g - static_cast<long>(rep.rank);
    rep.superabundant = rep.excess > 0;

    if (c.has_lengths()) {
        const auto len = c.lengths();
        rep.lengths_in_kernel = is_zero(k.apply(len));
        if (rep.lengths_in_kernel) rep.positive_witness = len;
    }
    if (!rep.positive_witness) {
        rep.positive_witness = linalg::strictly_positive_kernel_point(k);
        rep.cone_empty = !rep.positive_witness;
    }

    if (is_trivalent(c) && component_count(c.graph) == 1)
        rep.trivalent_expected_dim = static_cast<long>(rep.legs) + 3 * g - 3 - r * g;
    return rep;
}

AbundancyReport analyze(const TropicalCurve& c) { return analyze(c, cycle_basis(c.graph)); }

ObstructionTuple obstruction_tuple(const IntegerVector& y, const SegmentDecomposition& segs, int r) {
    const auto ru = static_cast<std::size_t>(r);
    ensure(y.size() == segs.eta.size() * ru, "obstruction vector has wrong length");
    ObstructionTuple t;
    for (std::size_t i = 0; i < segs.eta.size(); ++i)
        t.lambdas.emplace_back(y.begin() + i * ru, y.begin() + (i + 1) * ru);
    for (std::size_t j = 0; j < segs.segments.size(); ++j) {
        IntegerVector nu(ru);
        for (std::size_t i = 0; i < segs.eta.size(); ++i)
            if (segs.eta[i][j] != 0)
                for (std::size_t x = 0; x < ru; ++x) nu[x] += segs.eta[i][j] * t.lambdas[i][x];
        t.segment_normals.push_back(std::move(nu));
    }
    return t;
}

ObstructionSet obstructions(const TropicalCurve& c) {
    ObstructionSet s;
    s.core = core_neighbourhood(c);
    s.basis = cycle_basis(s.core.graph);
    s.segments = smoothing(s.core, s.basis);
    s.matrix = abundancy_matrix(s.core, s.basis);
    for (const auto& y : linalg::left_kernel_basis(s.matrix))
        s.tuples.push_back(obstruction_tuple(y, s.segments, c.ambient_dim));
    return s;
}

bool verify_obstruction(const TropicalCurve& c, const ObstructionTuple& t) {
    const auto core = core_neighbourhood(c);
    const auto basis = cycle_basis(core.graph);
    const auto segs = smoothing(core, basis);
    const auto k = abundancy_matrix(core, basis);
    const auto r = static_cast<std::size_t>(c.ambient_dim);

    if (t.lambdas.size() != basis.size() || t.segment_normals.size() != segs.segments.size()) return false;
    RationalVector y;
    for (const auto& l : t.lambdas) {
        if (l.size() != r) return false;
        y.insert(y.end(), l.begin(), l.end());
    }
    if (is_zero(y)) return false;
    if (!is_zero(k.left_apply(y))) return false;

    IntegerVector flat;
    for (const auto& l : t.lambdas) flat.insert(flat.end(), l.begin(), l.end());
    const auto expect = obstruction_tuple(flat, segs, c.ambient_dim);
    if (expect.segment_normals != t.segment_normals) return false;

    for (std::size_t j = 0; j < segs.segments.size(); ++j)
        for (const auto& oe : segs.segments[j].edges)
            if (dot(t.segment_normals[j], core.edge_directions[oe.edge]) != 0) return false;
    return true;
}

} // namespace tropsa
