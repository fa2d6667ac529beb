#include "tropsa/transforms.hpp"

#include "tropsa/abundancy.hpp"
#include "tropsa/error.hpp"
#include "tropsa/linalg.hpp"

#include <algorithm>

namespace tropsa {

AffineMap AffineMap::identity(std::size_t r) { return {RationalMatrix::identity(r), RationalVector(r)}; }

AffineImage apply_affine(const TropicalCurve& c, const AffineMap& map, ContractedLegs legs) {
    const auto r = static_cast<std::size_t>(c.ambient_dim);
    const auto& q = map.linear;
    if (q.cols() != r) fail(ErrorKind::Precondition, "affine map expects dimension " + std::to_string(q.cols()));
    if (!map.offset.empty() && map.offset.size() != q.rows())
        fail(ErrorKind::Precondition, "affine offset has wrong dimension");
    const auto s = q.rows();

    std::vector<RationalVector> edge_img, leg_img;
    for (std::size_t e = 0; e < c.edge_directions.size(); ++e) {
        edge_img.push_back(q.apply(c.edge_directions[e]));
        if (is_zero(edge_img.back()))
            fail(ErrorKind::EdgeContracted, "edge " + c.graph.edges[e].id + " is contracted by the map");
    }
    AffineImage out;
    std::vector<bool> keep_leg(c.leg_directions.size(), true);
    for (std::size_t l = 0; l < c.leg_directions.size(); ++l) {
        leg_img.push_back(q.apply(c.leg_directions[l]));
        if (!is_zero(leg_img.back())) continue;
        if (legs == ContractedLegs::Reject)
            fail(ErrorKind::EdgeContracted, "leg " + c.graph.legs[l].id + " is contracted by the map");
        keep_leg[l] = false;
        out.dilation.dropped_legs.push_back(l);
    }

    // content of all images: gcd of numerators over lcm of denominators
    Integer num = 0, den = 1;
    auto absorb = [&](const RationalVector& v) {
        for (const auto& x : v) {
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num().get_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        }
    };
    for (const auto& v : edge_img) absorb(v);
    for (std::size_t l = 0; l < leg_img.size(); ++l)
        if (keep_leg[l]) absorb(leg_img[l]);
    Rational scale = num == 0 ? Rational(1) : Rational(den, num);
    scale.canonicalize();
    out.dilation.scale = scale;

    auto integral = [&](const RationalVector& v) {
        IntegerVector w(s);
        for (std::size_t i = 0; i < s; ++i) {
            const Rational x = v[i] * scale;
            ensure(x.get_den() == 1, "dilated direction is not integral");
            w[i] = x.get_num();
        }
        return w;
    };

    auto& img = out.curve;
    img.ambient_dim = static_cast<int>(s);
    img.graph.vertices = c.graph.vertices;
    img.graph.edges = c.graph.edges;
    img.subcurve = c.subcurve;
    img.metadata = c.metadata;
    for (std::size_t e = 0; e < edge_img.size(); ++e) {
        img.edge_directions.push_back(integral(edge_img[e]));
        if (c.edge_lengths[e])
            img.edge_lengths.push_back(*c.edge_lengths[e] / scale);
        else
            img.edge_lengths.push_back(std::nullopt);
    }
    for (std::size_t l = 0; l < leg_img.size(); ++l) {
        if (!keep_leg[l]) continue;
        img.graph.legs.push_back(c.graph.legs[l]);
        img.leg_directions.push_back(integral(leg_img[l]));
    }

    img.base_vertex = c.base_vertex;
    RationalVector base = c.base_position.empty() ? RationalVector(r) : c.base_position;
    img.base_position = q.apply(base);
    if (!map.offset.empty())
        for (std::size_t i = 0; i < s; ++i) img.base_position[i] += map.offset[i];
    return out;
}

Projection project_onto_obstruction(const TropicalCurve& c) {
    const auto obs = obstructions(c);
    if (obs.tuples.empty()) fail(ErrorKind::Precondition, "curve is not superabundant; nothing to project onto");

    const auto r = static_cast<std::size_t>(c.ambient_dim);
    std::vector<IntegerVector> best_rows;
    std::size_t best = 0;
    for (std::size_t t = 0; t < obs.tuples.size(); ++t) {
        auto rows = linalg::row_space_basis(obs.tuples[t].lambdas, r);
        if (t == 0 || rows.size() < best_rows.size()) {
            best_rows = std::move(rows);
            best = t;
        }
    }

    Projection p;
    p.lambdas = obs.tuples[best].lambdas;
    p.map.linear = RationalMatrix::from_rows(best_rows, r);
    p.map.offset = RationalVector(best_rows.size());
    p.image = apply_affine(c, p.map, ContractedLegs::Drop);
    return p;
}

NormalForm genus2_normal_form(const TropicalCurve& c) {
    const auto obs = obstructions(c);
    const auto& segs = obs.segments;
    if (obs.basis.size() != 2) fail(ErrorKind::Precondition, "normal form needs genus 2");
    if (segs.segments.size() != 3 || segs.branch_vertices.size() != 2)
        fail(ErrorKind::Precondition, "normal form needs a theta-shaped core");
    for (const auto& sg : segs.segments)
        if (sg.start == sg.end) fail(ErrorKind::Precondition, "normal form needs a theta-shaped core");
    if (obs.tuples.size() != 1)
        fail(ErrorKind::Precondition, "normal form needs a one-dimensional obstruction space");

    // orient every segment from the first branch vertex to the second; the
    // normals then form a circulation, nu_0 + nu_1 + nu_2 = 0
    const auto x = segs.branch_vertices[0];
    std::array<IntegerVector, 3> nu;
    for (std::size_t j = 0; j < 3; ++j) {
        nu[j] = obs.tuples[0].segment_normals[j];
        if (segs.segments[j].start != x)
            for (auto& v : nu[j]) v = -v;
    }

    const auto r = static_cast<std::size_t>(c.ambient_dim);
    NormalForm nf;
    nf.lambdas = {nu[0], nu[1]};
    if (linalg::row_space_basis({nu[0], nu[1]}, r).size() != 2)
        fail(ErrorKind::Precondition, "lambdas are dependent; the superabundancy is planar");
    // complete to an invertible map with unit rows so that no edge is contracted
    std::vector<IntegerVector> rows{nu[0], nu[1]};
    for (std::size_t i = 0; i < r && rows.size() < r; ++i) {
        IntegerVector e(r);
        e[i] = 1;
        rows.push_back(e);
        if (linalg::row_space_basis(rows, r).size() < rows.size()) rows.pop_back();
    }
    nf.map.linear = RationalMatrix::from_rows(rows, r);
    nf.map.offset = RationalVector(r);
    // trees hanging off the core may be contracted, so only the core is mapped
    nf.curve = apply_affine(obs.core, nf.map).curve;
    return nf;
}

} // namespace tropsa
