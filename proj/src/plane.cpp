#include "tropsa/examples.hpp"

#include "tropsa/error.hpp"

#include <algorithm>
#include <functional>

namespace tropsa::examples {

bool in_standard_tropical_plane(const RationalVector& p) {
    if (p.size() != 3) fail(ErrorKind::Precondition, "the standard tropical plane lives in R^3");
    // cone(e_i, e_j): third coordinate zero, the others nonnegative
    for (int k = 0; k < 3; ++k) {
        const int i = (k + 1) % 3, j = (k + 2) % 3;
        if (p[k] == 0 && p[i] >= 0 && p[j] >= 0) return true;
    }
    // cone(u, e_i): the other two coordinates equal and nonpositive, p_i at least that
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (p[j] == p[k] && p[j] <= 0 && p[i] >= p[j]) return true;
    }
    return false;
}

namespace {

// Parameters in (lo, hi) where some p_i or p_i - p_j changes sign along
// x + t d. hi < 0 means unbounded.
std::vector<Rational> breakpoints(const RationalVector& x, const RationalVector& d, const Rational& hi) {
    std::vector<std::function<Rational(const RationalVector&)>> forms;
    for (int i = 0; i < 3; ++i) {
        forms.push_back([i](const RationalVector& v) { return v[i]; });
        for (int j = i + 1; j < 3; ++j) forms.push_back([i, j](const RationalVector& v) { return v[i] - v[j]; });
    }
    std::vector<Rational> ts{Rational(0)};
    for (const auto& f : forms) {
        const Rational fd = f(d);
        if (fd == 0) continue;
        const Rational t = -f(x) / fd;
        if (t > 0 && (hi < 0 || t < hi)) ts.push_back(t);
    }
    if (hi >= 0) ts.push_back(hi);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

// The plane is a finite union of polyhedral cones, so a segment between
// consecutive breakpoints lies in it iff its endpoints and midpoint do.
bool segment_inside(const RationalVector& x, const RationalVector& d, const Rational& hi) {
    auto ts = breakpoints(x, d, hi);
    if (hi < 0) ts.push_back(ts.back() + 1);
    auto at = [&](const Rational& t) {
        RationalVector p(3);
        for (int i = 0; i < 3; ++i) p[i] = x[i] + t * d[i];
        return p;
    };
    for (std::size_t k = 0; k < ts.size(); ++k) {
        if (!in_standard_tropical_plane(at(ts[k]))) return false;
        if (k + 1 < ts.size() && !in_standard_tropical_plane(at((ts[k] + ts[k + 1]) / 2))) return false;
    }
    return true;
}

} // namespace

bool verify_plane_containment(const TropicalCurve& c) {
    if (c.ambient_dim != 3) fail(ErrorKind::Precondition, "plane containment needs r = 3");
    if (c.base_position.empty()) fail(ErrorKind::Precondition, "plane containment needs a base position");
    const auto pos = vertex_positions(c);
    for (std::size_t v = 0; v < pos.size(); ++v)
        if (!pos[v]) fail(ErrorKind::Precondition, "vertex " + c.graph.vertices[v] + " is not reachable from the base");

    for (std::size_t e = 0; e < c.graph.edges.size(); ++e) {
        const auto& x = *pos[c.graph.edges[e].tail];
        RationalVector d(3);
        for (int i = 0; i < 3; ++i) d[i] = Rational(c.edge_directions[e][i]) * *c.edge_lengths[e];
        if (!segment_inside(x, d, Rational(1))) return false;
    }
    for (std::size_t l = 0; l < c.graph.legs.size(); ++l) {
        const auto& x = *pos[c.graph.legs[l].vertex];
        if (!segment_inside(x, to_rational(c.leg_directions[l]), Rational(-1))) return false;
    }
    return true;
}

} // namespace tropsa::examples
