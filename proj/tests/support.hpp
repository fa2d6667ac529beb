#pragma once

// Shared generators and independent oracles for the test binaries. Nothing in
// here calls the library's linear algebra.

#include "tropsa/curve.hpp"
#include "tropsa/smoothing.hpp"
#include "tropsa/rational.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace support {

using tropsa::Integer;
using tropsa::IntegerVector;
using tropsa::Rational;
using tropsa::RationalVector;
using tropsa::TropicalCurve;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Textbook Gaussian elimination over Q.
inline std::size_t plain_rank(std::vector<RationalVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows.size(), m = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && rows[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const Rational f = rows[i][col] / rows[rank][col];
            for (std::size_t k = col; k < m; ++k) rows[i][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Every signed edge vector in {-1,0,1}^E with zero boundary: the whole cycle
// space's small elements, found by brute force. Only for a handful of edges.
inline std::vector<std::vector<int>> all_signed_cycles(const tropsa::Graph& g) {
    const std::size_t b = g.edges.size();
    std::vector<std::vector<int>> out;
    std::vector<int> s(b, -1);
    long total = 1;
    for (std::size_t i = 0; i < b; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        long x = code;
        for (std::size_t i = 0; i < b; ++i) {
            s[i] = static_cast<int>(x % 3) - 1;
            x /= 3;
        }
        std::vector<long> boundary(g.vertex_count(), 0);
        for (std::size_t e = 0; e < b; ++e) {
            boundary[g.edges[e].head] += s[e];
            boundary[g.edges[e].tail] -= s[e];
        }
        if (std::all_of(boundary.begin(), boundary.end(), [](long v) { return v == 0; }) &&
            std::any_of(s.begin(), s.end(), [](int v) { return v != 0; }))
            out.push_back(s);
    }
    return out;
}

// dim of {lengths : every cycle closes}, from the closure equations of every
// cycle found by all_signed_cycles.
inline long closure_kernel_dim(const TropicalCurve& c, const std::vector<std::vector<int>>& cycles) {
    const std::size_t b = c.graph.edges.size();
    const int r = c.ambient_dim;
    std::vector<RationalVector> rows;
    for (const auto& s : cycles)
        for (int i = 0; i < r; ++i) {
            RationalVector row(b);
            for (std::size_t e = 0; e < b; ++e) row[e] = Rational(c.edge_directions[e][i] * s[e]);
            rows.push_back(std::move(row));
        }
    return static_cast<long>(b) - static_cast<long>(plain_rank(rows));
}

inline long closure_kernel_dim(const TropicalCurve& c) { return closure_kernel_dim(c, all_signed_cycles(c.graph)); }

// Same dimension through vertex potentials: unknowns (lengths, positions),
// one equation p_head - p_tail = l_e w_e per edge and coordinate, minus the
// translations of each component.
inline long potential_kernel_dim(const TropicalCurve& c) {
    const std::size_t b = c.graph.edges.size(), n = c.graph.vertex_count();
    const std::size_t r = c.ambient_dim;
    std::vector<RationalVector> rows;
    for (std::size_t e = 0; e < b; ++e)
        for (std::size_t i = 0; i < r; ++i) {
            RationalVector row(b + r * n);
            row[e] = Rational(-c.edge_directions[e][i]);
            row[b + c.graph.edges[e].head * r + i] += 1;
            row[b + c.graph.edges[e].tail * r + i] -= 1;
            rows.push_back(std::move(row));
        }
    const long solutions = static_cast<long>(b + r * n) - static_cast<long>(plain_rank(rows));
    return solutions - static_cast<long>(r * tropsa::component_count(c.graph));
}

inline IntegerVector random_direction(Rng& rng, int r, long lo, long hi) {
    IntegerVector v(r);
    do {
        for (auto& x : v) x = uniform(rng, lo, hi);
    } while (tropsa::is_zero(v));
    return v;
}

inline RationalVector random_rational_vector(Rng& rng, int r, long lo, long hi) {
    RationalVector v(r);
    for (auto& x : v) x = Rational(uniform(rng, lo, hi), uniform(rng, 1, 3));
    for (auto& x : v) x.canonicalize();
    return v;
}

inline RationalVector add_scaled(const RationalVector& p, const IntegerVector& d, const Rational& t) {
    RationalVector out = p;
    for (std::size_t i = 0; i < p.size(); ++i) out[i] += t * Rational(d[i]);
    return out;
}

// Adds an edge between two placed vertices, direction the primitive
// displacement times a random weight. Returns false for coincident points.
inline bool edge_between(Rng& rng, TropicalCurve& c, const std::vector<RationalVector>& pos, std::size_t a,
                         std::size_t b) {
    RationalVector d(c.ambient_dim);
    for (int i = 0; i < c.ambient_dim; ++i) d[i] = pos[b][i] - pos[a][i];
    if (tropsa::is_zero(d)) return false;
    IntegerVector w = tropsa::primitive_on_ray(d);
    const long weight = uniform(rng, 1, 2);
    for (auto& x : w) x *= weight;
    Rational len;
    for (int i = 0; i < c.ambient_dim; ++i)
        if (w[i] != 0) len = d[i] / Rational(w[i]);
    c.add_edge(a, b, w, len);
    return true;
}

// One leg per unbalanced vertex.
inline void add_deficit_legs(TropicalCurve& c) {
    for (std::size_t v = 0; v < c.graph.vertex_count(); ++v) {
        auto d = tropsa::balancing_defect(c, v);
        if (tropsa::is_zero(d)) continue;
        for (auto& x : d) x = -x;
        c.add_leg(v, d);
    }
}

// Connected balanced curve from random rational vertex positions. With
// `flat`, all points lie in a random rational hyperplane, which makes any
// cycle planar and the curve superabundant as soon as it has one.
inline TropicalCurve random_curve(Rng& rng, int r, std::size_t vertices, std::size_t extra_edges, bool flat = false) {
    TropicalCurve c;
    c.ambient_dim = r;
    flat = flat && r > 1;
    std::vector<RationalVector> pos;
    IntegerVector normal = random_direction(rng, r, -2, 2);
    for (std::size_t v = 0; v < vertices; ++v) {
        RationalVector p;
        for (int tries = 0; tries < 100; ++tries) {
            p = random_rational_vector(rng, r, -6, 6);
            if (flat) {
                // project onto normal . x = 0 along the first nonzero coordinate of the normal
                std::size_t k = 0;
                while (normal[k] == 0) ++k;
                Rational s = 0;
                for (int i = 0; i < r; ++i)
                    if (static_cast<std::size_t>(i) != k) s += Rational(normal[i]) * p[i];
                p[k] = -s / Rational(normal[k]);
            }
            if (std::find(pos.begin(), pos.end(), p) == pos.end()) break;
        }
        c.add_vertex("v" + std::to_string(v));
        pos.push_back(p);
    }
    c.base_vertex = 0;
    c.base_position = pos[0];
    for (std::size_t v = 1; v < vertices; ++v) edge_between(rng, c, pos, uniform(rng, 0, v - 1), v);
    for (std::size_t k = 0; k < extra_edges; ++k) {
        const auto a = uniform(rng, 0, vertices - 1), b = uniform(rng, 0, vertices - 1);
        if (a != b) edge_between(rng, c, pos, a, b);
    }
    add_deficit_legs(c);
    return c;
}

// Theta graph A, B with three segments through the listed interior points.
inline TropicalCurve theta_through(Rng& rng, const RationalVector& a, const RationalVector& b,
                                   const std::vector<std::vector<RationalVector>>& interior) {
    TropicalCurve c;
    c.ambient_dim = static_cast<int>(a.size());
    std::vector<RationalVector> pos{a, b};
    c.add_vertex("A");
    c.add_vertex("B");
    c.base_position = a;
    for (std::size_t s = 0; s < interior.size(); ++s) {
        std::size_t prev = 0;
        for (std::size_t k = 0; k < interior[s].size(); ++k) {
            pos.push_back(interior[s][k]);
            const auto v = c.add_vertex("S" + std::to_string(s) + "_" + std::to_string(k));
            if (!edge_between(rng, c, pos, prev, v)) return {};
            prev = v;
        }
        if (!edge_between(rng, c, pos, prev, 1)) return {};
    }
    add_deficit_legs(c);
    return c;
}

// Random invertible rational matrix with small entries.
inline std::vector<RationalVector> random_invertible(Rng& rng, int r) {
    for (;;) {
        std::vector<RationalVector> m(r, RationalVector(r));
        for (auto& row : m)
            for (auto& x : row) {
                x = Rational(uniform(rng, -3, 3), uniform(rng, 1, 3));
                x.canonicalize();
            }
        if (plain_rank(m) == static_cast<std::size_t>(r)) return m;
    }
}

// Every segment of the normal form is annihilated by one of e1, e2, e1+e2,
// each used once.
inline bool on_normal_lines(const TropicalCurve& nf) {
    const auto segs = tropsa::smoothing(nf);
    if (segs.segments.size() != 3) return false;
    IntegerVector normals[3] = {IntegerVector(nf.ambient_dim), IntegerVector(nf.ambient_dim),
                                IntegerVector(nf.ambient_dim)};
    normals[0][0] = normals[2][0] = 1;
    normals[1][1] = normals[2][1] = 1;
    std::set<int> used;
    for (const auto& sg : segs.segments) {
        int hit = -1;
        for (int k = 0; k < 3; ++k) {
            bool all = true;
            for (const auto& oe : sg.edges) all = all && tropsa::dot(normals[k], nf.edge_directions[oe.edge]) == 0;
            if (all) hit = k;
        }
        if (hit < 0) return false;
        used.insert(hit);
    }
    return used.size() == 3;
}

} // namespace support
