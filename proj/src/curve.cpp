#include "tropsa/curve.hpp"

#include "tropsa/error.hpp"

#include <algorithm>
#include <deque>

namespace tropsa {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, const std::string& stem) {
    auto used = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
    if (!used(stem)) return stem;
    for (std::size_t k = 1;; ++k) {
        auto s = stem + "." + std::to_string(k);
        if (!used(s)) return s;
    }
}

std::vector<std::string> edge_ids(const Graph& g) {
    std::vector<std::string> ids;
    for (const auto& e : g.edges) ids.push_back(e.id);
    return ids;
}

std::vector<std::string> leg_ids(const Graph& g) {
    std::vector<std::string> ids;
    for (const auto& l : g.legs) ids.push_back(l.id);
    return ids;
}

} // namespace

std::size_t TropicalCurve::add_vertex(std::string name) {
    if (graph.find_vertex(name)) fail(ErrorKind::InvalidInput, "duplicate vertex id \"" + name + "\"");
    graph.vertices.push_back(std::move(name));
    return graph.vertices.size() - 1;
}

std::size_t TropicalCurve::add_edge(std::size_t tail, std::size_t head, IntegerVector direction,
                                    std::optional<Rational> length) {
    if (tail >= graph.vertex_count() || head >= graph.vertex_count())
        fail(ErrorKind::InvalidInput, "edge endpoint out of range");
    const auto id = fresh_name(edge_ids(graph), "e" + std::to_string(graph.edges.size()));
    graph.edges.push_back({id, tail, head});
    edge_directions.push_back(std::move(direction));
    edge_lengths.push_back(std::move(length));
    return graph.edges.size() - 1;
}

std::size_t TropicalCurve::add_leg(std::size_t vertex, IntegerVector direction) {
    if (vertex >= graph.vertex_count()) fail(ErrorKind::InvalidInput, "leg vertex out of range");
    const auto id = fresh_name(leg_ids(graph), "l" + std::to_string(graph.legs.size()));
    graph.legs.push_back({id, vertex});
    leg_directions.push_back(std::move(direction));
    return graph.legs.size() - 1;
}

bool TropicalCurve::has_lengths() const {
    return std::all_of(edge_lengths.begin(), edge_lengths.end(), [](const auto& l) { return l.has_value(); });
}

RationalVector TropicalCurve::lengths() const {
    RationalVector out;
    out.reserve(edge_lengths.size());
    for (std::size_t e = 0; e < edge_lengths.size(); ++e) {
        if (!edge_lengths[e])
            fail(ErrorKind::Precondition, "edge " + graph.edges[e].id + " has no length");
        out.push_back(*edge_lengths[e]);
    }
    return out;
}

IntegerVector balancing_defect(const TropicalCurve& c, std::size_t v) {
    IntegerVector s(c.ambient_dim);
    for (std::size_t e = 0; e < c.graph.edges.size(); ++e) {
        const auto& ed = c.graph.edges[e];
        if (ed.tail == ed.head) continue;
        if (ed.tail == v)
            for (int i = 0; i < c.ambient_dim; ++i) s[i] += c.edge_directions[e][i];
        if (ed.head == v)
            for (int i = 0; i < c.ambient_dim; ++i) s[i] -= c.edge_directions[e][i];
    }
    for (std::size_t l = 0; l < c.graph.legs.size(); ++l)
        if (c.graph.legs[l].vertex == v)
            for (int i = 0; i < c.ambient_dim; ++i) s[i] += c.leg_directions[l][i];
    return s;
}

ValidationReport validate(const TropicalCurve& c) {
    ValidationReport rep;
    auto err = [&](std::string s) { rep.errors.push_back(std::move(s)); };
    const auto& g = c.graph;
    const auto r = static_cast<std::size_t>(c.ambient_dim);

    if (c.ambient_dim < 1) err("ambient dimension must be positive");
    if (c.edge_directions.size() != g.edges.size() || c.edge_lengths.size() != g.edges.size())
        err("edge data does not match edge count");
    if (c.leg_directions.size() != g.legs.size()) err("leg data does not match leg count");
    if (!rep.ok()) return rep;

    if (g.vertex_count() == 0) err("curve has no vertices");
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
            if (g.vertices[i] == g.vertices[j]) err("duplicate vertex id \"" + g.vertices[i] + "\"");
    if (!g.vertices.empty() && c.base_vertex >= g.vertex_count()) err("base vertex out of range");
    if (!c.base_position.empty() && c.base_position.size() != r) err("base position has wrong dimension");

    bool shapes_ok = true;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& ed = g.edges[e];
        if (ed.tail >= g.vertex_count() || ed.head >= g.vertex_count()) {
            err("edge " + ed.id + ": endpoint out of range");
            shapes_ok = false;
            continue;
        }
        if (c.edge_directions[e].size() != r) {
            err("edge " + ed.id + ": direction has dimension " + std::to_string(c.edge_directions[e].size()));
            shapes_ok = false;
            continue;
        }
        if (is_zero(c.edge_directions[e])) err("edge " + ed.id + ": zero direction");
        if (c.edge_lengths[e] && *c.edge_lengths[e] <= 0) err("edge " + ed.id + ": non-positive length");
    }
    for (std::size_t l = 0; l < g.legs.size(); ++l) {
        const auto& lg = g.legs[l];
        if (lg.vertex >= g.vertex_count()) {
            err("leg " + lg.id + ": vertex out of range");
            shapes_ok = false;
            continue;
        }
        if (c.leg_directions[l].size() != r) {
            err("leg " + lg.id + ": direction has dimension " + std::to_string(c.leg_directions[l].size()));
            shapes_ok = false;
            continue;
        }
        if (is_zero(c.leg_directions[l])) err("leg " + lg.id + ": zero direction");
    }
    if (!shapes_ok) return rep;

    if (!c.subcurve) {
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            const auto d = balancing_defect(c, v);
            if (!is_zero(d)) {
                rep.unbalanced_vertices.push_back(v);
                err("vertex " + g.vertices[v] + ": unbalanced, outgoing sum " + to_string(d));
            }
        }
    }

    if (c.has_lengths()) {
        rep.closure_checked = true;
        for (const auto& cyc : cycle_basis(g)) {
            RationalVector disp(r);
            for (const auto& oe : cyc)
                for (std::size_t i = 0; i < r; ++i)
                    disp[i] += oe.sign * *c.edge_lengths[oe.edge] * c.edge_directions[oe.edge][i];
            if (!is_zero(disp)) {
                err("cycle through edge " + g.edges[cyc.front().edge].id + " does not close: net displacement " +
                    to_string(disp));
            }
        }
    }
    return rep;
}

std::vector<std::optional<RationalVector>> vertex_positions(const TropicalCurve& c) {
    const auto& g = c.graph;
    const auto r = static_cast<std::size_t>(c.ambient_dim);
    std::vector<std::optional<RationalVector>> pos(g.vertex_count());
    if (g.vertex_count() == 0) return pos;
    const auto len = c.lengths();

    pos[c.base_vertex] = c.base_position.empty() ? RationalVector(r) : c.base_position;
    std::deque<std::size_t> queue{c.base_vertex};
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto& ed = g.edges[e];
            int sign = 0;
            std::size_t v = 0;
            if (ed.tail == u && !pos[ed.head]) {
                sign = 1;
                v = ed.head;
            } else if (ed.head == u && !pos[ed.tail]) {
                sign = -1;
                v = ed.tail;
            } else {
                continue;
            }
            RationalVector p = *pos[u];
            for (std::size_t i = 0; i < r; ++i) p[i] += sign * len[e] * c.edge_directions[e][i];
            pos[v] = std::move(p);
            queue.push_back(v);
        }
    }
    return pos;
}

std::vector<bool> bridges(const Graph& g) {
    std::vector<bool> on_cycle(g.edges.size(), false);
    for (const auto& cyc : cycle_basis(g))
        for (const auto& oe : cyc) on_cycle[oe.edge] = true;
    std::vector<bool> out(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) out[e] = !on_cycle[e];
    return out;
}

TropicalCurve restrict_to_edges(const TropicalCurve& c, const std::vector<bool>& keep_edge) {
    const auto& g = c.graph;
    std::vector<bool> keep_vertex(g.vertex_count(), false);
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (keep_edge[e]) keep_vertex[g.edges[e].tail] = keep_vertex[g.edges[e].head] = true;

    TropicalCurve out;
    out.ambient_dim = c.ambient_dim;
    out.subcurve = true;
    out.metadata = c.metadata;
    std::vector<std::size_t> remap(g.vertex_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (keep_vertex[v]) remap[v] = out.add_vertex(g.vertices[v]);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!keep_edge[e]) continue;
        out.graph.edges.push_back({g.edges[e].id, remap[g.edges[e].tail], remap[g.edges[e].head]});
        out.edge_directions.push_back(c.edge_directions[e]);
        out.edge_lengths.push_back(c.edge_lengths[e]);
    }

    if (out.graph.vertex_count() == 0) return out;
    if (keep_vertex[c.base_vertex]) {
        out.base_vertex = remap[c.base_vertex];
        out.base_position = c.base_position;
        return out;
    }
    std::size_t first = 0;
    while (!keep_vertex[first]) ++first;
    out.base_vertex = remap[first];
    if (c.has_lengths()) {
        const auto pos = vertex_positions(c);
        if (pos[first]) out.base_position = *pos[first];
    }
    return out;
}

TropicalCurve core_neighbourhood(const TropicalCurve& c) {
    const auto br = bridges(c.graph);
    std::vector<bool> keep(br.size());
    for (std::size_t e = 0; e < br.size(); ++e) keep[e] = !br[e];
    return restrict_to_edges(c, keep);
}

DegreeProfile degree_profile(const TropicalCurve& c) {
    const auto r = static_cast<std::size_t>(c.ambient_dim);
    DegreeProfile p;
    p.counts.assign(r + 1, 0);
    for (std::size_t l = 0; l < c.leg_directions.size(); ++l) {
        const auto& w = c.leg_directions[l];
        const Integer m = gcd_of(w);
        bool standard = false;
        if (m > 0 && m.fits_slong_p()) {
            std::size_t nonzero = 0, at = 0;
            bool all_neg = true;
            for (std::size_t i = 0; i < r; ++i) {
                if (w[i] != 0) {
                    ++nonzero;
                    at = i;
                }
                if (w[i] != -m) all_neg = false;
            }
            if (nonzero == 1 && w[at] > 0) {
                p.counts[at] += m.get_si();
                standard = true;
            } else if (all_neg) {
                p.counts[r] += m.get_si();
                standard = true;
            }
        }
        if (!standard) p.nonstandard_legs.push_back(l);
    }
    if (p.nonstandard_legs.empty() &&
        std::all_of(p.counts.begin(), p.counts.end(), [&](long x) { return x == p.counts.front(); }))
        p.standard_degree = p.counts.front();
    return p;
}

bool is_trivalent(const TropicalCurve& c) {
    for (std::size_t v = 0; v < c.graph.vertex_count(); ++v)
        if (c.graph.valence(v) != 3) return false;
    return true;
}

TropicalCurve subdivide_edge(const TropicalCurve& c, std::size_t e, const Rational& t) {
    if (e >= c.graph.edges.size()) fail(ErrorKind::Precondition, "subdivide: edge out of range");
    if (t <= 0 || t >= 1) fail(ErrorKind::Precondition, "subdivide: fraction must lie in (0,1)");
    TropicalCurve out = c;
    const auto old = c.graph.edges[e];
    const auto mid = out.add_vertex(fresh_name(c.graph.vertices, old.id + ".m"));
    const auto len = c.edge_lengths[e];

    out.graph.edges[e].head = mid;
    if (len) out.edge_lengths[e] = t * *len;
    std::optional<Rational> rest;
    if (len) rest = (1 - t) * *len;
    const auto added = out.add_edge(mid, old.head, c.edge_directions[e], rest);
    out.graph.edges[added].id = fresh_name(edge_ids(out.graph), old.id + ".b");
    return out;
}

} // namespace tropsa
