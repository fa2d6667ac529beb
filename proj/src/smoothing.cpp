#include "tropsa/smoothing.hpp"

#include "tropsa/error.hpp"
#include "tropsa/linalg.hpp"

namespace tropsa {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::size_t other_end(const Edge& e, std::size_t v) { return e.tail == v ? e.head : e.tail; }

} // namespace

SegmentDecomposition smoothing(const TropicalCurve& core, const std::vector<Cycle>& basis) {
    const auto& g = core.graph;
    if (!g.legs.empty()) fail(ErrorKind::Precondition, "smoothing needs a core: curve has legs");
    const auto br = bridges(g);
    for (std::size_t e = 0; e < br.size(); ++e)
        if (br[e]) fail(ErrorKind::Precondition, "smoothing needs a core: edge " + g.edges[e].id + " is a bridge");

    std::vector<std::vector<std::size_t>> incident(g.vertex_count());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        incident[g.edges[e].tail].push_back(e);
        if (g.edges[e].head != g.edges[e].tail) incident[g.edges[e].head].push_back(e);
    }

    SegmentDecomposition out;
    out.segment_of_edge.assign(g.edges.size(), kNone);
    std::vector<bool> branch(g.vertex_count(), false);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto val = g.edge_valence(v);
        if (val < 2) fail(ErrorKind::Precondition, "smoothing: vertex " + g.vertices[v] + " has valence < 2");
        if (val != 2) {
            branch[v] = true;
            out.branch_vertices.push_back(v);
        }
    }

    // walk from v along edge e until a branch vertex (or back to stop)
    auto walk = [&](std::size_t v, std::size_t e, std::size_t stop_at) {
        Segment s;
        s.start = v;
        std::size_t cur = v;
        for (;;) {
            const auto& ed = g.edges[e];
            s.edges.push_back({e, ed.tail == cur ? 1 : -1});
            out.segment_of_edge[e] = out.segments.size();
            cur = other_end(ed, cur);
            if (branch[cur] || cur == stop_at) break;
            std::size_t next = kNone;
            for (auto f : incident[cur])
                if (out.segment_of_edge[f] == kNone) next = f;
            if (next == kNone) break;
            e = next;
        }
        s.end = cur;
        s.closed = s.start == s.end && !branch[s.start];
        return s;
    };

    for (auto v : out.branch_vertices)
        for (auto e : incident[v])
            if (out.segment_of_edge[e] == kNone) out.segments.push_back(walk(v, e, kNone));

    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (auto e : incident[v])
            if (out.segment_of_edge[e] == kNone) out.segments.push_back(walk(v, e, v));

    out.eta.assign(basis.size(), std::vector<int>(out.segments.size(), 0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<bool> seen(out.segments.size(), false);
        for (const auto& oe : basis[i]) {
            if (oe.edge >= g.edges.size()) fail(ErrorKind::Precondition, "cycle basis does not match the graph");
            const auto j = out.segment_of_edge[oe.edge];
            int orient = 0;
            for (const auto& se : out.segments[j].edges)
                if (se.edge == oe.edge) orient = se.sign;
            const int s = oe.sign * orient;
            if (seen[j] && out.eta[i][j] != s)
                fail(ErrorKind::Internal, "cycle " + std::to_string(i) + " runs both ways along a segment");
            seen[j] = true;
            out.eta[i][j] = s;
        }
        // a simple cycle covers all of any segment it enters
        for (std::size_t j = 0; j < out.segments.size(); ++j) {
            if (!seen[j]) continue;
            std::size_t hits = 0;
            for (const auto& oe : basis[i])
                if (out.segment_of_edge[oe.edge] == j) ++hits;
            if (hits != out.segments[j].edges.size())
                fail(ErrorKind::Internal, "cycle " + std::to_string(i) + " enters a segment without crossing it");
        }
    }
    return out;
}

SegmentDecomposition smoothing(const TropicalCurve& core) { return smoothing(core, cycle_basis(core.graph)); }

TropicalCurve subcurve(const TropicalCurve& core, const SegmentDecomposition& segs,
                       const std::vector<std::size_t>& segment_ids) {
    std::vector<bool> keep(core.graph.edges.size(), false);
    for (auto j : segment_ids) {
        if (j >= segs.segments.size()) fail(ErrorKind::Precondition, "segment id out of range");
        for (const auto& oe : segs.segments[j].edges) keep[oe.edge] = true;
    }
    return restrict_to_edges(core, keep);
}

TropicalCurve subcurve(const TropicalCurve& curve, const std::vector<std::size_t>& segment_ids) {
    const auto core = core_neighbourhood(curve);
    return subcurve(core, smoothing(core), segment_ids);
}

std::vector<IntegerVector> segment_span(const TropicalCurve& core, const Segment& s) {
    std::vector<IntegerVector> dirs;
    for (const auto& oe : s.edges) dirs.push_back(core.edge_directions[oe.edge]);
    return linalg::row_space_basis(dirs, static_cast<std::size_t>(core.ambient_dim));
}

} // namespace tropsa
