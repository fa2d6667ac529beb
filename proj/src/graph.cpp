#include "tropsa/graph.hpp"

#include "tropsa/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace tropsa {

std::optional<std::size_t> Graph::find_vertex(std::string_view name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return i;
    return std::nullopt;
}

std::size_t Graph::edge_valence(std::size_t v) const {
    std::size_t n = 0;
    for (const auto& e : edges) {
        if (e.tail == v) ++n;
        if (e.head == v) ++n;
    }
    return n;
}

std::size_t Graph::valence(std::size_t v) const {
    std::size_t n = edge_valence(v);
    for (const auto& l : legs)
        if (l.vertex == v) ++n;
    return n;
}

std::size_t component_count(const Graph& g) {
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t count = g.vertex_count();
    for (const auto& e : g.edges) {
        const auto a = find(e.tail), b = find(e.head);
        if (a != b) {
            parent[a] = b;
            --count;
        }
    }
    return count;
}

std::size_t genus(const Graph& g) {
    return g.edges.size() + component_count(g) - g.vertex_count();
}

std::vector<Cycle> cycle_basis(const Graph& g, const SpanningTreeChoice& choice) {
    const std::size_t nv = g.vertex_count();
    const std::size_t ne = g.edges.size();
    if (nv == 0) return {};
    if (choice.root >= nv) fail(ErrorKind::Precondition, "spanning tree root out of range");

    std::vector<std::size_t> order = choice.edge_order;
    if (order.empty()) {
        order.resize(ne);
        std::iota(order.begin(), order.end(), 0);
    } else {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != i || sorted.size() != ne)
                fail(ErrorKind::Precondition, "edge order is not a permutation");
    }

    std::vector<std::vector<std::size_t>> adj(nv);
    for (auto e : order) {
        adj[g.edges[e].tail].push_back(e);
        if (g.edges[e].head != g.edges[e].tail) adj[g.edges[e].head].push_back(e);
    }

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(nv, none), parent_edge(nv, none), depth(nv, 0);
    std::vector<bool> seen(nv, false), tree(ne, false);

    auto bfs = [&](std::size_t root) {
        std::deque<std::size_t> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto e : adj[u]) {
                const auto v = g.edges[e].tail == u ? g.edges[e].head : g.edges[e].tail;
                if (seen[v]) continue;
                seen[v] = true;
                tree[e] = true;
                parent[v] = u;
                parent_edge[v] = e;
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            }
        }
    };
    bfs(choice.root);
    for (std::size_t v = 0; v < nv; ++v)
        if (!seen[v]) bfs(v);

    // step from x to its parent along the tree edge
    auto up = [&](std::size_t x) {
        const auto e = parent_edge[x];
        return OrientedEdge{e, g.edges[e].tail == x ? 1 : -1};
    };

    std::vector<Cycle> basis;
    for (auto e : order) {
        if (tree[e]) continue;
        Cycle c{{e, 1}};
        std::size_t a = g.edges[e].head; // walk a up to the meeting point
        std::size_t b = g.edges[e].tail; // then down to b
        Cycle down;
        while (a != b) {
            if (depth[a] >= depth[b]) {
                c.push_back(up(a));
                a = parent[a];
            } else {
                const auto s = up(b);
                down.push_back({s.edge, -s.sign});
                b = parent[b];
            }
        }
        c.insert(c.end(), down.rbegin(), down.rend());
        basis.push_back(std::move(c));
    }
    return basis;
}

std::vector<int> cycle_vector(const Cycle& c, std::size_t edge_count) {
    std::vector<int> v(edge_count, 0);
    for (const auto& oe : c) v[oe.edge] += oe.sign;
    return v;
}

} // namespace tropsa
