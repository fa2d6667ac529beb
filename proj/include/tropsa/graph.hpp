#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropsa {

struct Edge {
    std::string id;
    std::size_t tail = 0;
    std::size_t head = 0;
};

struct Leg {
    std::string id;
    std::size_t vertex = 0;
};

// Finite multigraph with legs. Loops and parallel edges are allowed.
struct Graph {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Leg> legs;

    std::size_t vertex_count() const { return vertices.size(); }
    std::optional<std::size_t> find_vertex(std::string_view name) const;

    // Edge ends (a loop counts twice) plus legs.
    std::size_t valence(std::size_t v) const;
    // Edge ends only.
    std::size_t edge_valence(std::size_t v) const;
};

std::size_t component_count(const Graph& g);

// First Betti number |E| - |V| + #components.
std::size_t genus(const Graph& g);

// Edge traversed along (+1) or against (-1) its orientation.
struct OrientedEdge {
    std::size_t edge = 0;
    int sign = 1;

    bool operator==(const OrientedEdge&) const = default;
};

// A closed walk, listed in traversal order.
using Cycle = std::vector<OrientedEdge>;

// Which spanning forest to build. The default is BFS from vertex 0 with
// edges tried in input order; every later component starts at its lowest
// unvisited vertex.
struct SpanningTreeChoice {
    std::size_t root = 0;
    std::vector<std::size_t> edge_order; // empty means input order
};

// Fundamental cycles of the spanning forest, one per non-tree edge in the
// order the edges are tried. Each cycle starts with its non-tree edge
// traversed forwards and returns through the tree.
std::vector<Cycle> cycle_basis(const Graph& g, const SpanningTreeChoice& choice = {});

// Signed edge incidence of a cycle, indexed by edge.
std::vector<int> cycle_vector(const Cycle& c, std::size_t edge_count);

} // namespace tropsa
