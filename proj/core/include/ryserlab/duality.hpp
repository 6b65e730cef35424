#pragma once

#include <string>
#include <vector>

#include "ryserlab/graph.hpp"

namespace ryser {

struct HyperEdge {
    int color = 0;  // 0 when uncolored
    VertexSet vertices;

    bool operator==(const HyperEdge& o) const { return color == o.color && vertices == o.vertices; }
};

// Hypergraph on vertices 0..n-1. k = 0 means non-uniform, r = 0 means uncolored.
// part_of[v] is the class index (0-based) of v when classes are declared, else empty.
struct ColoredHypergraph {
    int n = 0;
    int k = 0;
    int r = 0;
    std::vector<int> part_of;
    int num_parts = 0;
    std::vector<HyperEdge> edges;

    bool has_parts() const { return !part_of.empty(); }
    void set_parts(const std::vector<VertexSet>& classes);
    std::vector<VertexSet> parts() const;

    void add_edge(VertexSet vs, int color = 0);
    // Throws std::invalid_argument on the first broken invariant.
    void validate() const;

    bool operator==(const ColoredHypergraph& o) const {
        return n == o.n && k == o.k && r == o.r && part_of == o.part_of && num_parts == o.num_parts &&
               edges == o.edges;
    }
};

struct DualHypergraph {
    ColoredHypergraph h;
    // h-vertex index -> (color, vertex set of the monochromatic component)
    std::vector<std::pair<int, VertexSet>> components;
    // graph vertex -> index of the hyperedge holding its component family (-1 for isolated vertices)
    std::vector<int> edge_of_vertex;
};

// Vertices: nontrivial monochromatic components, color-major then by smallest vertex.
// Edges: maximal families of components through a common graph vertex.
DualHypergraph graph_to_hypergraph(const ColoredMultigraph& g);

// One graph vertex per hyperedge; color i joins e,f when they share a vertex of class i.
ColoredMultigraph hypergraph_to_graph(const ColoredHypergraph& h);

struct DualityReport {
    bool ok = true;
    int nu = 0, alpha = 0, tau = 0, tc = 0;
    std::string message;
};

DualityReport check_duality(const ColoredHypergraph& h, const ColoredMultigraph& g);

// Minimum set of components of colors a and b (trivial ones included) covering V(g).
// Each vertex is an edge between its color-a and color-b component in a bipartite graph;
// a maximum matching and its Konig vertex cover give the answer.
std::vector<CoverCertificate::Piece> konig_cover(const ColoredMultigraph& g, int a, int b);

}  // namespace ryser
