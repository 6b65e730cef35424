#pragma once

#include <vector>

#include "ryserlab/duality.hpp"
#include "ryserlab/graph.hpp"
#include "ryserlab/rng.hpp"

namespace ryser {

// Random instances for property tests and benchmarks. Every edge gets one uniform color in [r].

ColoredMultigraph random_complete(int n, int r, Rng& rng);

struct Multipartite {
    ColoredMultigraph g;
    std::vector<VertexSet> parts;  // consecutive vertex ranges
};

Multipartite random_multipartite(const std::vector<int>& sizes, int r, Rng& rng);

// Complement of a random bipartite graph (edge probability p) on a random split, so alpha <= 2;
// resampled until alpha is exactly 2. n >= 2.
ColoredMultigraph random_alpha2(int n, int r, double p, Rng& rng);

// Complement of a perfect matching on n (even) vertices.
ColoredMultigraph matching_complement(int n, int r, Rng& rng);

// r-partite hypergraph with `parts` classes of the given size and m random edges meeting
// each class at most once (edges of size 1..r, duplicates dropped).
ColoredHypergraph random_partite_hypergraph(int part_size, int r, int m, Rng& rng);

}  // namespace ryser
