#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ryserlab/bits.hpp"
#include "ryserlab/duality.hpp"
#include "ryserlab/rng.hpp"

namespace ryser {

// A monochromatic (c,l)-component, represented by its edge core and the c-sets it reaches.
// Shadow bits are indexed by the colex rank of the c-set.
struct CLComponent {
    int color = 0;
    std::vector<int> core;  // edge indices into the hypergraph
    Bits shadow;

    int order() const { return shadow.count(); }
};

// Complete k-uniform hypergraph on n vertices whose edges are stored in colex order,
// so edge index == rank_subset(edge). Colors come from `colors` (one per edge).
ColoredHypergraph complete_hypergraph(int n, int k, int r, const std::vector<int>& colors);
ColoredHypergraph random_complete_coloring(int n, int k, int r, Rng& rng);
bool is_complete_colex(const ColoredHypergraph& h);

// Per color (ascending), components of the "shares >= ell vertices" relation on edges.
std::vector<CLComponent> cl_components(const ColoredHypergraph& h, int c, int ell);

// Brute-force l-walk test between two c-sets (used as an oracle).
bool ell_connected(const ColoredHypergraph& h, int color, int ell, const VertexSet& a, const VertexSet& b);

struct ClVerdict {
    bool ok = true;
    std::string message;
};

// Each piece must be a genuine monochromatic (c,l)-component of h; the shadows must cover all c-sets.
ClVerdict verify_cl_cover(const ColoredHypergraph& h, int c, int ell, const std::vector<CLComponent>& pieces);

// Kiraly's recursion on a complete k-uniform hypergraph (k >= 3); at most ceil(r/k) (1,1)-components.
std::vector<CLComponent> kiraly_cover(const ColoredHypergraph& h);

// Reduction to the floor(k/c)-uniform hypergraph on c-sets (ell <= c <= k/2).
std::vector<CLComponent> cover_product(const ColoredHypergraph& h, int c, int ell);

// Closure graph on c-sets and a maximal independent set of it (c >= ell, k/2 < c <= k-(1-1/r)ell).
// r = 2 goes through a Konig cover.
std::vector<CLComponent> cover_midrange(const ColoredHypergraph& h, int c, int ell);

// Monochromatic tight ((1,2)) component spanning all vertices of a 3-colored complete 3-graph.
// Returns nullopt when none exists (that would contradict the theorem).
std::optional<CLComponent> tight_spanning(const ColoredHypergraph& h);

enum class LowerVariant { KC, NC };

struct LowerParams {
    LowerVariant variant = LowerVariant::KC;
    int r = 2, c = 1, ell = 1, k = 3, n = 0;
};

// Example colorings certifying lower bounds; throws std::invalid_argument on precondition failure.
ColoredHypergraph hyper_lower_coloring(const LowerParams& p);
// The bound the construction is meant to certify.
int hyper_lower_bound(const LowerParams& p);

struct McCl {
    int size = 0;
    int color = 0;
    std::vector<VertexSet> shadow;
};

McCl mc_cl(const ColoredHypergraph& h, int c, int ell);

}  // namespace ryser
