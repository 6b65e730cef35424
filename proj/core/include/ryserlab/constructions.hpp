#pragma once

#include <vector>

#include "ryserlab/duality.hpp"
#include "ryserlab/graph.hpp"

namespace ryser {

// Returns true and fills p, e when q = p^e for a prime p.
bool is_prime_power(int q, int* p = nullptr, int* e = nullptr);

// GF(q) with elements 0..q-1 read as base-p coefficient vectors; multiplication is modulo
// the lexicographically first irreducible monic polynomial of degree e.
class GaloisField {
public:
    explicit GaloisField(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;  // a != 0
    const std::vector<int>& modulus() const { return modulus_; }  // low degree first, monic

private:
    int q_, p_, e_;
    std::vector<int> add_, mul_, neg_, inv_;
    std::vector<int> modulus_;
};

enum class PlaneKind { Projective, Truncated, Affine };

struct IncidenceDesign {
    int points = 0;
    std::vector<VertexSet> lines;
    int order = 0;
    PlaneKind kind = PlaneKind::Projective;
};

// Points and lines of PG(2,q) as 1- and 2-dimensional subspaces, first nonzero coordinate 1.
// Truncation removes the last point and its lines; the affine plane removes the first line.
IncidenceDesign galois_plane(int q, PlaneKind kind);

// Throws std::logic_error when the design breaks the invariants of its kind.
void check_design(const IncidenceDesign& d);

// Lines as hyperedges. Truncated planes get the q+1 classes cut out by the removed point,
// affine planes get none.
ColoredHypergraph design_hypergraph(const IncidenceDesign& d);

// Parallel classes of an affine plane, each a list of line indices.
std::vector<std::vector<int>> parallel_classes(const IncidenceDesign& affine);

// alpha disjoint copies of AG(2, r-1) with pair colors given by parallel class.
ColoredMultigraph affine_tc_coloring(int r, int alpha);

// Blocks V_X for the (floor(r/2)+1)-subsets X of [r], listed in colex order; pair colors min(X and Y).
struct HalfRExample {
    ColoredMultigraph g;
    std::vector<std::vector<int>> block_sets;  // X, 1-based colors
    std::vector<VertexSet> blocks;
};
HalfRExample half_r_example(int r, int block_size);

struct MultipartiteExample {
    ColoredMultigraph g;
    std::vector<VertexSet> parts;
};

// k parts; part 0 holds x_1..x_r whose edges all have color i; every other edge color 1.
// Parts have max(part_size, 1) vertices, part 0 at least r.
MultipartiteExample multipartite_star_example(int k, int r, int part_size = 2);

// k >= 3 parts of order 2 with three colors, alpha = 2 and tc_3 = 3.
MultipartiteExample multipartite_alpha2_example(int k);

}  // namespace ryser
