#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ryserlab/graph.hpp"

namespace ryser {

using IntPartition = std::vector<int>;  // weakly decreasing

// All partitions of n, largest first: (n), (n-1,1), ..., (1,...,1).
std::vector<IntPartition> integer_partitions(int n);

// Multiset of p partitions of n, stored largest first.
struct SignatureSet {
    int n = 0;
    int p = 0;
    std::vector<IntPartition> sigs;

    void canonicalize();
    std::string str() const;  // "(6),(4,2),(4,2),(4,2)"

    bool operator==(const SignatureSet& o) const { return n == o.n && p == o.p && sigs == o.sigs; }
    bool operator<(const SignatureSet& o) const;
};

// Accepts the str() form; throws std::invalid_argument otherwise.
SignatureSet parse_signature(std::string_view text);

// Component sizes of each color in S on the subgraph induced by X.
SignatureSet signature_of(const ColoredMultigraph& g, const VertexSet& X, const std::vector<int>& S);

std::vector<SignatureSet> enumerate_signatures(int n, int p);

// Edge-count necessary condition: the colored cliques must be able to cover all pairs.
bool passes_edge_count(const SignatureSet& sig);

// A closed p-colored K_n whose [p]-signature is sig (edges may carry several colors), or none.
std::optional<ColoredMultigraph> is_valid(const SignatureSet& sig);

enum class Lemma { R5, R6, R6II };

// R5 and R6 read only the signature. R6II needs a realization on vertices 0..5 and asks for
// a subset W (3 to 5 vertices) whose induced signature meets one of its conditions.
bool lemma_filter(const SignatureSet& sig, Lemma which, const ColoredMultigraph* realization = nullptr);

struct SignatureCensus {
    int candidates = 0;
    std::vector<SignatureSet> valid;
    std::vector<SignatureSet> residual;
    long long realizations = 0;
};

// Enumerates every realization (tuples of set partitions covering all pairs, up to color order)
// and applies the lemma filters that belong to (n,p). R6II eliminates a signature only when
// every one of its realizations admits a qualifying W.
SignatureCensus signature_census(int n, int p);

std::vector<SignatureSet> residual_cases(int n, int p);

}  // namespace ryser
