#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ryserlab/exact.hpp"
#include "ryserlab/graph.hpp"

namespace ryser {

using Word = std::vector<int>;  // letters 1..r

struct WordSet {
    int r = 0;
    int d = 0;
    std::vector<Word> words;

    // Throws std::invalid_argument on bad letters, wrong length or duplicates.
    void validate() const;
};

std::string format_word(const Word& w);  // "(1,2,1)"

struct GoodPartitionResult {
    Status status = Status::Inconclusive;  // Optimal: found, Infeasible: none exists
    std::vector<VertexSet> parts;          // parts[i] is Y_{i+1}, may be empty
    long long nodes = 0;
};

// Searches the r^|Y| assignments of Y to colors for one where every z in Z has a
// color-i edge into Y_i for some i.
GoodPartitionResult good_partition(const ColoredMultigraph& g, const VertexSet& Y, const VertexSet& Z, int r,
                                   const SolveBudget& budget = {});

// Some word of W_{r,d} that no member of w is everywhere different from, or none.
std::optional<Word> covers_all_witness(const WordSet& w);
bool covers_all(const WordSet& w);

// Total domination of the d-fold direct power of K_r, built as an explicit graph.
bool gamma_t_check(int r, int d, const WordSet& w);

struct ZBound {
    int value = 0;
    std::string source;
};

struct ZResult {
    Status status = Status::Inconclusive;  // Optimal when lower == upper
    int lower = 0;
    int upper = 0;
    std::vector<ZBound> lower_sources;
    WordSet witness;                       // a covering set of size upper
    long long nodes = 0;
};

// Largest m with g^d(m) = 0 for g(m) = m - ceil(m/r), plus one. Any m words leave a word
// agreeing with each of them somewhere when the greedy column argument retires them all.
int column_greedy_bound(int r, int d);

ZResult z_exact(int r, int d, const SolveBudget& budget = {});

struct BadBipartite {
    ColoredMultigraph g;
    VertexSet Y, Z;
    std::vector<VertexSet> blocks;  // blocks[b]: z vertices whose edge to y_j has color bit j of b, plus 1
};

// Colors 1,2 on K_{|Y|,|Z|} with Z split round robin over the 2^|Y| binary strings.
BadBipartite bad_bipartite_coloring(int ySize, int zSize);

struct BadMulti {
    ColoredMultigraph g;
    std::vector<VertexSet> parts;  // last part is the large one
    int tp_lower = 0;              // floor(|V_k| / 2^{n - |V_k|})
};

// Complete k-partite graph: k-1 small parts holding ySize vertices in total, and a part of
// (t+1) 2^ySize vertices colored against them as in bad_bipartite_coloring. Other edges get color 1.
BadMulti badmulti_graph(int k, int t, int ySize = -1);

}  // namespace ryser
