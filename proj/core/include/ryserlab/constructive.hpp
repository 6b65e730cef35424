#pragma once

#include <array>
#include <string>
#include <vector>

#include "ryserlab/graph.hpp"

namespace ryser {

// Covers built by following the case analysis of the diameter and Tuza-type arguments.
// Every function verifies its own certificate and throws std::logic_error when that fails
// (a bug witness); precondition violations throw std::invalid_argument. The optional route
// receives the name of the branch that produced the cover.
//
// Edges carrying several colors are first reduced to their lowest color (lowest color among
// the allowed ones). Pieces of the reduced coloring are pieces of the original one.

enum class BipartiteTag { P1, P2, P3 };
const char* to_string(BipartiteTag t);

struct BipartiteClass {
    BipartiteTag tag = BipartiteTag::P3;
    std::array<int, 2> colors{1, 2};  // "color 1" and "color 2" of the lemma

    // P1: special[i] sends only colors[i]; they sit on the side opposite the double covered one.
    int double_side = -1;  // 0: X is double covered, 1: Y is
    std::array<int, 2> special{-1, -1};

    // P2: [X1,Y1] and [X2,Y2] in colors[0], [X1,Y2] and [X2,Y1] in colors[1].
    VertexSet x1, x2, y1, y2;

    // P3: this color class is connected on X and Y together (and has diameter at most 6).
    int color = 0;
};

struct BipartiteOutcome {
    BipartiteClass cls;
    CoverCertificate cert;  // at most 2 trees of diameter at most 4
};

// g must be the complete bipartite graph with sides X and Y, edges colored within {c1, c2}.
// Precedence P1 > P2 > P3.
BipartiteOutcome classify_bipartite2(const ColoredMultigraph& g, const VertexSet& X, const VertexSet& Y,
                                     int c1 = 1, int c2 = 2);

// Re-checks the invariants of a class on [X,Y]; empty string when they hold.
std::string check_bipartite_class(const ColoredMultigraph& g, const VertexSet& X, const VertexSet& Y,
                                  const BipartiteClass& cls);

// r = 2: one piece, tree diameter <= 4 and induced diameter <= 3.
// r = 3: at most 2 trees of diameter <= 4.  r = 4: at most 3 pieces of diameter <= 6.
CoverCertificate cover_complete(const ColoredMultigraph& g, int r, std::string* route = nullptr);

// Complete bipartite with sides X, Y and colors in [3]: at most 4 pieces of diameter <= 6.
CoverCertificate cover_bipartite3(const ColoredMultigraph& g, const VertexSet& X, const VertexSet& Y,
                                  std::string* route = nullptr);

// alpha(g) = 2, colors in [2]: at most 2 pieces of diameter <= 6.
CoverCertificate cover_alpha2(const ColoredMultigraph& g, std::string* route = nullptr);

// Complete multipartite with the given parts. r = 2: at most 2 components; r = 3 needs
// exactly 3 parts and gives at most 3 components.
CoverCertificate cover_multipartite(const ColoredMultigraph& g, const std::vector<VertexSet>& parts, int r,
                                    std::string* route = nullptr);

// Complete g with colors in [r], r in {3,4,5}, S = {a, b}. At most r-1 whole components, all
// colored inside S or all inside [r] minus S.
CoverCertificate restricted_cover(const ColoredMultigraph& g, int r, std::array<int, 2> S, std::string* route = nullptr);

enum class ThreeColorTag { TypeI, TypeII, TypeIII };
const char* to_string(ThreeColorTag t);

struct ThreeColorClass {
    ThreeColorTag tag = ThreeColorTag::TypeI;
    int blue = 0, red = 0, green = 0;  // the roles the colors play
    VertexSet spanning;                // TypeI: a spanning component of color blue
    VertexSet W, X, Y, Z;
};

// g complete with colors in [3].
ThreeColorClass classify3(const ColoredMultigraph& g);

std::string check_three_color_class(const ColoredMultigraph& g, const ThreeColorClass& cls);

}  // namespace ryser
