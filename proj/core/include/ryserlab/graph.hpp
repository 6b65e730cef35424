#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace ryser {

using VertexSet = std::vector<int>;  // always sorted ascending
using ColorMask = std::uint32_t;     // bit (c-1) set <=> color c present

constexpr int kInf = std::numeric_limits<int>::max();
constexpr int kMaxColors = 32;

inline ColorMask color_bit(int c) { return ColorMask{1} << (c - 1); }

// Edge-colored multigraph on vertices 0..n-1 with colors 1..r.
// Each unordered pair carries a (possibly empty) set of colors; an empty set means no edge.
class ColoredMultigraph {
public:
    ColoredMultigraph() = default;
    ColoredMultigraph(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }

    // Adds color c to the pair {u,v}. Throws on loops or out-of-range input.
    void add_edge(int u, int v, int c);
    void add_colors(int u, int v, ColorMask m);
    void set_colors(int u, int v, ColorMask m);

    ColorMask colors(int u, int v) const { return mask_[std::size_t(u) * n_ + v]; }
    bool has(int u, int v, int c) const { return (colors(u, v) & color_bit(c)) != 0; }
    bool adjacent(int u, int v) const { return colors(u, v) != 0; }

    // (u, v, mask) with u < v, lexicographic.
    std::vector<std::pair<std::pair<int, int>, ColorMask>> edges() const;
    std::size_t edge_count() const;
    std::vector<int> neighbors(int v, int c) const;

    bool operator==(const ColoredMultigraph& o) const {
        return n_ == o.n_ && r_ == o.r_ && mask_ == o.mask_;
    }

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    int r_ = 0;
    std::vector<ColorMask> mask_;
};

struct ComponentSet {
    int color = 0;
    std::vector<VertexSet> parts;  // ordered by smallest vertex
};

ComponentSet components(const ColoredMultigraph& g, int c);

// Component of color c containing v.
VertexSet component_of(const ColoredMultigraph& g, int c, int v);

ColoredMultigraph closure(const ColoredMultigraph& g);
bool is_closed(const ColoredMultigraph& g);

// Diameter of the color-c subgraph induced on vs; kInf when disconnected.
int diameter(const ColoredMultigraph& g, const VertexSet& vs, int c);

// BFS distances inside the color-c subgraph induced on vs (indexed by position in vs).
std::vector<int> induced_distances(const ColoredMultigraph& g, const VertexSet& vs, int c, int source_pos);

struct AlphaResult {
    int size = 0;
    VertexSet witness;
};

// Exact maximum independent set of the underlying simple graph.
AlphaResult alpha(const ColoredMultigraph& g);
// Same on the subgraph induced by a vertex subset (witness in original labels).
AlphaResult alpha(const ColoredMultigraph& g, const VertexSet& within);

using TreeEdges = std::vector<std::pair<int, int>>;

struct SpanningTree {
    TreeEdges edges;
    int diameter = kInf;
};

// Spanning tree of the color-c subgraph induced on vs with minimum possible diameter
// among BFS trees rooted at a vertex or at an edge. kInf diameter when disconnected.
SpanningTree min_diameter_tree(const ColoredMultigraph& g, const VertexSet& vs, int c);

int tree_diameter(int n, const TreeEdges& edges);

struct CoverCertificate {
    enum class Mode { Cover, Partition };
    struct Piece {
        int color = 0;
        VertexSet vertices;
        TreeEdges tree;  // optional; when present the diameter bound applies to the tree
    };

    Mode mode = Mode::Cover;
    std::vector<Piece> pieces;
    int max_size = -1;          // -1: unbounded
    int max_diam = -1;          // -1: unbounded
    ColorMask allowed = 0;      // 0: all colors

    std::size_t size() const { return pieces.size(); }
    ColorMask used_colors() const;
};

struct VerifyReport {
    bool ok = true;
    std::string message;
    int piece = -1;
    int vertex = -1;

    explicit operator bool() const { return ok; }
};

VerifyReport verify(const ColoredMultigraph& g, const CoverCertificate& cert);

VertexSet all_vertices(int n);
std::string to_string(const VertexSet& vs);

}  // namespace ryser
