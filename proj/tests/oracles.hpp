#pragma once

// Brute-force reference computations. They share nothing with the library beyond the
// ColoredMultigraph accessors, and are only meant for tiny inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <vector>

#include "ryserlab/duality.hpp"
#include "ryserlab/graph.hpp"

namespace oracle {

using ryser::ColoredMultigraph;

inline std::vector<int> members(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

// Union-find component labels of color c.
inline std::vector<int> component_labels(const ColoredMultigraph& g, int c) {
    std::vector<int> p(g.n());
    std::iota(p.begin(), p.end(), 0);
    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has(u, v, c)) p[find(u)] = find(v);
    std::vector<int> lab(g.n());
    for (int v = 0; v < g.n(); ++v) lab[v] = find(v);
    return lab;
}

// Diameter of color c induced on mask (Floyd-Warshall); -1 when disconnected.
inline int induced_diameter(const ColoredMultigraph& g, std::uint64_t mask, int c) {
    auto vs = members(mask);
    const int m = int(vs.size());
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(m, std::vector<int>(m, inf));
    for (int i = 0; i < m; ++i) {
        d[i][i] = 0;
        for (int j = 0; j < m; ++j)
            if (i != j && g.has(vs[i], vs[j], c)) d[i][j] = 1;
    }
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    int best = 0;
    for (auto& row : d)
        for (int x : row) best = std::max(best, x);
    return best >= inf ? -1 : best;
}

inline int alpha(const ColoredMultigraph& g) {
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
        auto vs = members(s);
        bool ok = true;
        for (std::size_t i = 0; i < vs.size() && ok; ++i)
            for (std::size_t j = i + 1; j < vs.size() && ok; ++j) ok = !g.adjacent(vs[i], vs[j]);
        if (ok) best = std::max(best, int(vs.size()));
    }
    return best;
}

struct Piece {
    std::uint64_t mask;
    int color;
};

// Every nonempty vertex set that is connected in some allowed color, with induced diameter at
// most max_diam when max_diam >= 0.
inline std::vector<Piece> connected_pieces(const ColoredMultigraph& g, int max_diam = -1, std::uint32_t allowed = 0) {
    std::vector<Piece> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.n()); ++s)
        for (int c = 1; c <= g.r(); ++c) {
            if (allowed && !(allowed & (1u << (c - 1)))) continue;
            int d = induced_diameter(g, s, c);
            if (d < 0 || (max_diam >= 0 && d > max_diam)) continue;
            out.push_back({s, c});
            break;
        }
    return out;
}

// Minimum number of pieces covering (or partitioning) all vertices, -1 when impossible.
inline int min_cover(const ColoredMultigraph& g, bool partition, int max_diam = -1, std::uint32_t allowed = 0) {
    auto pieces = connected_pieces(g, max_diam, allowed);
    const std::uint64_t full = (std::uint64_t{1} << g.n()) - 1;
    // BFS over covered sets, layer by layer.
    std::vector<char> seen(std::size_t(full) + 1, 0);
    std::vector<std::uint64_t> layer{0};
    seen[0] = 1;
    for (int t = 0; !layer.empty(); ++t) {
        for (auto s : layer)
            if (s == full) return t;
        std::vector<std::uint64_t> next;
        for (auto s : layer)
            for (auto& p : pieces) {
                if (partition && (p.mask & s)) continue;
                auto u = s | p.mask;
                if (!seen[u]) {
                    seen[u] = 1;
                    next.push_back(u);
                }
            }
        layer.swap(next);
    }
    return -1;
}

inline int tau(const ryser::ColoredHypergraph& h) {
    for (int t = 0; t <= h.n; ++t) {
        std::vector<int> pick(h.n, 0);
        std::fill(pick.end() - t, pick.end(), 1);
        do {
            bool ok = true;
            for (auto& e : h.edges) {
                bool hit = false;
                for (int v : e.vertices) hit = hit || pick[v];
                if (!hit) {
                    ok = false;
                    break;
                }
            }
            if (ok) return t;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return -1;
}

inline int nu(const ryser::ColoredHypergraph& h) {
    const int m = int(h.edges.size());
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        std::vector<int> used(h.n, 0);
        bool ok = true;
        for (int e : members(s))
            for (int v : h.edges[e].vertices) ok = ok && !used[v]++;
        if (ok) best = std::max(best, int(members(s).size()));
    }
    return best;
}

// Words over [r] of length d, as base-r digits (letters 1..r).
inline std::vector<std::vector<int>> all_words(int r, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(d, 1);
    while (true) {
        out.push_back(w);
        int i = d - 1;
        while (i >= 0 && w[i] == r) w[i--] = 1;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

inline bool everywhere_different(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i]) return false;
    return true;
}

// Every word is everywhere different from some member.
inline bool covers(const std::vector<std::vector<int>>& set, int r, int d) {
    for (auto& w : all_words(r, d)) {
        bool ok = false;
        for (auto& s : set) ok = ok || everywhere_different(w, s);
        if (!ok) return false;
    }
    return true;
}

// Smallest covering set by exhaustive search over subsets of increasing size.
inline int z_brute(int r, int d) {
    auto words = all_words(r, d);
    const int m = int(words.size());
    for (int t = 1; t <= m; ++t) {
        std::vector<int> pick(m, 0);
        std::fill(pick.end() - t, pick.end(), 1);
        do {
            std::vector<std::vector<int>> set;
            for (int i = 0; i < m; ++i)
                if (pick[i]) set.push_back(words[i]);
            if (covers(set, r, d)) return t;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return -1;
}

}  // namespace oracle
