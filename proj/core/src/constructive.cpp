#include "ryserlab/constructive.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

#include "ryserlab/bits.hpp"
#include "ryserlab/duality.hpp"
#include "ryserlab/exact.hpp"

namespace ryser {

const char* to_string(BipartiteTag t) {
    switch (t) {
    case BipartiteTag::P1: return "P1";
    case BipartiteTag::P2: return "P2";
    case BipartiteTag::P3: return "P3";
    }
    return "?";
}

const char* to_string(ThreeColorTag t) {
    switch (t) {
    case ThreeColorTag::TypeI: return "TypeI";
    case ThreeColorTag::TypeII: return "TypeII";
    case ThreeColorTag::TypeIII: return "TypeIII";
    }
    return "?";
}

namespace {

using Piece = CoverCertificate::Piece;

VertexSet unite(std::initializer_list<VertexSet> sets) {
    VertexSet out;
    for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet meet(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool in(const VertexSet& a, int v) { return std::binary_search(a.begin(), a.end(), v); }
bool subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }
VertexSet one(int v) { return {v}; }

[[noreturn]] void bug(const std::string& what) { throw std::logic_error("constructive: " + what); }

ColorMask low_mask(int r) { return r >= 32 ? ~ColorMask{0} : (ColorMask{1} << r) - 1; }

// Keeps only the lowest allowed color on every edge.
ColoredMultigraph reduce(const ColoredMultigraph& g, ColorMask keep) {
    ColoredMultigraph s(g.n(), g.r());
    for (const auto& [e, m] : g.edges()) {
        ColorMask k = m & keep;
        if (k) s.set_colors(e.first, e.second, k & (~k + 1));
    }
    return s;
}

int col(const ColoredMultigraph& s, int u, int v) {
    ColorMask m = s.colors(u, v);
    return m ? std::countr_zero(m) + 1 : 0;
}

// Members of `from` joined in color c to some member of `to`.
VertexSet sends(const ColoredMultigraph& s, const VertexSet& from, const VertexSet& to, int c) {
    VertexSet out;
    for (int v : from)
        for (int u : to)
            if (u != v && s.has(v, u, c)) {
                out.push_back(v);
                break;
            }
    return out;
}

std::optional<Piece> make_piece(const ColoredMultigraph& s, int c, const VertexSet& vs, int bound,
                                bool need_tree = false) {
    if (vs.empty()) return std::nullopt;
    Piece p;
    p.color = c;
    p.vertices = vs;
    if (vs.size() == 1) return p;
    auto t = min_diameter_tree(s, vs, c);
    if (t.diameter == kInf) return std::nullopt;
    if (bound < 0 || t.diameter <= bound) {
        p.tree = std::move(t.edges);
        return p;
    }
    if (need_tree) return std::nullopt;
    if (diameter(s, vs, c) <= bound) return p;
    return std::nullopt;
}

Piece need(std::optional<Piece> p, const std::string& what) {
    if (!p) bug("named piece is not a subgraph of the promised diameter: " + what);
    return std::move(*p);
}

Piece component_piece(const ColoredMultigraph& s, int c, int v) {
    Piece p;
    p.color = c;
    p.vertices = component_of(s, c, v);
    return p;
}

CoverCertificate finish(const ColoredMultigraph& g, std::vector<Piece> pieces, int max_size, int max_diam,
                        ColorMask allowed, const std::string& route, std::string* out) {
    CoverCertificate cert;
    for (auto& p : pieces) {
        bool dup = false;
        for (const auto& q : cert.pieces)
            if (q.color == p.color && q.vertices == p.vertices) dup = true;
        if (!dup) cert.pieces.push_back(std::move(p));
    }
    cert.max_size = max_size;
    cert.max_diam = max_diam;
    cert.allowed = allowed;
    auto rep = verify(g, cert);
    if (!rep) bug(route + ": " + rep.message);
    if (out) *out = route;
    return cert;
}

// Candidate pieces with a minimum-size selection over a target vertex set.
struct Pool {
    std::vector<Piece> pieces;

    void add(std::optional<Piece> p) {
        if (!p) return;
        for (const auto& q : pieces)
            if (q.color == p->color && q.vertices == p->vertices) return;
        pieces.push_back(std::move(*p));
    }
    void add_all(const std::vector<Piece>& ps) {
        for (const auto& p : ps) add(p);
    }

    std::optional<std::vector<Piece>> select(int n, const VertexSet& target, int k) const {
        if (target.empty()) return std::vector<Piece>{};
        std::vector<int> idx(n, -1);
        for (int i = 0; i < int(target.size()); ++i) idx[target[i]] = i;
        std::vector<Bits> sets;
        for (const auto& p : pieces) {
            Bits b(int(target.size()));
            for (int v : p.vertices)
                if (idx[v] >= 0) b.set(idx[v]);
            sets.push_back(std::move(b));
        }
        SolveBudget budget;
        budget.max_nodes = 5'000'000;
        auto res = solve_set_cover(int(target.size()), sets, budget);
        if (res.size < 0 || res.size > k) return std::nullopt;
        std::vector<Piece> out;
        for (int i : res.chosen) out.push_back(pieces[i]);
        return out;
    }
};

// Components of the color-c subgraph induced on region.
std::vector<VertexSet> region_components(const ColoredMultigraph& s, int c, const VertexSet& region) {
    std::vector<VertexSet> out;
    std::vector<char> seen(s.n(), 0);
    for (int v : region) {
        if (seen[v]) continue;
        VertexSet comp{v};
        seen[v] = 1;
        for (std::size_t h = 0; h < comp.size(); ++h)
            for (int u : region)
                if (!seen[u] && s.has(comp[h], u, c)) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// Adds the bounded-diameter components of every color in `colors` on every union of atoms.
void add_region_pieces(Pool& pool, const ColoredMultigraph& s, const std::vector<int>& colors,
                       const std::vector<VertexSet>& atoms, int bound) {
    const int a = int(atoms.size());
    for (int mask = 1; mask < (1 << a); ++mask) {
        VertexSet region;
        for (int i = 0; i < a; ++i)
            if (mask >> i & 1) region = unite({region, atoms[i]});
        if (region.empty()) continue;
        for (int c : colors)
            for (const auto& comp : region_components(s, c, region)) pool.add(make_piece(s, c, comp, bound));
    }
}

void check_colors(const ColoredMultigraph& g, ColorMask allowed, const char* op) {
    for (const auto& [e, m] : g.edges())
        if (m & ~allowed)
            throw std::invalid_argument(std::string(op) + ": edge " + std::to_string(e.first) + "-" +
                                        std::to_string(e.second) + " uses a color outside the allowed range");
}

void check_complete(const ColoredMultigraph& g, const char* op) {
    if (g.n() == 0) throw std::invalid_argument(std::string(op) + ": empty graph");
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v))
                throw std::invalid_argument(std::string(op) + ": g is not complete (missing " + std::to_string(u) +
                                            "-" + std::to_string(v) + ")");
}

// Parts must partition V(g) and g must be the complete multipartite graph on them.
void check_multipartite(const ColoredMultigraph& g, const std::vector<VertexSet>& parts, const char* op) {
    std::vector<int> part(g.n(), -1);
    for (int i = 0; i < int(parts.size()); ++i) {
        if (parts[i].empty()) throw std::invalid_argument(std::string(op) + ": empty part");
        for (int v : parts[i]) {
            if (v < 0 || v >= g.n() || part[v] >= 0)
                throw std::invalid_argument(std::string(op) + ": parts do not partition the vertex set");
            part[v] = i;
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (part[v] < 0) throw std::invalid_argument(std::string(op) + ": vertex " + std::to_string(v) + " has no part");
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v) != (part[u] != part[v]))
                throw std::invalid_argument(std::string(op) + ": not complete multipartite at " + std::to_string(u) +
                                            "-" + std::to_string(v));
}

VertexSet sorted(VertexSet v) {
    std::sort(v.begin(), v.end());
    return v;
}

// ---------------------------------------------------------------------------------------------
// Two-colored complete bipartite blocks

// Copy of s keeping only the edges between X and Y.
ColoredMultigraph cross_only(const ColoredMultigraph& s, const VertexSet& X, const VertexSet& Y) {
    ColoredMultigraph b(s.n(), s.r());
    for (int x : X)
        for (int y : Y)
            if (s.colors(x, y)) b.set_colors(x, y, s.colors(x, y));
    return b;
}

struct BlockView {
    const ColoredMultigraph& b;  // cross edges only, one color each
    const VertexSet& X;
    const VertexSet& Y;
    int c1, c2;

    const VertexSet& other(int v) const { return in(X, v) ? Y : X; }
    bool only(int v, int c) const {
        for (int u : other(v))
            if (col(b, v, u) != c) return false;
        return true;
    }
    bool sees(int v, int c) const {
        for (int u : other(v))
            if (col(b, v, u) == c) return true;
        return false;
    }
};

bool detect_p1(const BlockView& w, BipartiteClass& cls) {
    const VertexSet* side[2] = {&w.X, &w.Y};
    for (int sd = 0; sd < 2; ++sd) {
        int a = -1, c = -1;
        for (int v : *side[sd]) {
            if (a < 0 && w.only(v, w.c1)) a = v;
            if (c < 0 && w.only(v, w.c2)) c = v;
        }
        if (a >= 0 && c >= 0) {
            cls.tag = BipartiteTag::P1;
            cls.double_side = 1 - sd;
            cls.special = {a, c};
            return true;
        }
    }
    return false;
}

bool detect_p2(const BlockView& w, BipartiteClass& cls) {
    const int x0 = w.X[0];
    VertexSet y1, y2;
    for (int y : w.Y) (col(w.b, x0, y) == w.c1 ? y1 : y2).push_back(y);
    if (y1.empty() || y2.empty()) return false;
    VertexSet x1, x2;
    for (int x : w.X) {
        bool same = true, flip = true;
        for (int y : w.Y) {
            const bool first = in(y1, y);
            const int c = col(w.b, x, y);
            if (c != (first ? w.c1 : w.c2)) same = false;
            if (c != (first ? w.c2 : w.c1)) flip = false;
        }
        if (same)
            x1.push_back(x);
        else if (flip)
            x2.push_back(x);
        else
            return false;
    }
    if (x2.empty()) return false;
    cls.tag = BipartiteTag::P2;
    cls.x1 = x1, cls.x2 = x2, cls.y1 = y1, cls.y2 = y2;
    return true;
}

bool block_connected(const ColoredMultigraph& b, const VertexSet& all, int c) {
    return region_components(b, c, all).size() == 1;
}

// The lemma's cover of the block, pieces built on the cross edges only.
BipartiteOutcome classify_block(const ColoredMultigraph& s, const VertexSet& X, const VertexSet& Y, int c1,
                                int c2) {
    if (X.empty() || Y.empty()) bug("bipartite block with an empty side");
    const ColoredMultigraph b = cross_only(s, X, Y);
    const BlockView w{b, X, Y, c1, c2};
    for (int x : X)
        for (int y : Y)
            if (col(b, x, y) != c1 && col(b, x, y) != c2) bug("bipartite block edge outside its two colors");

    BipartiteOutcome out;
    auto& cls = out.cls;
    cls.colors = {c1, c2};
    const VertexSet all = unite({X, Y});
    auto& pieces = out.cert.pieces;
    out.cert.max_size = 2;
    out.cert.max_diam = 4;

    if (detect_p1(w, cls)) {
        const VertexSet& S = cls.double_side == 1 ? X : Y;
        const VertexSet& T = cls.double_side == 1 ? Y : X;
        const int y = T[0];
        pieces.push_back(need(make_piece(b, c1, unite({one(cls.special[0]), T, sends(b, S, one(y), c1)}), 3, true),
                              "P1 double star"));
        auto star = make_piece(b, c2, unite({one(y), sends(b, S, one(y), c2)}), 2, true);
        pieces.push_back(need(star, "P1 star"));
        return out;
    }
    if (detect_p2(w, cls)) {
        pieces.push_back(need(make_piece(b, c1, unite({cls.x1, cls.y1}), 3, true), "P2 first block"));
        pieces.push_back(need(make_piece(b, c1, unite({cls.x2, cls.y2}), 3, true), "P2 second block"));
        return out;
    }

    cls.tag = BipartiteTag::P3;
    for (int c : {c1, c2})
        if (diameter(b, all, c) <= 6) {
            cls.color = c;
            break;
        }
    if (!cls.color) bug("P3 without a color class of diameter at most 6");

    // Without P1 every vertex sees one common color; a vertex seeing only that color spans.
    bool all1 = true, all2 = true;
    for (int v : all) all1 = all1 && w.sees(v, c1), all2 = all2 && w.sees(v, c2);
    const int common = all1 ? c1 : c2;
    if (!all1 && !all2) bug("P3 with a vertex missing both colors");
    for (int v : all)
        if (w.only(v, common)) {
            pieces.push_back(need(make_piece(b, common, all, 4, true), "P3 spanning tree"));
            return out;
        }

    for (int c : {c1, c2})
        if (diameter(b, all, c) <= 2) {
            pieces.push_back(need(make_piece(b, c, all, 4, true), "P3 diameter two"));
            return out;
        }

    int c = 0;
    if (block_connected(b, all, c1))
        c = c1;
    else if (block_connected(b, all, c2))
        c = c2;
    else
        bug("P3 with both color classes disconnected");
    const int cp = c == c1 ? c2 : c1;

    // eccentricity witness of the connected class, then distance layers
    int x = -1, d = -1;
    std::vector<int> dist;
    for (int i = 0; i < int(all.size()); ++i) {
        auto di = induced_distances(b, all, c, i);
        int e = *std::max_element(di.begin(), di.end());
        if (e > d) d = e, x = all[i], dist = std::move(di);
    }
    std::vector<VertexSet> D(d + 1);
    for (int i = 0; i < int(all.size()); ++i) D[dist[i]].push_back(all[i]);
    const VertexSet& xs = in(X, x) ? X : Y;  // the side holding the even layers
    const VertexSet& ys = in(X, x) ? Y : X;

    if (d == 3) {
        pieces.push_back(need(make_piece(b, c, unite({D[0], D[1], D[2]}), 4, true), "P3 d=3 tree"));
        pieces.push_back(need(make_piece(b, cp, unite({D[0], D[3]}), 4, true), "P3 d=3 star"));
    } else if (d == 4) {
        pieces.push_back(need(make_piece(b, cp, unite({D[0], D[3], sends(b, xs, D[3], cp)}), 4, true), "P3 d=4 first"));
        pieces.push_back(
            need(make_piece(b, cp, unite({one(D[4][0]), D[1], sends(b, xs, D[1], cp)}), 4, true), "P3 d=4 second"));
    } else if (d >= 5) {
        const int w5 = D[5][0], u1 = D[1][0], u4 = D[4][0];
        pieces.push_back(need(make_piece(b, cp,
                                         unite({one(x), one(w5), sends(b, ys, one(x), cp), sends(b, xs, one(w5), cp)}),
                                         3, true),
                              "P3 double star at distance 5"));
        pieces.push_back(need(make_piece(b, cp,
                                         unite({one(u1), one(u4), sends(b, xs, one(u1), cp), sends(b, ys, one(u4), cp)}),
                                         3, true),
                              "P3 double star between layers 1 and 4"));
    } else {
        bug("P3 layered case with diameter below 3");
    }
    return out;
}

// Seeds (color, vertex) of at most two components of the whole graph covering the block.
std::vector<std::pair<int, int>> block_component_seeds(const ColoredMultigraph& s, const VertexSet& X,
                                                       const VertexSet& Y, int c1, int c2, BipartiteClass* cls_out) {
    const ColoredMultigraph b = cross_only(s, X, Y);
    const BlockView w{b, X, Y, c1, c2};
    BipartiteClass cls;
    cls.colors = {c1, c2};
    std::vector<std::pair<int, int>> seeds;
    if (detect_p1(w, cls)) {
        seeds = {{c1, cls.special[0]}, {c2, cls.special[1]}};
    } else if (detect_p2(w, cls)) {
        seeds = {{c1, cls.x1[0]}, {c1, cls.x2[0]}};
    } else {
        cls.tag = BipartiteTag::P3;
        const VertexSet all = unite({X, Y});
        for (int c : {c1, c2})
            if (block_connected(b, all, c)) {
                cls.color = c;
                break;
            }
        if (!cls.color) bug("two-colored bipartite block fits none of P1, P2, P3");
        seeds = {{cls.color, X[0]}};
    }
    if (cls_out) *cls_out = cls;
    return seeds;
}

// ---------------------------------------------------------------------------------------------
// Complete graphs

CoverCertificate complete2(const ColoredMultigraph& g, const ColoredMultigraph& s, std::string* route) {
    const VertexSet all = all_vertices(s.n());
    for (int c = 1; c <= 2; ++c) {
        if (diameter(s, all, c) > 3) continue;
        if (auto p = make_piece(s, c, all, 4, true))
            return finish(g, {*p}, 1, 4, 0, "r2: color " + std::to_string(c), route);
    }
    bug("r2: neither color class has diameter 3 and a spanning tree of diameter 4");
}

CoverCertificate complete3(const ColoredMultigraph& g, const ColoredMultigraph& s, std::string* route) {
    const int x = 0;
    const VertexSet rest = minus(all_vertices(s.n()), one(x));
    std::vector<VertexSet> A(4);
    for (int v : rest) A[col(s, x, v)].push_back(v);
    auto tree = [&](int c, const VertexSet& vs, const char* what) { return need(make_piece(s, c, vs, 4, true), what); };

    if (A[1].empty() || A[2].empty() || A[3].empty()) {
        std::vector<Piece> ps;
        for (int c = 1; c <= 3; ++c)
            if (!A[c].empty()) ps.push_back(tree(c, unite({one(x), A[c]}), "star"));
        if (ps.empty()) ps.push_back(tree(1, one(x), "single vertex"));
        return finish(g, ps, 2, 4, 0, "r3: empty neighborhood class", route);
    }

    VertexSet B[4][4];
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) B[i][j] = minus(A[i], sends(s, A[i], A[j], j));
    auto third = [](int i, int j) { return 6 - i - j; };

    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j && B[i][j].empty()) {
                const int k = third(i, j);
                return finish(g,
                              {tree(j, unite({one(x), A[j], A[i]}), "B_ij empty"),
                               tree(k, unite({one(x), A[k]}), "B_ij empty star")},
                              2, 4, 0, "r3: some B_ij empty", route);
            }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            const int k = third(i, j);
            const VertexSet diff = minus(B[i][j], B[i][k]);
            if (diff.empty()) continue;
            const int z = diff[0];
            return finish(g,
                          {tree(k, unite({one(x), A[k], one(z), B[j][i]}), "z tree"),
                           tree(i, unite({one(x), A[i], minus(A[j], B[j][i])}), "A_i tree")},
                          2, 4, 0, "r3: B_ij differs from B_ik", route);
        }
    // now B_i := B_ij = B_ik for every i
    int i = 1;
    for (int t = 1; t <= 3; ++t)
        if (A[t] != B[t][t % 3 + 1]) {
            i = t;
            break;
        }
    const int j = i % 3 + 1, k = j % 3 + 1;
    return finish(g,
                  {tree(i, unite({one(x), A[i], minus(A[j], B[j][i]), minus(A[k], B[k][i])}), "radius two tree"),
                   tree(i, unite({B[j][i], B[k][i]}), "double star")},
                  2, 4, 0, A[i] == B[i][j] ? "r3: A_i = B_i for all i" : "r3: A_i differs from B_i", route);
}

CoverCertificate complete4(const ColoredMultigraph& g, const ColoredMultigraph& s, std::string* route) {
    const int n = s.n(), x = 0;
    const VertexSet rest = minus(all_vertices(n), one(x));
    std::vector<VertexSet> A(5);
    for (int v : rest) A[col(s, x, v)].push_back(v);
    auto piece = [&](int c, const VertexSet& vs, int bound, const char* what) {
        return need(make_piece(s, c, vs, bound), what);
    };
    auto star = [&](int c) { return piece(c, unite({one(x), A[c]}), 2, "star"); };
    auto done = [&](std::vector<Piece> ps, const char* name) { return finish(g, std::move(ps), 3, 6, 0, name, route); };

    {
        int empty = 0;
        for (int c = 1; c <= 4; ++c) empty += A[c].empty();
        if (empty) {
            std::vector<Piece> ps;
            for (int c = 1; c <= 4; ++c)
                if (!A[c].empty()) ps.push_back(star(c));
            if (ps.empty()) ps.push_back(piece(1, one(x), 0, "single vertex"));
            return done(ps, "r4: empty neighborhood class");
        }
    }

    VertexSet B[5][5];
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            if (i != j) B[i][j] = minus(A[i], sends(s, A[i], A[j], j));
    auto others = [](std::initializer_list<int> used) {
        std::vector<int> o;
        for (int c = 1; c <= 4; ++c)
            if (std::find(used.begin(), used.end(), c) == used.end()) o.push_back(c);
        return o;
    };
    auto N = [&](int c, int u, const VertexSet& within) { return sends(s, within, one(u), c); };

    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            if (i != j && B[i][j].empty()) {
                auto kl = others({i, j});
                return done({piece(j, unite({one(x), A[j], A[i]}), 4, "B_ij empty"), star(kl[0]), star(kl[1])},
                            "r4: some B_ij empty");
            }

    // C1
    for (int i = 1; i <= 4; ++i) {
        auto o = others({i});
        if (meet(meet(B[i][o[0]], B[i][o[1]]), B[i][o[2]]).empty()) {
            std::vector<Piece> ps;
            for (int j : o) ps.push_back(piece(j, unite({one(x), A[j], minus(A[i], B[i][j])}), 4, "C1"));
            return done(ps, "r4: C1 fails");
        }
    }
    // C2
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            if (i == j) continue;
            auto kl = others({i, j});
            const int k = kl[0], l = kl[1];
            const VertexSet d = minus(B[i][j], unite({B[i][k], B[i][l]}));
            if (d.empty()) continue;
            const int u = d[0];
            return done({piece(i, unite({one(x), A[i], minus(A[j], B[j][i])}), 4, "C2 first"),
                         piece(k, unite({one(x), A[k], one(u), N(k, u, B[j][i])}), 4, "C2 second"),
                         piece(l, unite({one(x), A[l], one(u), N(l, u, B[j][i])}), 4, "C2 third")},
                        "r4: C2 fails");
        }
    // C3
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k) {
                if (i == j || i == k || j == k) continue;
                const int l = 10 - i - j - k;
                if (minus(unite({B[i][k], B[i][l]}), B[i][j]).empty()) continue;
                if (minus(unite({B[k][i], B[k][j]}), B[k][l]).empty()) continue;
                const VertexSet pi = minus(B[i][k], B[i][j]), pk = minus(B[k][i], B[k][l]);
                if (pi.empty() || pk.empty()) bug("r4 C3: representatives missing");
                const int ui = pi[0], uk = pk[0];
                if (col(s, ui, uk) == j)
                    return done({piece(k, unite({minus(A[i], B[i][k]), A[k], one(x)}), 4, "C3 first"),
                                 piece(j, unite({one(ui), one(uk), A[j], one(x), N(j, uk, B[i][k])}), 6, "C3 second"),
                                 piece(l, unite({A[l], one(x), one(uk), N(l, uk, B[i][k])}), 4, "C3 third")},
                                "r4: C3 fails");
                return done({piece(i, unite({minus(A[k], B[k][i]), A[i], one(x)}), 4, "C3 first, mirrored"),
                             piece(l, unite({one(ui), one(uk), A[l], one(x), N(l, ui, B[k][i])}), 6, "C3 second, mirrored"),
                             piece(j, unite({A[j], one(x), one(ui), N(j, ui, B[k][i])}), 4, "C3 third, mirrored")},
                            "r4: C3 fails (mirrored)");
            }

    // Final case: B_ij = B_ik, B_jk and B_jl inside B_ji, B_kj and B_kl inside B_ki.
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k) {
                if (i == j || i == k || j == k) continue;
                const int l = 10 - i - j - k;
                if (B[i][j] != B[i][k]) continue;
                if (!subset(unite({B[j][k], B[j][l]}), B[j][i])) continue;
                if (!subset(unite({B[k][j], B[k][l]}), B[k][i])) continue;
                Piece h1 = piece(l, unite({one(x), A[l], minus(A[i], B[i][j]), minus(A[j], B[j][i]), minus(A[k], B[k][i])}),
                                 4, "final first");
                const VertexSet R = unite({B[i][j], B[j][i], B[k][i]});
                Pool pool;
                auto f1 = classify_block(s, B[i][j], B[j][i], k, l);
                auto f2 = classify_block(s, B[i][k], B[k][i], j, l);
                pool.add_all(f1.cert.pieces);
                pool.add_all(f2.cert.pieces);
                pool.add(make_piece(s, f1.cls.color ? f1.cls.color : k, unite({B[i][j], B[j][i]}), 6));
                pool.add(make_piece(s, f2.cls.color ? f2.cls.color : j, unite({B[i][k], B[k][i]}), 6));
                pool.add(make_piece(s, i, unite({one(x), B[i][j]}), 2));
                pool.add(make_piece(s, j, unite({one(x), B[j][i]}), 2));
                pool.add(make_piece(s, k, unite({one(x), B[k][i]}), 2));
                for (int c = 1; c <= 4; ++c)
                    add_region_pieces(pool, s, {c}, {B[i][j], B[j][i], B[k][i], unite({one(x), A[c]})}, 6);
                auto sel = pool.select(n, R, 2);
                if (!sel) bug("r4 final case: no two named pieces cover the remainder");
                std::vector<Piece> ps{h1};
                ps.insert(ps.end(), sel->begin(), sel->end());
                return done(ps, "r4: final bipartite case");
            }
    bug("r4: no ordering satisfies the final-case inclusions");
}

}  // namespace

// ---------------------------------------------------------------------------------------------

BipartiteOutcome classify_bipartite2(const ColoredMultigraph& g, const VertexSet& X0, const VertexSet& Y0, int c1,
                                     int c2) {
    const VertexSet X = sorted(X0), Y = sorted(Y0);
    if (c1 < 1 || c2 < 1 || c1 == c2 || c1 > g.r() || c2 > g.r())
        throw std::invalid_argument("classify_bipartite2: bad color pair");
    if (X.empty() || Y.empty()) throw std::invalid_argument("classify_bipartite2: empty side");
    check_multipartite(g, {X, Y}, "classify_bipartite2");
    check_colors(g, color_bit(c1) | color_bit(c2), "classify_bipartite2");
    const ColoredMultigraph s = reduce(g, color_bit(c1) | color_bit(c2));
    auto out = classify_block(s, X, Y, c1, c2);
    auto rep = verify(g, out.cert);
    if (!rep) bug(std::string("bipartite ") + to_string(out.cls.tag) + ": " + rep.message);
    auto err = check_bipartite_class(g, X, Y, out.cls);
    if (!err.empty()) bug(err);
    return out;
}

std::string check_bipartite_class(const ColoredMultigraph& g, const VertexSet& X, const VertexSet& Y,
                                  const BipartiteClass& cls) {
    const int c1 = cls.colors[0], c2 = cls.colors[1];
    auto block = [&](const VertexSet& P, const VertexSet& Q, int c) {
        for (int p : P)
            for (int q : Q)
                if (!g.has(p, q, c)) return false;
        return true;
    };
    switch (cls.tag) {
    case BipartiteTag::P1: {
        const VertexSet& S = cls.double_side == 1 ? X : Y;
        const VertexSet& T = cls.double_side == 1 ? Y : X;
        if (cls.double_side != 0 && cls.double_side != 1) return "P1: no double covered side";
        for (int i = 0; i < 2; ++i) {
            if (!in(S, cls.special[i])) return "P1: special vertex on the wrong side";
            if (!block(one(cls.special[i]), T, cls.colors[i])) return "P1: special vertex sends another color";
        }
        return "";
    }
    case BipartiteTag::P2: {
        if (cls.x1.empty() || cls.x2.empty() || cls.y1.empty() || cls.y2.empty()) return "P2: empty block";
        if (unite({cls.x1, cls.x2}) != X || !meet(cls.x1, cls.x2).empty()) return "P2: not a partition of X";
        if (unite({cls.y1, cls.y2}) != Y || !meet(cls.y1, cls.y2).empty()) return "P2: not a partition of Y";
        if (!block(cls.x1, cls.y1, c1) || !block(cls.x2, cls.y2, c1)) return "P2: diagonal block not in color 1";
        if (!block(cls.x1, cls.y2, c2) || !block(cls.x2, cls.y1, c2)) return "P2: cross block not in color 2";
        return "";
    }
    case BipartiteTag::P3:
        if (cls.color != c1 && cls.color != c2) return "P3: no color";
        if (!block_connected(cross_only(g, X, Y), unite({X, Y}), cls.color)) return "P3: color class not connected";
        return "";
    }
    return "unknown tag";
}

CoverCertificate cover_complete(const ColoredMultigraph& g, int r, std::string* route) {
    if (r < 2 || r > 4) throw std::invalid_argument("cover_complete: r must be 2, 3 or 4");
    check_complete(g, "cover_complete");
    check_colors(g, low_mask(r), "cover_complete");
    const ColoredMultigraph s = reduce(g, low_mask(r));
    if (g.n() == 1) {
        Piece p;
        p.color = 1;
        p.vertices = {0};
        return finish(g, {p}, r - 1, r == 4 ? 6 : 4, 0, "single vertex", route);
    }
    if (r == 2) return complete2(g, s, route);
    if (r == 3) return complete3(g, s, route);
    return complete4(g, s, route);
}

CoverCertificate cover_bipartite3(const ColoredMultigraph& g, const VertexSet& X0, const VertexSet& Y0,
                                  std::string* route) {
    const VertexSet X = sorted(X0), Y = sorted(Y0);
    if (X.empty() || Y.empty()) throw std::invalid_argument("cover_bipartite3: empty side");
    check_multipartite(g, {X, Y}, "cover_bipartite3");
    check_colors(g, low_mask(3), "cover_bipartite3");
    const ColoredMultigraph s = reduce(g, low_mask(3));
    const int n = s.n();
    auto rest_colors = [](int chi) {
        std::array<int, 2> o{};
        int t = 0;
        for (int c = 1; c <= 3; ++c)
            if (c != chi) o[t++] = c;
        return o;
    };
    auto done = [&](std::vector<Piece> ps, const char* name) { return finish(g, std::move(ps), 4, 6, 0, name, route); };

    // A component missing both sides splits the rest into two 2-colored blocks.
    for (int chi = 1; chi <= 3; ++chi)
        for (const auto& C : components(s, chi).parts) {
            if (C.size() < 2) continue;
            if (minus(X, C).empty() || minus(Y, C).empty()) continue;
            auto o = rest_colors(chi);
            auto b1 = classify_block(s, minus(X, C), meet(Y, C), o[0], o[1]);
            auto b2 = classify_block(s, minus(Y, C), meet(X, C), o[0], o[1]);
            std::vector<Piece> ps = b1.cert.pieces;
            ps.insert(ps.end(), b2.cert.pieces.begin(), b2.cert.pieces.end());
            return done(ps, "bip3: component misses both sides");
        }

    // Every nontrivial component covers a side; a short one finishes with one block.
    for (int chi = 1; chi <= 3; ++chi)
        for (const auto& C : components(s, chi).parts) {
            if (C.size() < 2 || diameter(s, C, chi) > 5) continue;
            for (int side = 0; side < 2; ++side) {
                const VertexSet& P = side ? Y : X;
                const VertexSet& Q = side ? X : Y;
                if (!subset(P, C)) continue;
                std::vector<Piece> ps{need(make_piece(s, chi, C, 6), "covering component")};
                const VertexSet left = minus(Q, C);
                if (!left.empty()) {
                    auto o = rest_colors(chi);
                    auto b = classify_block(s, left, P, o[0], o[1]);
                    ps.insert(ps.end(), b.cert.pieces.begin(), b.cert.pieces.end());
                }
                return done(ps, "bip3: short component covers a side");
            }
        }

    // A long component C covering side P; layers from a vertex v on the other side.
    for (int chi = 1; chi <= 3; ++chi)
        for (const auto& C : components(s, chi).parts) {
            if (C.size() < 2) continue;
            const bool coversY = subset(Y, C), coversX = subset(X, C);
            if (!coversX && !coversY) continue;
            const VertexSet& P = coversY ? Y : X;
            const VertexSet& Q = coversY ? X : Y;
            int v = -1, e = -1;
            std::vector<int> dist;
            for (int i = 0; i < int(C.size()); ++i) {
                if (!in(Q, C[i])) continue;
                auto di = induced_distances(s, C, chi, i);
                int ecc = *std::max_element(di.begin(), di.end());
                if (ecc > e) e = ecc, v = C[i], dist = std::move(di);
            }
            if (e < 5) bug("bip3: long component without a far vertex on the uncovered side");
            std::vector<VertexSet> D(e + 1);
            for (int i = 0; i < int(C.size()); ++i) D[dist[i]].push_back(C[i]);
            VertexSet X1 = unite({D[0], D[2]}), X2 = minus(Q, C), Y1, Y2 = D[1], Y0 = D[3];
            for (int t = 4; t <= e; t += 2) X2 = unite({X2, D[t]});
            for (int t = 5; t <= e; t += 2) Y1 = unite({Y1, D[t]});
            (void)P;
            auto o = rest_colors(chi);
            const VertexSet Y0a = sends(s, Y0, one(v), o[0]), Y0b = sends(s, Y0, one(v), o[1]);

            Pool pool;
            pool.add(make_piece(s, chi, unite({D[0], D[1], D[2], D[3]}), 6, true));
            for (auto [Xi, Yi] : {std::pair{X1, Y1}, std::pair{X2, Y2}}) {
                if (Xi.empty() || Yi.empty()) continue;
                auto b = classify_block(s, Xi, Yi, o[0], o[1]);
                pool.add_all(b.cert.pieces);
            }
            add_region_pieces(pool, s, {o[0], o[1]}, {X1, Y1, X2, Y2, Y0a, Y0b}, 6);
            for (int xp : minus(X2, D[4]))
                for (const VertexSet& base : {unite({X1, Y1, Y0}), unite({X2, Y2, Y0}), unite({X1, Y1, Y0a}),
                                              unite({X1, Y1, Y0b}), unite({X2, Y2, Y0a}), unite({X2, Y2, Y0b})})
                    for (int c : o)
                        for (const auto& comp : region_components(s, c, unite({base, one(xp)})))
                            pool.add(make_piece(s, c, comp, 6));
            auto sel = pool.select(n, all_vertices(n), 4);
            if (!sel) bug("bip3 layered case: no four named pieces cover the graph");
            return done(*sel, "bip3: layered long component");
        }
    bug("bip3: no component covers a side");
}

CoverCertificate cover_alpha2(const ColoredMultigraph& g, std::string* route) {
    check_colors(g, low_mask(2), "cover_alpha2");
    if (alpha(g).size != 2) throw std::invalid_argument("cover_alpha2: alpha(g) is not 2");
    const ColoredMultigraph s = reduce(g, low_mask(2));
    const int n = s.n();
    int x = -1, y = -1;
    for (int u = 0; u < n && x < 0; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!s.adjacent(u, v)) {
                x = u, y = v;
                break;
            }
    auto nbr = [&](int v) {
        VertexSet out;
        for (int u = 0; u < n; ++u)
            if (u != v && s.adjacent(u, v)) out.push_back(u);
        return out;
    };
    auto nbr_c = [&](int v, int c) { return sends(s, all_vertices(n), one(v), c); };

    Pool pool;
    for (int swap = 0; swap < 2; ++swap)
        for (int perm = 0; perm < 2; ++perm) {
            const int a = swap ? y : x, b = swap ? x : y;
            const int k1 = perm ? 2 : 1, k2 = perm ? 1 : 2;  // the proof's colors 1 and 2
            const VertexSet Na = nbr(a), Nb = nbr(b);
            const VertexSet Ax = minus(Na, Nb), Ay = minus(Nb, Na), A = meet(Na, Nb);
            auto Aij = [&](int i, int j) {
                return meet(meet(A, nbr_c(a, i == 1 ? k1 : k2)), nbr_c(b, j == 1 ? k1 : k2));
            };
            const VertexSet A11 = Aij(1, 1), A12 = Aij(1, 2), A21 = Aij(2, 1), A22 = Aij(2, 2);
            const VertexSet xa = one(a), yb = one(b);
            auto G = [&](int i, const VertexSet& vs) { pool.add(make_piece(s, i == 1 ? k1 : k2, vs, 6)); };
            // Case 1
            G(1, unite({xa, minus(A, A22), yb, Ay}));
            G(2, unite({Ax, xa, A22}));
            G(2, unite({Ax, xa, A, yb}));
            G(1, unite({Ay, yb}));
            G(1, unite({Ax, xa, A12}));
            G(1, unite({Ay, yb, A21}));
            // Case 2.1
            G(1, unite({Ax, xa, yb, minus(A, A22)}));
            G(2, unite({Ay, yb, A22}));
            G(1, unite({xa, yb, Ax, A21}));
            G(2, unite({yb, A12, Ay}));
            G(2, unite({xa, Ax, A21}));
            G(2, unite({yb, Ay, A12}));
            VertexSet Z1, Z2;
            const VertexSet NA21 = [&] {
                VertexSet out;
                for (int v : A21) out = unite({out, nbr(v)});
                return out;
            }();
            Z1 = minus(Ax, NA21);
            Z2 = minus(Ay, NA21);
            for (int i = 1; i <= 2; ++i) {
                G(i, unite({Z1, Z2}));
                G(i, unite({xa, Ax, A12, Z2}));
                G(i, unite({yb, A21, minus(Ay, Z2)}));
            }
            // Case 2.2
            G(1, unite({xa, yb, Ax, Ay, minus(A, A22)}));
            G(2, unite({xa, A22}));
            VertexSet U1, U2;
            for (int v : A22) {
                for (int u : Ax)
                    if (s.has(v, u, k1)) {
                        U1.push_back(v);
                        break;
                    }
                for (int u : Ay)
                    if (s.has(v, u, k1)) {
                        U2.push_back(v);
                        break;
                    }
            }
            G(1, unite({xa, Ax, A12, U1}));
            G(1, unite({yb, Ay, A21, minus(U2, U1)}));
            for (int w : A22) {
                bool lonely = true;
                for (int u : unite({Ax, Ay}))
                    if (s.adjacent(w, u) && !s.has(w, u, k2)) lonely = false;
                if (!lonely) continue;
                VertexSet Z;
                for (int u : unite({Ax, Ay}))
                    if (!s.adjacent(w, u)) Z.push_back(u);
                G(1, Z);
                G(2, Z);
                break;
            }
            G(2, unite({xa, yb, A, nbr_c(a, k2)}));
        }
    auto sel = pool.select(n, all_vertices(n), 2);
    if (!sel) bug("alpha2: no two named pieces cover the graph");
    return finish(g, *sel, 2, 6, 0, "alpha2: named pieces", route);
}

CoverCertificate cover_multipartite(const ColoredMultigraph& g, const std::vector<VertexSet>& parts0, int r,
                                    std::string* route) {
    if (r != 2 && r != 3) throw std::invalid_argument("cover_multipartite: r must be 2 or 3");
    std::vector<VertexSet> parts;
    for (const auto& p : parts0) parts.push_back(sorted(p));
    if (parts.size() < 2) throw std::invalid_argument("cover_multipartite: need at least two parts");
    if (r == 3 && parts.size() != 3) throw std::invalid_argument("cover_multipartite: r = 3 needs exactly 3 parts");
    check_multipartite(g, parts, "cover_multipartite");
    check_colors(g, low_mask(r), "cover_multipartite");
    const ColoredMultigraph s = reduce(g, low_mask(r));
    const int n = s.n();
    auto seeds_to_pieces = [&](const std::vector<std::pair<int, int>>& seeds) {
        std::vector<Piece> ps;
        for (auto [c, v] : seeds) ps.push_back(component_piece(s, c, v));
        return ps;
    };
    auto done = [&](std::vector<Piece> ps, const std::string& name) {
        return finish(g, std::move(ps), r, -1, 0, name, route);
    };

    if (r == 2) {
        const VertexSet rest = minus(all_vertices(n), parts[0]);
        BipartiteClass cls;
        auto seeds = block_component_seeds(s, parts[0], rest, 1, 2, &cls);
        return done(seeds_to_pieces(seeds), std::string("2-colored multipartite: ") + to_string(cls.tag));
    }

    // a component covering a whole part
    for (int chi = 1; chi <= 3; ++chi)
        for (const auto& C : components(s, chi).parts) {
            if (C.size() < 2) continue;
            for (const auto& Vi : parts) {
                if (!subset(Vi, C)) continue;
                std::vector<Piece> ps{component_piece(s, chi, C[0])};
                const VertexSet left = minus(all_vertices(n), C);
                if (!left.empty()) {
                    std::array<int, 2> o{};
                    int t = 0;
                    for (int c = 1; c <= 3; ++c)
                        if (c != chi) o[t++] = c;
                    auto more = seeds_to_pieces(block_component_seeds(s, left, Vi, o[0], o[1], nullptr));
                    ps.insert(ps.end(), more.begin(), more.end());
                }
                return done(ps, "3partite: component covers a part");
            }
        }

    // a component meeting all three parts
    int chi = 0;
    VertexSet C;
    for (int c = 1; c <= 3 && !chi; ++c)
        for (const auto& comp : components(s, c).parts) {
            bool all = true;
            for (const auto& Vi : parts) all = all && !meet(Vi, comp).empty();
            if (all) {
                chi = c, C = comp;
                break;
            }
        }
    if (!chi) bug("3partite: no component meets all three parts");
    std::array<int, 2> o{};
    {
        int t = 0;
        for (int c = 1; c <= 3; ++c)
            if (c != chi) o[t++] = c;
    }
    const VertexSet X1 = meet(parts[0], C), X2 = minus(parts[0], C);
    const VertexSet Y1 = meet(parts[1], C), Y2 = minus(parts[1], C);
    const VertexSet Z1 = meet(parts[2], C), Z2 = minus(parts[2], C);
    if (X2.empty() || Y2.empty() || Z2.empty()) bug("3partite: blow-up has an empty class");
    BipartiteClass k1, k2;
    auto s1 = block_component_seeds(s, Z1, unite({X2, Y2}), o[0], o[1], &k1);
    auto s2 = block_component_seeds(s, Z2, unite({X1, Y1}), o[0], o[1], &k2);
    if (k1.tag == BipartiteTag::P3 || k2.tag == BipartiteTag::P3) {
        // the spanning class of one block plus the lemma's components for the other
        auto seeds = k1.tag == BipartiteTag::P3 ? s1 : s2;
        const auto& more = k1.tag == BipartiteTag::P3 ? s2 : s1;
        seeds.insert(seeds.end(), more.begin(), more.end());
        return done(seeds_to_pieces(seeds), "3partite: Case 1");
    }
    std::string name = "3partite: Case ";
    if (k1.tag == BipartiteTag::P2 || k2.tag == BipartiteTag::P2)
        name += (k1.tag == k2.tag) ? "2.1" : "2.2/2.3";
    else
        name += "3";
    // Cases 2 and 3 close with components of the two colors other than chi.
    Pool pool;
    for (int c : o)
        for (const auto& comp : components(s, c).parts) pool.add(component_piece(s, c, comp[0]));
    auto sel = pool.select(n, all_vertices(n), 3);
    if (!sel) bug(name + ": no three components of the blow-up colors cover the graph");
    return done(*sel, name);
}

CoverCertificate restricted_cover(const ColoredMultigraph& g, int r, std::array<int, 2> S, std::string* route) {
    if (r < 3 || r > 5) throw std::invalid_argument("restricted_cover: r must be 3, 4 or 5");
    if (S[0] == S[1] || S[0] < 1 || S[1] < 1 || S[0] > r || S[1] > r)
        throw std::invalid_argument("restricted_cover: S must be two distinct colors of [r]");
    check_complete(g, "restricted_cover");
    check_colors(g, low_mask(r), "restricted_cover");
    if (S[0] > S[1]) std::swap(S[0], S[1]);
    const ColoredMultigraph h = closure(g);
    const int n = h.n();
    const ColorMask smask = color_bit(S[0]) | color_bit(S[1]);
    const ColorMask tmask = low_mask(r) & ~smask;
    std::vector<int> T;
    for (int c = 1; c <= r; ++c)
        if (tmask & color_bit(c)) T.push_back(c);

    ColoredMultigraph gs(n, r);
    for (const auto& [e, m] : h.edges())
        if (m & smask) gs.set_colors(e.first, e.second, m & smask);
    auto al = alpha(gs);
    if (al.size <= r - 1)
        return finish(g, konig_cover(h, S[0], S[1]), r - 1, -1, smask, "restricted: Konig cover in S", route);

    VertexSet X(al.witness.begin(), al.witness.begin() + r);
    std::sort(X.begin(), X.end());
    auto done = [&](std::vector<Piece> ps, const std::string& name) {
        return finish(g, std::move(ps), r - 1, -1, tmask, name, route);
    };
    // components of color c meeting X, largest trace first
    auto traces = [&](int c) {
        std::vector<VertexSet> out;
        for (const auto& comp : components(h, c).parts)
            if (!meet(comp, X).empty()) out.push_back(comp);
        std::stable_sort(out.begin(), out.end(), [&](const VertexSet& a, const VertexSet& b) {
            return meet(a, X).size() > meet(b, X).size();
        });
        return out;
    };
    auto as_piece = [](int c, const VertexSet& vs) {
        Piece p;
        p.color = c;
        p.vertices = vs;
        return p;
    };

    if (r == 3) return done({component_piece(h, T[0], X[0])}, "restricted r3: one component through X");

    if (r == 4) {
        for (int t = 0; t < 2; ++t) {
            const int c = T[t], cp = T[1 - t];
            const VertexSet A1 = component_of(h, c, X[0]);
            if (!subset(X, A1)) continue;
            auto bs = traces(cp);
            std::vector<Piece> ps{as_piece(c, A1)};
            for (int q = 0; q < 2 && q < int(bs.size()); ++q) ps.push_back(as_piece(cp, bs[q]));
            return done(ps, "restricted r4: A1, B1, B2");
        }
        bug("restricted r4: no component of the other two colors spans X");
    }

    // r = 5
    std::vector<std::vector<VertexSet>> tr(6);
    for (int c : T) tr[c] = traces(c);
    auto big = [&](int c, std::size_t m) {
        std::vector<VertexSet> out;
        for (const auto& comp : tr[c])
            if (meet(comp, X).size() >= m) out.push_back(comp);
        return out;
    };
    std::array<int, 3> p{T[0], T[1], T[2]};
    do {
        const int i = p[0], j = p[1], k = p[2];
        if (tr[i].size() + tr[j].size() + big(k, 3).size() <= 4) {
            std::vector<Piece> ps;
            for (const auto& c : tr[i]) ps.push_back(as_piece(i, c));
            for (const auto& c : tr[j]) ps.push_back(as_piece(j, c));
            for (const auto& c : big(k, 3)) ps.push_back(as_piece(k, c));
            return done(ps, "restricted r5: lemma (i)");
        }
        if (tr[i].size() + big(j, 2).size() + big(k, 2).size() <= 4) {
            std::vector<Piece> ps;
            for (const auto& c : tr[i]) ps.push_back(as_piece(i, c));
            for (const auto& c : big(j, 2)) ps.push_back(as_piece(j, c));
            for (const auto& c : big(k, 2)) ps.push_back(as_piece(k, c));
            return done(ps, "restricted r5: lemma (ii)");
        }
    } while (std::next_permutation(p.begin(), p.end()));

    // The two exceptional signatures: try every cover the argument names, under every relabeling.
    auto covers = [&](const std::vector<VertexSet>& sets) {
        VertexSet u;
        for (const auto& s : sets) u = unite({u, s});
        return int(u.size()) == n;
    };
    p = {T[0], T[1], T[2]};
    do {
        const int a = p[0], b = p[1], c = p[2];
        if (tr[a].size() < 2 || tr[b].size() < 2 || tr[c].size() < 2) continue;
        const auto &A1 = tr[a][0], &A2 = tr[a][1], &B1 = tr[b][0], &B2 = tr[b][1], &C1 = tr[c][0], &C2 = tr[c][1];
        std::vector<std::vector<std::pair<int, VertexSet>>> named = {
            {{b, B1}, {b, B2}, {c, C1}, {c, C2}},
            {{a, A1}, {a, A2}, {b, B1}, {c, C1}},
            {{a, A1}, {a, A2}, {b, B1}, {b, B2}},
            {{a, A1}, {a, A2}, {c, C1}, {c, C2}},
        };
        const VertexSet outAB = minus(all_vertices(n), unite({A1, A2, B1, B2}));
        const VertexSet outAC = minus(all_vertices(n), unite({A1, A2, C1, C2}));
        if (!outAB.empty() && !outAC.empty()) {
            const VertexSet A3 = component_of(h, a, outAB[0]);
            named.push_back({{a, A1}, {a, A2}, {a, A3}, {b, B1}});
        }
        for (const auto& cand : named) {
            std::vector<VertexSet> sets;
            for (const auto& [cc, vs] : cand) sets.push_back(vs);
            if (!covers(sets)) continue;
            std::vector<Piece> ps;
            for (const auto& [cc, vs] : cand) ps.push_back(as_piece(cc, vs));
            return done(ps, "restricted r5: exceptional signature");
        }
    } while (std::next_permutation(p.begin(), p.end()));
    bug("restricted r5: every named cover fails");
}

ThreeColorClass classify3(const ColoredMultigraph& g) {
    check_complete(g, "classify3");
    check_colors(g, low_mask(3), "classify3");
    const int n = g.n();
    ThreeColorClass out;
    std::vector<ComponentSet> comps;
    for (int c = 1; c <= 3; ++c) comps.push_back(components(g, c));

    // largest monochromatic component
    int blue = 1;
    VertexSet B;
    for (int c = 1; c <= 3; ++c)
        for (const auto& comp : comps[c - 1].parts)
            if (comp.size() > B.size()) B = comp, blue = c;
    out.blue = blue;
    const VertexSet U = minus(all_vertices(n), B);
    if (U.empty()) {
        out.tag = ThreeColorTag::TypeI;
        out.spanning = B;
        return out;
    }
    int red = 0;
    VertexSet R;
    for (int c = 1; c <= 3; ++c) {
        if (c == blue) continue;
        for (const auto& comp : comps[c - 1].parts)
            if (!meet(comp, B).empty() && !meet(comp, U).empty() && comp.size() > R.size()) R = comp, red = c;
    }
    if (!red) bug("classify3: no component meets both B and its complement");
    const int green = 6 - blue - red;
    out.red = red;
    out.green = green;
    if (!minus(U, R).empty()) {
        out.tag = ThreeColorTag::TypeII;
        out.W = meet(B, R);
        out.X = minus(B, R);
        out.Y = meet(U, R);
        out.Z = minus(U, R);
    } else {
        const VertexSet G = component_of(g, green, U[0]);
        out.tag = ThreeColorTag::TypeIII;
        out.W = meet(meet(B, R), G);
        out.X = minus(B, G);
        out.Y = minus(B, R);
        out.Z = U;
    }
    auto err = check_three_color_class(g, out);
    if (!err.empty()) bug("classify3: " + err);
    return out;
}

std::string check_three_color_class(const ColoredMultigraph& g, const ThreeColorClass& cls) {
    const int n = g.n();
    auto all_in = [&](const VertexSet& P, const VertexSet& Q, int c) {
        for (int p : P)
            for (int q : Q)
                if (!g.has(p, q, c)) return false;
        return true;
    };
    auto none_in = [&](const VertexSet& P, const VertexSet& Q, int c) {
        for (int p : P)
            for (int q : Q)
                if (g.has(p, q, c)) return false;
        return true;
    };
    if (cls.tag == ThreeColorTag::TypeI) {
        if (int(cls.spanning.size()) != n) return "TypeI: component does not span";
        return diameter(g, cls.spanning, cls.blue) == kInf ? "TypeI: not connected" : "";
    }
    const VertexSet all = unite({cls.W, cls.X, cls.Y, cls.Z});
    if (int(all.size()) != n ||
        cls.W.size() + cls.X.size() + cls.Y.size() + cls.Z.size() != std::size_t(n))
        return "not a partition";
    const int b = cls.blue, r = cls.red, gr = cls.green;
    if (cls.tag == ThreeColorTag::TypeII) {
        if (cls.W.empty() || cls.X.empty() || cls.Y.empty() || cls.Z.empty()) return "TypeII: empty part";
        if (!all_in(cls.W, cls.X, b) || !all_in(cls.Y, cls.Z, b)) return "TypeII: blue blocks";
        if (!all_in(cls.W, cls.Y, r) || !all_in(cls.X, cls.Z, r)) return "TypeII: red blocks";
        if (!all_in(cls.W, cls.Z, gr) || !all_in(cls.X, cls.Y, gr)) return "TypeII: green blocks";
        return "";
    }
    if (cls.X.empty() || cls.Y.empty() || cls.Z.empty()) return "TypeIII: empty part";
    if (diameter(g, unite({cls.W, cls.X, cls.Y}), b) == kInf) return "TypeIII: W+X+Y not blue-connected";
    if (diameter(g, unite({cls.W, cls.X, cls.Z}), r) == kInf) return "TypeIII: W+X+Z not red-connected";
    if (diameter(g, unite({cls.W, cls.Y, cls.Z}), gr) == kInf) return "TypeIII: W+Y+Z not green-connected";
    if (!all_in(cls.X, cls.Y, b)) return "TypeIII: [X,Y] not blue";
    if (!all_in(cls.X, cls.Z, r)) return "TypeIII: [X,Z] not red";
    if (!all_in(cls.Y, cls.Z, gr)) return "TypeIII: [Y,Z] not green";
    if (!none_in(cls.W, cls.X, gr)) return "TypeIII: green edge in [W,X]";
    if (!none_in(cls.W, cls.Y, r)) return "TypeIII: red edge in [W,Y]";
    if (!none_in(cls.W, cls.Z, b)) return "TypeIII: blue edge in [W,Z]";
    return "";
}

}  // namespace ryser
