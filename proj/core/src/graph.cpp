#include "ryserlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ryserlab/bits.hpp"

namespace ryser {

ColoredMultigraph::ColoredMultigraph(int n, int r) : n_(n), r_(r) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (r < 0 || r > kMaxColors) throw std::invalid_argument("color count out of range");
    mask_.assign(std::size_t(n) * n, 0);
}

void ColoredMultigraph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

void ColoredMultigraph::add_edge(int u, int v, int c) {
    if (c < 1 || c > r_) throw std::out_of_range("color " + std::to_string(c) + " out of range");
    add_colors(u, v, color_bit(c));
}

void ColoredMultigraph::add_colors(int u, int v, ColorMask m) {
    check_pair(u, v);
    set_colors(u, v, colors(u, v) | m);
}

void ColoredMultigraph::set_colors(int u, int v, ColorMask m) {
    check_pair(u, v);
    if (r_ < kMaxColors && (m >> r_) != 0) throw std::out_of_range("color out of range");
    mask_[std::size_t(u) * n_ + v] = m;
    mask_[std::size_t(v) * n_ + u] = m;
}

std::vector<std::pair<std::pair<int, int>, ColorMask>> ColoredMultigraph::edges() const {
    std::vector<std::pair<std::pair<int, int>, ColorMask>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (auto m = colors(u, v)) out.push_back({{u, v}, m});
    return out;
}

std::size_t ColoredMultigraph::edge_count() const {
    std::size_t k = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (colors(u, v)) ++k;
    return k;
}

std::vector<int> ColoredMultigraph::neighbors(int v, int c) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && has(u, v, c)) out.push_back(u);
    return out;
}

ComponentSet components(const ColoredMultigraph& g, int c) {
    if (c < 1 || c > g.r()) throw std::out_of_range("color " + std::to_string(c) + " out of range");
    ComponentSet cs;
    cs.color = c;
    std::vector<int> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet part;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            part.push_back(v);
            for (int u = 0; u < g.n(); ++u)
                if (!seen[u] && u != v && g.has(u, v, c)) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(part.begin(), part.end());
        cs.parts.push_back(std::move(part));
    }
    return cs;
}

VertexSet component_of(const ColoredMultigraph& g, int c, int v) {
    for (auto& p : components(g, c).parts)
        if (std::binary_search(p.begin(), p.end(), v)) return p;
    return {};
}

ColoredMultigraph closure(const ColoredMultigraph& g) {
    ColoredMultigraph h = g;
    for (int c = 1; c <= g.r(); ++c)
        for (auto& p : components(g, c).parts)
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = i + 1; j < p.size(); ++j) h.add_edge(p[i], p[j], c);
    return h;
}

bool is_closed(const ColoredMultigraph& g) { return closure(g) == g; }

std::vector<int> induced_distances(const ColoredMultigraph& g, const VertexSet& vs, int c, int source_pos) {
    const int m = int(vs.size());
    std::vector<int> dist(m, kInf);
    std::deque<int> q{source_pos};
    dist[source_pos] = 0;
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (int b = 0; b < m; ++b)
            if (dist[b] == kInf && b != a && g.has(vs[a], vs[b], c)) {
                dist[b] = dist[a] + 1;
                q.push_back(b);
            }
    }
    return dist;
}

int diameter(const ColoredMultigraph& g, const VertexSet& vs, int c) {
    if (vs.empty()) throw std::invalid_argument("diameter of an empty vertex set");
    int best = 0;
    for (int s = 0; s < int(vs.size()); ++s) {
        auto d = induced_distances(g, vs, c, s);
        for (int x : d) best = std::max(best, x);
        if (best == kInf) return kInf;
    }
    return best;
}

namespace {

struct MisSearch {
    std::vector<Bits> adj;
    int best = 0;
    std::vector<int> best_set;
    std::vector<int> cur;

    void run(Bits p) {
        // vertices of degree <= 1 inside p can always be taken
        while (true) {
            int pick = -1;
            for (int v = p.first(); v >= 0; v = p.next(v))
                if (adj[v].and_count(p) <= 1) {
                    pick = v;
                    break;
                }
            if (pick < 0) break;
            cur.push_back(pick);
            p.reset(pick);
            p.minus(adj[pick]);
        }
        int np = p.count();
        if (np == 0) {
            if (int(cur.size()) > best) {
                best = int(cur.size());
                best_set = cur;
            }
            return;
        }
        if (int(cur.size()) + np <= best) return;
        int v = -1, deg = -1;
        for (int u = p.first(); u >= 0; u = p.next(u)) {
            int d = adj[u].and_count(p);
            if (d > deg) deg = d, v = u;
        }
        std::size_t mark = cur.size();
        {
            Bits q = p;
            q.reset(v);
            q.minus(adj[v]);
            cur.push_back(v);
            run(q);
            cur.resize(mark);
        }
        {
            Bits q = p;
            q.reset(v);
            run(q);
            cur.resize(mark);
        }
    }
};

}  // namespace

AlphaResult alpha(const ColoredMultigraph& g, const VertexSet& within) {
    const int m = int(within.size());
    MisSearch s;
    s.adj.assign(m, Bits(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && g.adjacent(within[a], within[b])) s.adj[a].set(b);
    // greedy min-degree start
    {
        Bits p = full_bits(m);
        std::vector<int> greedy;
        while (p.any()) {
            int v = -1, deg = kInf;
            for (int u = p.first(); u >= 0; u = p.next(u)) {
                int d = s.adj[u].and_count(p);
                if (d < deg) deg = d, v = u;
            }
            greedy.push_back(v);
            p.reset(v);
            p.minus(s.adj[v]);
        }
        s.best = int(greedy.size());
        s.best_set = greedy;
    }
    s.run(full_bits(m));
    AlphaResult res;
    res.size = s.best;
    for (int a : s.best_set) res.witness.push_back(within[a]);
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

AlphaResult alpha(const ColoredMultigraph& g) { return alpha(g, all_vertices(g.n())); }

int tree_diameter(int n, const TreeEdges& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    auto far = [&](int s) {
        std::vector<int> d(n, -1);
        std::deque<int> q{s};
        d[s] = 0;
        std::pair<int, int> best{0, s};
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            best = std::max(best, {d[a], a});
            for (int b : adj[a])
                if (d[b] < 0) d[b] = d[a] + 1, q.push_back(b);
        }
        return best;
    };
    if (edges.empty()) return 0;
    int s = edges.front().first;
    return far(far(s).second).first;
}

SpanningTree min_diameter_tree(const ColoredMultigraph& g, const VertexSet& vs, int c) {
    const int m = int(vs.size());
    SpanningTree out;
    if (m == 0) return out;
    if (m == 1) {
        out.diameter = 0;
        return out;
    }
    std::vector<std::vector<int>> d(m);
    for (int a = 0; a < m; ++a) {
        d[a] = induced_distances(g, vs, c, a);
        for (int x : d[a])
            if (x == kInf) return out;
    }
    // best vertex centre: diameter bound 2*ecc; best edge centre: 2*h+1
    int bestBound = kInf, ca = -1, cb = -1;
    for (int a = 0; a < m; ++a) {
        int ecc = *std::max_element(d[a].begin(), d[a].end());
        if (2 * ecc < bestBound) bestBound = 2 * ecc, ca = a, cb = -1;
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (d[a][b] != 1) continue;
            int h = 0;
            for (int w = 0; w < m; ++w) h = std::max(h, std::min(d[a][w], d[b][w]));
            if (2 * h + 1 < bestBound) bestBound = 2 * h + 1, ca = a, cb = b;
        }
    std::vector<int> parent(m, -2);
    std::deque<int> q;
    parent[ca] = -1;
    q.push_back(ca);
    if (cb >= 0) {
        parent[cb] = ca;
        q.push_back(cb);
    }
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (int b = 0; b < m; ++b)
            if (parent[b] == -2 && g.has(vs[a], vs[b], c)) {
                parent[b] = a;
                q.push_back(b);
            }
    }
    for (int b = 0; b < m; ++b)
        if (parent[b] >= 0) out.edges.push_back({std::min(vs[b], vs[parent[b]]), std::max(vs[b], vs[parent[b]])});
    std::sort(out.edges.begin(), out.edges.end());
    out.diameter = tree_diameter(g.n(), out.edges);
    return out;
}

ColorMask CoverCertificate::used_colors() const {
    ColorMask m = 0;
    for (auto& p : pieces) m |= color_bit(p.color);
    return m;
}

VerifyReport verify(const ColoredMultigraph& g, const CoverCertificate& cert) {
    auto fail = [](std::string msg, int piece = -1, int vertex = -1) {
        VerifyReport r;
        r.ok = false;
        r.message = std::move(msg);
        r.piece = piece;
        r.vertex = vertex;
        return r;
    };
    if (cert.max_size >= 0 && int(cert.pieces.size()) > cert.max_size)
        return fail("size: " + std::to_string(cert.pieces.size()) + " pieces exceed limit " +
                    std::to_string(cert.max_size));
    std::vector<int> owner(g.n(), -1);
    for (int i = 0; i < int(cert.pieces.size()); ++i) {
        const auto& p = cert.pieces[i];
        const std::string tag = "piece " + std::to_string(i);
        if (p.color < 1 || p.color > g.r()) return fail(tag + ": color out of range", i);
        if (cert.allowed && !(cert.allowed & color_bit(p.color)))
            return fail(tag + ": color " + std::to_string(p.color) + " not allowed", i);
        if (p.vertices.empty()) return fail(tag + ": empty", i);
        for (std::size_t k = 0; k < p.vertices.size(); ++k) {
            int v = p.vertices[k];
            if (v < 0 || v >= g.n()) return fail(tag + ": vertex out of range", i, v);
            if (k && p.vertices[k - 1] >= v) return fail(tag + ": vertex list not strictly increasing", i, v);
        }
        if (!p.tree.empty() || p.vertices.size() == 1) {
            // tree given (or trivial): must be a spanning tree of the piece in its color
            if (p.tree.size() + 1 != p.vertices.size() && p.vertices.size() > 1)
                return fail(tag + ": tree has wrong edge count", i);
            std::vector<int> pos(g.n(), -1);
            for (std::size_t k = 0; k < p.vertices.size(); ++k) pos[p.vertices[k]] = int(k);
            std::vector<int> dsu(p.vertices.size());
            std::iota(dsu.begin(), dsu.end(), 0);
            std::function<int(int)> find = [&](int x) { return dsu[x] == x ? x : dsu[x] = find(dsu[x]); };
            for (auto [u, v] : p.tree) {
                if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || pos[u] < 0 || pos[v] < 0)
                    return fail(tag + ": tree edge leaves the piece", i);
                if (u == v || !g.has(u, v, p.color))
                    return fail(tag + ": tree edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " lacks color " + std::to_string(p.color),
                                i);
                int a = find(pos[u]), b = find(pos[v]);
                if (a == b) return fail(tag + ": tree has a cycle", i);
                dsu[a] = b;
            }
            if (cert.max_diam >= 0 && tree_diameter(g.n(), p.tree) > cert.max_diam)
                return fail(tag + ": diameter " + std::to_string(tree_diameter(g.n(), p.tree)) + " exceeds " +
                                std::to_string(cert.max_diam),
                            i);
        } else {
            int dm = diameter(g, p.vertices, p.color);
            if (dm == kInf) return fail(tag + ": not connected in color " + std::to_string(p.color), i);
            if (cert.max_diam >= 0 && dm > cert.max_diam)
                return fail(tag + ": diameter " + std::to_string(dm) + " exceeds " + std::to_string(cert.max_diam), i);
        }
        for (int v : p.vertices) {
            if (owner[v] >= 0 && cert.mode == CoverCertificate::Mode::Partition)
                return fail("partition: vertex " + std::to_string(v) + " in pieces " + std::to_string(owner[v]) +
                                " and " + std::to_string(i),
                            i, v);
            if (owner[v] < 0) owner[v] = i;
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (owner[v] < 0) return fail("vertex " + std::to_string(v) + " uncovered", -1, v);
    return {};
}

VertexSet all_vertices(int n) {
    VertexSet v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::string to_string(const VertexSet& vs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << '}';
    return os.str();
}

}  // namespace ryser
