#include "ryserlab/duality.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ryserlab/exact.hpp"

namespace ryser {

void ColoredHypergraph::set_parts(const std::vector<VertexSet>& classes) {
    part_of.assign(n, -1);
    num_parts = int(classes.size());
    for (int i = 0; i < num_parts; ++i)
        for (int v : classes[i]) {
            if (v < 0 || v >= n) throw std::invalid_argument("part vertex out of range");
            if (part_of[v] >= 0) throw std::invalid_argument("vertex " + std::to_string(v) + " in two parts");
            part_of[v] = i;
        }
    for (int v = 0; v < n; ++v)
        if (part_of[v] < 0) throw std::invalid_argument("vertex " + std::to_string(v) + " in no part");
}

std::vector<VertexSet> ColoredHypergraph::parts() const {
    std::vector<VertexSet> out(num_parts);
    for (int v = 0; v < int(part_of.size()); ++v) out[part_of[v]].push_back(v);
    return out;
}

void ColoredHypergraph::add_edge(VertexSet vs, int color) {
    std::sort(vs.begin(), vs.end());
    edges.push_back({color, std::move(vs)});
}

void ColoredHypergraph::validate() const {
    if (has_parts() && int(part_of.size()) != n) throw std::invalid_argument("part map has wrong length");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const std::string tag = "edge " + std::to_string(i);
        if (e.vertices.empty()) throw std::invalid_argument(tag + " is empty");
        if (k > 0 && int(e.vertices.size()) != k) throw std::invalid_argument(tag + " has wrong size");
        for (std::size_t j = 0; j < e.vertices.size(); ++j) {
            int v = e.vertices[j];
            if (v < 0 || v >= n) throw std::invalid_argument(tag + ": vertex out of range");
            if (j && e.vertices[j - 1] >= v) throw std::invalid_argument(tag + ": repeated vertex");
        }
        if (r > 0 && (e.color < 1 || e.color > r)) throw std::invalid_argument(tag + ": color out of range");
        if (r == 0 && e.color != 0) throw std::invalid_argument(tag + ": colored edge in uncolored hypergraph");
        if (has_parts()) {
            std::vector<int> seen(num_parts, 0);
            for (int v : e.vertices)
                if (seen[part_of[v]]++) throw std::invalid_argument(tag + " meets a part twice");
        }
    }
}

DualHypergraph graph_to_hypergraph(const ColoredMultigraph& g) {
    DualHypergraph d;
    std::vector<std::vector<int>> through(g.n());
    for (int c = 1; c <= g.r(); ++c)
        for (auto& p : components(g, c).parts) {
            if (p.size() < 2) continue;
            int id = int(d.components.size());
            d.components.push_back({c, p});
            for (int v : p) through[v].push_back(id);
        }
    // families are sorted since ids grow
    std::vector<std::vector<int>> fams;
    for (auto& f : through)
        if (!f.empty() && std::find(fams.begin(), fams.end(), f) == fams.end()) fams.push_back(f);
    auto strict_subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    std::vector<std::vector<int>> maximal;
    for (auto& f : fams) {
        bool dominated = false;
        for (auto& o : fams)
            if (strict_subset(f, o)) dominated = true;
        if (!dominated) maximal.push_back(f);
    }
    d.h.n = int(d.components.size());
    d.h.k = 0;
    d.h.r = 0;
    std::vector<VertexSet> classes(g.r());
    for (int i = 0; i < d.h.n; ++i) classes[d.components[i].first - 1].push_back(i);
    d.h.set_parts(classes);
    for (auto& f : maximal) d.h.add_edge(f);
    d.edge_of_vertex.assign(g.n(), -1);
    for (int v = 0; v < g.n(); ++v) {
        if (through[v].empty()) continue;
        for (int e = 0; e < int(maximal.size()); ++e)
            if (std::includes(maximal[e].begin(), maximal[e].end(), through[v].begin(), through[v].end())) {
                d.edge_of_vertex[v] = e;
                break;
            }
    }
    return d;
}

ColoredMultigraph hypergraph_to_graph(const ColoredHypergraph& h) {
    if (!h.has_parts()) throw std::invalid_argument("hypergraph has no declared partition");
    for (auto& e : h.edges)
        if (e.color != 0) throw std::invalid_argument("hypergraph must be uncolored");
    h.validate();
    const int m = int(h.edges.size());
    ColoredMultigraph g(m, h.num_parts);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            ColorMask mask = 0;
            const auto& x = h.edges[a].vertices;
            const auto& y = h.edges[b].vertices;
            std::size_t i = 0, j = 0;
            while (i < x.size() && j < y.size()) {
                if (x[i] < y[j]) ++i;
                else if (y[j] < x[i]) ++j;
                else {
                    mask |= color_bit(h.part_of[x[i]] + 1);
                    ++i, ++j;
                }
            }
            if (mask) g.set_colors(a, b, mask);
        }
    return g;
}

DualityReport check_duality(const ColoredHypergraph& h, const ColoredMultigraph& g) {
    DualityReport rep;
    auto tn = tau_nu(h);
    rep.nu = tn.nu;
    rep.tau = tn.tau;
    rep.alpha = alpha(g).size;
    auto tc = tc_exact(g);
    rep.tc = tc.size;
    if (rep.nu != rep.alpha) {
        rep.ok = false;
        rep.message += "nu=" + std::to_string(rep.nu) + " but alpha=" + std::to_string(rep.alpha) + "; ";
    }
    if (tc.status != Status::Optimal || rep.tau != rep.tc) {
        rep.ok = false;
        rep.message += "tau=" + std::to_string(rep.tau) + " but tc=" + std::to_string(rep.tc) + "; ";
    }
    return rep;
}

std::vector<CoverCertificate::Piece> konig_cover(const ColoredMultigraph& g, int a, int b) {
    auto ca = components(g, a).parts;
    auto cb = components(g, b).parts;
    std::vector<int> ia(g.n()), ib(g.n());
    for (int i = 0; i < int(ca.size()); ++i)
        for (int v : ca[i]) ia[v] = i;
    for (int j = 0; j < int(cb.size()); ++j)
        for (int v : cb[j]) ib[v] = j;
    const int L = int(ca.size()), R = int(cb.size());
    std::vector<std::vector<int>> adj(L);
    for (int v = 0; v < g.n(); ++v) adj[ia[v]].push_back(ib[v]);
    for (auto& x : adj) {
        std::sort(x.begin(), x.end());
        x.erase(std::unique(x.begin(), x.end()), x.end());
    }
    std::vector<int> matchL(L, -1), matchR(R, -1);
    std::vector<int> seen;
    std::function<bool(int)> augment = [&](int u) {
        for (int w : adj[u]) {
            if (seen[w]) continue;
            seen[w] = 1;
            if (matchR[w] < 0 || augment(matchR[w])) {
                matchL[u] = w;
                matchR[w] = u;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < L; ++u) {
        seen.assign(R, 0);
        augment(u);
    }
    // alternating reachability from unmatched left vertices
    std::vector<int> zl(L, 0), zr(R, 0);
    std::vector<int> stack;
    for (int u = 0; u < L; ++u)
        if (matchL[u] < 0) zl[u] = 1, stack.push_back(u);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!zr[w] && matchL[u] != w) {
                zr[w] = 1;
                int u2 = matchR[w];
                if (u2 >= 0 && !zl[u2]) zl[u2] = 1, stack.push_back(u2);
            }
    }
    std::vector<CoverCertificate::Piece> out;
    for (int u = 0; u < L; ++u)
        if (!zl[u]) out.push_back({a, ca[u], {}});
    for (int w = 0; w < R; ++w)
        if (zr[w]) out.push_back({b, cb[w], {}});
    return out;
}

}  // namespace ryser
