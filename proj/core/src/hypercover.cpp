#include "ryserlab/hypercover.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "ryserlab/combinatorics.hpp"
#include "ryserlab/exact.hpp"

namespace ryser {

namespace {

int meet(const VertexSet& a, const VertexSet& b) {
    int k = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else ++k, ++i, ++j;
    }
    return k;
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

void check_params(const ColoredHypergraph& h, int c, int ell) {
    if (h.k < 2) throw std::invalid_argument("hypergraph must be k-uniform with k >= 2");
    if (c < 1 || c > h.k - 1) throw std::invalid_argument("c out of range 1..k-1");
    if (ell < 1 || ell > h.k - 1) throw std::invalid_argument("ell out of range 1..k-1");
    if (h.r < 1) throw std::invalid_argument("hypergraph must be edge-colored");
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Component of `comps` with the given color whose shadow contains c-set rank s (first match).
int find_component(const std::vector<CLComponent>& comps, int color, int s) {
    for (int i = 0; i < int(comps.size()); ++i)
        if (comps[i].color == color && comps[i].shadow.test(s)) return i;
    return -1;
}

std::vector<CLComponent> dedupe(const std::vector<CLComponent>& comps, const std::vector<int>& ids) {
    std::vector<int> u = ids;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    std::vector<CLComponent> out;
    for (int i : u) out.push_back(comps[i]);
    return out;
}

}  // namespace

ColoredHypergraph complete_hypergraph(int n, int k, int r, const std::vector<int>& colors) {
    ColoredHypergraph h;
    h.n = n;
    h.k = k;
    h.r = r;
    auto all = all_subsets(n, k);
    if (colors.size() != all.size()) throw std::invalid_argument("one color per edge required");
    h.edges.reserve(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) h.edges.push_back({colors[i], std::move(all[i])});
    return h;
}

ColoredHypergraph random_complete_coloring(int n, int k, int r, Rng& rng) {
    std::vector<int> colors(std::size_t(binom(n, k)));
    for (auto& c : colors) c = rng.uniform(1, r);
    return complete_hypergraph(n, k, r, colors);
}

bool is_complete_colex(const ColoredHypergraph& h) {
    if (h.k < 1 || std::int64_t(h.edges.size()) != binom(h.n, h.k)) return false;
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        if (rank_subset(h.edges[i].vertices) != std::int64_t(i)) return false;
    return true;
}

std::vector<CLComponent> cl_components(const ColoredHypergraph& h, int c, int ell) {
    check_params(h, c, ell);
    const int N = int(binom(h.n, c));
    std::vector<CLComponent> out;
    for (int col = 1; col <= h.r; ++col) {
        std::vector<int> es;
        for (int i = 0; i < int(h.edges.size()); ++i)
            if (h.edges[i].color == col) es.push_back(i);
        Dsu d(int(es.size()));
        for (int a = 0; a < int(es.size()); ++a)
            for (int b = 0; b < a; ++b)
                if (meet(h.edges[es[a]].vertices, h.edges[es[b]].vertices) >= ell) d.unite(a, b);
        std::vector<int> slot(es.size(), -1);
        for (int a = 0; a < int(es.size()); ++a) {
            int root = d.find(a);
            if (slot[root] < 0) {
                slot[root] = int(out.size());
                out.push_back({col, {}, Bits(N)});
            }
            auto& comp = out[slot[root]];
            comp.core.push_back(es[a]);
            for (auto& s : subsets_of(h.edges[es[a]].vertices, c)) comp.shadow.set(int(rank_subset(s)));
        }
    }
    return out;
}

bool ell_connected(const ColoredHypergraph& h, int color, int ell, const VertexSet& a, const VertexSet& b) {
    const int m = int(h.edges.size());
    auto contains = [](const VertexSet& e, const VertexSet& s) { return std::includes(e.begin(), e.end(), s.begin(), s.end()); };
    std::vector<int> seen(m, 0);
    std::deque<int> q;
    for (int i = 0; i < m; ++i)
        if (h.edges[i].color == color && contains(h.edges[i].vertices, a)) seen[i] = 1, q.push_back(i);
    while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        if (contains(h.edges[i].vertices, b)) return true;
        for (int j = 0; j < m; ++j)
            if (!seen[j] && h.edges[j].color == color && meet(h.edges[i].vertices, h.edges[j].vertices) >= ell)
                seen[j] = 1, q.push_back(j);
    }
    return false;
}

ClVerdict verify_cl_cover(const ColoredHypergraph& h, int c, int ell, const std::vector<CLComponent>& pieces) {
    ClVerdict v;
    auto comps = cl_components(h, c, ell);
    const int N = int(binom(h.n, c));
    Bits covered(N);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& p = pieces[i];
        auto core = p.core;
        std::sort(core.begin(), core.end());
        bool genuine = false;
        for (auto& q : comps) {
            if (q.color != p.color || !(q.shadow == p.shadow)) continue;
            auto qc = q.core;
            std::sort(qc.begin(), qc.end());
            if (qc == core) genuine = true;
        }
        if (!genuine) {
            v.ok = false;
            v.message = "piece " + std::to_string(i) + " is not a monochromatic component";
            return v;
        }
        covered |= p.shadow;
    }
    for (int s = 0; s < N; ++s)
        if (!covered.test(s)) {
            v.ok = false;
            v.message = "c-set " + to_string(unrank_subset(s, c)) + " uncovered";
            return v;
        }
    return v;
}

std::vector<CLComponent> kiraly_cover(const ColoredHypergraph& h) {
    if (h.k < 3) throw std::invalid_argument("Kiraly cover needs k >= 3");
    if (!is_complete_colex(h)) throw std::invalid_argument("Kiraly cover needs a complete hypergraph");
    if (h.n < h.k) throw std::invalid_argument("need n >= k");
    const int n = h.n, k = h.k;
    auto original = cl_components(h, 1, 1);
    ColoredHypergraph cur = h;
    auto km1 = all_subsets(n, k - 1);
    for (int R = h.r; R >= 1; --R) {
        const int bound = ceil_div(R, k);
        // colors seen by each (k-1)-set
        std::vector<ColorMask> seen(km1.size(), 0);
        for (std::size_t i = 0; i < km1.size(); ++i)
            for (int v = 0; v < n; ++v) {
                if (std::binary_search(km1[i].begin(), km1[i].end(), v)) continue;
                VertexSet e = km1[i];
                e.insert(std::upper_bound(e.begin(), e.end(), v), v);
                seen[i] |= color_bit(cur.edges[std::size_t(rank_subset(e))].color);
            }
        for (std::size_t i = 0; i < km1.size(); ++i) {
            if (std::popcount(seen[i]) > bound) continue;
            // star components of S in the current coloring
            auto comps = cl_components(cur, 1, 1);
            std::vector<int> ids;
            for (int col = 1; col <= R; ++col) {
                if (!(seen[i] & color_bit(col))) continue;
                int ci = find_component(comps, col, km1[i][0]);
                int oi = -1;
                for (int j = 0; j < int(original.size()); ++j)
                    if (original[j].color == col && original[j].shadow == comps[ci].shadow) oi = j;
                if (oi < 0) throw std::logic_error("recolored component does not match an original component");
                ids.push_back(oi);
            }
            return dedupe(original, ids);
        }
        // every (k-1)-set sees more than `bound` colors: absorb color R into a lower color
        for (auto& e : cur.edges) {
            if (e.color != R) continue;
            auto subs = subsets_of(e.vertices, k - 1);
            int target = -1;
            for (int col = 1; col < R && target < 0; ++col) {
                int hits = 0;
                for (auto& s : subs)
                    if (seen[std::size_t(rank_subset(s))] & color_bit(col)) ++hits;
                if (hits >= 2) target = col;
            }
            if (target < 0) throw std::logic_error("no absorbing color for a top-color edge");
            e.color = target;
        }
    }
    throw std::logic_error("Kiraly recursion ended without a cover");
}

std::vector<CLComponent> cover_product(const ColoredHypergraph& h, int c, int ell) {
    check_params(h, c, ell);
    if (!(ell <= c && 2 * c <= h.k)) throw std::invalid_argument("product reduction needs ell <= c <= k/2");
    if (!is_complete_colex(h)) throw std::invalid_argument("product reduction needs a complete hypergraph");
    const int n = h.n, k = h.k, t = k / c;
    const int N = int(binom(n, c));
    auto comps = cl_components(h, c, ell);
    // colors of the edges of h containing a vertex set u
    auto colors_over = [&](const VertexSet& u) {
        ColorMask m = 0;
        VertexSet rest;
        for (int v = 0; v < n; ++v)
            if (!std::binary_search(u.begin(), u.end(), v)) rest.push_back(v);
        for (auto& add : subsets_of(rest, k - int(u.size()))) {
            VertexSet e = u;
            e.insert(e.end(), add.begin(), add.end());
            std::sort(e.begin(), e.end());
            m |= color_bit(h.edges[std::size_t(rank_subset(e))].color);
        }
        return m;
    };
    auto union_of = [&](const std::vector<int>& nodes) {
        VertexSet u;
        for (int s : nodes) {
            auto cs = unrank_subset(s, c);
            u.insert(u.end(), cs.begin(), cs.end());
        }
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        return u;
    };
    std::vector<int> ids;
    auto pull_back = [&](int color, int node) {
        int ci = find_component(comps, color, node);
        if (ci < 0)
            for (int col = 1; col <= h.r && ci < 0; ++col) ci = find_component(comps, col, node);
        ids.push_back(ci);
    };
    if (t >= 3) {
        auto tuples = all_subsets(N, t);
        std::vector<int> colors(tuples.size());
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            ColorMask m = colors_over(union_of(tuples[i]));
            colors[i] = std::countr_zero(m) + 1;
        }
        auto aux = complete_hypergraph(N, t, h.r, colors);
        for (auto& p : kiraly_cover(aux)) pull_back(p.color, p.shadow.first());
    } else {
        ColoredMultigraph aux(N, h.r);
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b) aux.set_colors(a, b, colors_over(union_of({a, b})));
        auto res = tc_exact(aux);
        if (res.status != Status::Optimal) throw std::runtime_error("auxiliary cover search did not finish");
        for (auto& p : res.cert.pieces) pull_back(p.color, p.vertices.front());
    }
    return dedupe(comps, ids);
}

std::vector<CLComponent> cover_midrange(const ColoredHypergraph& h, int c, int ell) {
    check_params(h, c, ell);
    const int r = h.r, k = h.k;
    if (!(c >= ell && 2 * c > k && r * c <= r * k - (r - 1) * ell))
        throw std::invalid_argument("midrange cover needs c >= ell and k/2 < c <= k-(1-1/r)ell");
    const int N = int(binom(h.n, c));
    auto comps = cl_components(h, c, ell);
    ColoredMultigraph closed(N, r);
    for (auto& comp : comps) {
        auto mem = comp.shadow.members();
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j) closed.add_edge(mem[i], mem[j], comp.color);
    }
    std::vector<int> ids;
    auto locate = [&](int color, int node) {
        int ci = find_component(comps, color, node);
        if (ci < 0)
            for (int col = 1; col <= r && ci < 0; ++col) ci = find_component(comps, col, node);
        ids.push_back(ci);
    };
    if (r == 2) {
        for (auto& p : konig_cover(closed, 1, 2)) locate(p.color, p.vertices.front());
        return dedupe(comps, ids);
    }
    // maximal independent set, lowest index first
    std::vector<int> indep;
    std::vector<char> blocked(N, 0);
    for (int v = 0; v < N; ++v) {
        if (blocked[v]) continue;
        indep.push_back(v);
        for (int u = 0; u < N; ++u)
            if (u == v || closed.adjacent(u, v)) blocked[u] = 1;
    }
    for (int x : indep)
        for (int col = 1; col <= r; ++col) {
            int ci = find_component(comps, col, x);
            if (ci >= 0) ids.push_back(ci);
        }
    auto out = dedupe(comps, ids);
    // a smaller exact cover replaces the constructive one when the search finishes quickly
    std::vector<Bits> sets;
    for (auto& comp : comps) sets.push_back(comp.shadow);
    SolveBudget b;
    b.max_nodes = 200000;
    auto sc = solve_set_cover(N, sets, b);
    if (sc.status == Status::Optimal && sc.size < int(out.size())) return dedupe(comps, sc.chosen);
    return out;
}

std::optional<CLComponent> tight_spanning(const ColoredHypergraph& h) {
    if (h.k != 3) throw std::invalid_argument("tight spanning search needs a 3-uniform hypergraph");
    for (auto& comp : cl_components(h, 1, 2))
        if (comp.shadow.count() == h.n) return comp;
    return std::nullopt;
}

int hyper_lower_bound(const LowerParams& p) {
    if (p.variant == LowerVariant::KC) return ceil_div(p.r, p.k / p.c);
    return p.n / p.c;
}

ColoredHypergraph hyper_lower_coloring(const LowerParams& p) {
    const int r = p.r, c = p.c, ell = p.ell, k = p.k, n = p.n;
    if (r < 2 || k < 3 || c < 1 || ell < 1 || c > k - 1 || ell > k - 1 || n < k)
        throw std::invalid_argument("need r >= 2, n >= k >= 3, 1 <= c,ell <= k-1");
    const auto edges = all_subsets(n, k);
    std::vector<int> colors(edges.size(), 0);
    if (p.variant == LowerVariant::KC) {
        const int t = k / c;
        const int q = ceil_div(r, t) - 1;
        const int m = int(binom(r, q));
        if (n < c * m) throw std::invalid_argument("KC coloring needs n >= c*C(r, ceil(r/floor(k/c))-1)");
        VertexSet colorsR(r);
        std::iota(colorsR.begin(), colorsR.end(), 1);
        auto labels = subsets_of(colorsR, q);
        std::vector<int> block(n);
        for (int v = 0, b = 0, used = 0; v < n; ++v) {
            int size = n / m + (b < n % m ? 1 : 0);
            block[v] = b;
            if (++used == size) ++b, used = 0;
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            std::vector<int> hit(m, 0);
            for (int v : edges[i]) ++hit[block[v]];
            ColorMask phi = 0;
            for (int b = 0; b < m; ++b)
                if (hit[b] >= c)
                    for (int x : labels[b]) phi |= color_bit(x);
            int col = 1;
            while (phi & color_bit(col)) ++col;
            colors[i] = col;
        }
    } else {
        if (!(2 * c > k && r * c > r * k - (r - 1) * ell))
            throw std::invalid_argument("NC coloring needs c > max{k-(1-1/r)ell, k/2}");
        const int t = n / c;
        std::vector<VertexSet> x(t);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < c; ++j) x[i].push_back(i * c + j);
        for (auto& y : all_subsets(n, ell)) {
            int slot = 0;
            for (int i = 0; i < t; ++i) {
                VertexSet u;
                std::set_union(y.begin(), y.end(), x[i].begin(), x[i].end(), std::back_inserter(u));
                if (int(u.size()) > k) continue;
                ++slot;
                if (slot > r - 1) throw std::logic_error("|I_y| exceeds r-1");
                VertexSet rest;
                for (int v = 0; v < n; ++v)
                    if (!std::binary_search(u.begin(), u.end(), v)) rest.push_back(v);
                for (auto& add : subsets_of(rest, k - int(u.size()))) {
                    VertexSet e = u;
                    e.insert(e.end(), add.begin(), add.end());
                    std::sort(e.begin(), e.end());
                    auto& col = colors[std::size_t(rank_subset(e))];
                    if (col == 0) col = slot;
                }
            }
        }
        for (auto& col : colors)
            if (col == 0) col = r;
    }
    return complete_hypergraph(n, k, r, colors);
}

McCl mc_cl(const ColoredHypergraph& h, int c, int ell) {
    McCl best;
    for (auto& comp : cl_components(h, c, ell)) {
        int s = comp.shadow.count();
        if (s > best.size) {
            best.size = s;
            best.color = comp.color;
            best.shadow.clear();
            for (int x : comp.shadow.members()) best.shadow.push_back(unrank_subset(x, c));
        }
    }
    return best;
}

}  // namespace ryser
