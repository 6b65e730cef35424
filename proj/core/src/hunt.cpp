// Exhaustive search for closed r-colorings with tc_r above a bound.
//
// A closed r-coloring on n vertices is an r-tuple of set partitions of [n]: the blocks of
// partition i are the color-i components (cliques). Colorings are enumerated up to color
// permutation (nondecreasing tuples of partition indices) and vertex permutation (the tuple
// must be lexicographically minimal over all vertex relabelings).
//
// Filters discard colorings that cannot be a smallest counterexample. Vertex counts are
// visited in increasing order, so arguments that shrink the graph stay valid.
//   (ii) some color class has at most B components: that class is already a cover.
//   (v)  an edge carries all r colors: contracting it keeps tc and does not raise alpha.
//   (iv) some vertex misses a color: removing its components costs at most r-1 pieces;
//        used on K_n when B >= r-1, and for B = m*alpha when m >= r-1.
//   (vi) on K_n with B >= r-1: r-t components of distinct colors meet in at most t! vertices.

#include <algorithm>
#include <numeric>

#include "ryserlab/exact.hpp"

namespace ryser {

namespace {

using Rgs = std::vector<int>;

void set_partitions(int n, Rgs& cur, int i, int mx, std::vector<Rgs>& out) {
    if (i == n) {
        out.push_back(cur);
        return;
    }
    for (int b = 0; b <= mx + 1; ++b) {
        cur[i] = b;
        set_partitions(n, cur, i + 1, std::max(mx, b), out);
    }
}

Rgs normalize(const Rgs& labels) {
    Rgs out(labels.size());
    std::vector<int> map(labels.size() + 1, -1);
    int next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int& m = map[labels[i]];
        if (m < 0) m = next++;
        out[i] = m;
    }
    return out;
}

int factorial(int t) { return t <= 1 ? 1 : t * factorial(t - 1); }

struct Space {
    int n;
    std::vector<Rgs> parts;
    std::vector<std::vector<int>> permuted;  // permuted[p][k]: index of partition p under perm k
    std::vector<std::vector<int>> blocks;    // blocks[p]: number of blocks
    std::vector<unsigned> pairs;             // pairs[p]: bitmask of vertex pairs in a common block

    explicit Space(int n_) : n(n_) {
        Rgs cur(n);
        set_partitions(n, cur, 0, -1, parts);
        std::sort(parts.begin(), parts.end());
        std::vector<std::vector<int>> perms;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
        permuted.assign(parts.size(), std::vector<int>(perms.size()));
        for (std::size_t p = 0; p < parts.size(); ++p)
            for (std::size_t k = 0; k < perms.size(); ++k) {
                Rgs img(n);
                for (int v = 0; v < n; ++v) img[perms[k][v]] = parts[p][v];
                auto it = std::lower_bound(parts.begin(), parts.end(), normalize(img));
                permuted[p][k] = int(it - parts.begin());
            }
        pairs.assign(parts.size(), 0);
        for (std::size_t p = 0; p < parts.size(); ++p) {
            int e = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++e)
                    if (parts[p][u] == parts[p][v]) pairs[p] |= 1u << e;
        }
    }

    bool canonical(const std::vector<int>& tuple) const {
        const std::size_t np = permuted.empty() ? 0 : permuted[0].size();
        std::vector<int> img(tuple.size());
        for (std::size_t k = 1; k < np; ++k) {
            for (std::size_t i = 0; i < tuple.size(); ++i) img[i] = permuted[tuple[i]][k];
            std::sort(img.begin(), img.end());
            if (img < tuple) return false;
        }
        return true;
    }

    ColoredMultigraph graph(const std::vector<int>& tuple, int r) const {
        ColoredMultigraph g(n, r);
        for (int i = 0; i < int(tuple.size()); ++i)
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (parts[tuple[i]][u] == parts[tuple[i]][v]) g.add_edge(u, v, i + 1);
        return g;
    }
};

struct Hunter {
    const HuntOptions& opt;
    BudgetClock clock;
    HuntResult res;

    explicit Hunter(const HuntOptions& o) : opt(o), clock(o.budget) {}

    int bound_for(int alphaValue) const { return opt.alpha_factor > 0 ? opt.alpha_factor * alphaValue : opt.bound; }

    bool filtered(const Space& sp, const std::vector<int>& tuple, const ColoredMultigraph& g, int B) const {
        const int r = opt.r, n = sp.n;
        // (ii)
        for (int p : tuple) {
            int nb = *std::max_element(sp.parts[p].begin(), sp.parts[p].end()) + 1;
            if (nb <= B) return true;
        }
        // (v): an edge in a common block of every color
        if (n >= 2) {
            unsigned all = ~0u;
            for (int p : tuple) all &= sp.pairs[p];
            if (n * (n - 1) / 2 < 32) all &= (1u << (n * (n - 1) / 2)) - 1;
            if (all) return true;
        }
        const bool ivOk = opt.complete_only ? B >= r - 1 : (opt.alpha_factor >= r - 1);
        if (ivOk) {
            for (int v = 0; v < n; ++v)
                for (int c = 1; c <= r; ++c) {
                    bool sees = false;
                    for (int u = 0; u < n && !sees; ++u)
                        if (u != v && g.has(u, v, c)) sees = true;
                    if (!sees) return true;
                }
        }
        if (opt.complete_only && B >= r - 1) {
            // (vi) for t = 1..r-1: r-t components of distinct colors meet in at most t! vertices
            for (int t = 1; t <= r - 1; ++t) {
                const int lim = factorial(t);
                std::vector<int> pick(r, 0);
                std::fill(pick.end() - (r - t), pick.end(), 1);
                do {
                    std::vector<int> colors;
                    for (int i = 0; i < r; ++i)
                        if (pick[i]) colors.push_back(i);
                    // vertices grouped by their block in each chosen color
                    std::vector<std::vector<int>> keys(n);
                    for (int v = 0; v < n; ++v)
                        for (int i : colors) keys[v].push_back(sp.parts[tuple[i]][v]);
                    std::sort(keys.begin(), keys.end());
                    int run = 1;
                    for (int v = 1; v < n; ++v) {
                        run = keys[v] == keys[v - 1] ? run + 1 : 1;
                        if (run > lim) return true;
                    }
                } while (std::next_permutation(pick.begin(), pick.end()));
            }
        }
        return false;
    }

    bool complete(const Space& sp, const std::vector<int>& tuple) const {
        unsigned cov = 0;
        for (int p : tuple) cov |= sp.pairs[p];
        int m = sp.n * (sp.n - 1) / 2;
        unsigned full = m >= 32 ? ~0u : (1u << m) - 1;
        return cov == full;
    }

    // returns true to stop (counterexample found or budget exhausted)
    bool visit(const Space& sp, std::vector<int>& tuple) {
        if (!clock.tick()) return true;
        if (opt.complete_only && !complete(sp, tuple)) return false;
        if (!sp.canonical(tuple)) return false;
        ++res.colorings;
        auto g = sp.graph(tuple, opt.r);
        int a = opt.complete_only ? 1 : alpha(g).size;
        int B = bound_for(a);
        if (opt.use_filters && filtered(sp, tuple, g, B)) {
            ++res.filtered;
            return false;
        }
        auto tc = tc_exact(g);
        if (tc.size > B) {
            res.counterexample = g;
            res.counterexample_tc = tc.size;
            return true;
        }
        return false;
    }

    bool rec(const Space& sp, std::vector<int>& tuple, int i, int from) {
        if (i == opt.r) return visit(sp, tuple);
        for (int p = from; p < int(sp.parts.size()); ++p) {
            tuple[i] = p;
            if (rec(sp, tuple, i + 1, p)) return true;
        }
        return false;
    }
};

}  // namespace

HuntResult hunt(const HuntOptions& opt) {
    if (opt.n < 1 || opt.n > 7) throw std::invalid_argument("hunt supports 1 <= n <= 7");
    if (opt.r < 1 || opt.r > 8) throw std::invalid_argument("hunt supports 1 <= r <= 8");
    if (opt.alpha_factor <= 0 && opt.bound < 0) throw std::invalid_argument("hunt needs a bound");
    Hunter h(opt);
    for (int n = 1; n <= opt.n; ++n) {
        Space sp(n);
        std::vector<int> tuple(opt.r);
        if (h.rec(sp, tuple, 0, 0)) break;
    }
    h.res.nodes = h.clock.nodes();
    h.res.status = h.clock.exhausted() && !h.res.counterexample ? Status::Inconclusive : Status::Optimal;
    return std::move(h.res);
}

}  // namespace ryser
