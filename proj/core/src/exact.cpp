#include "ryserlab/exact.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "ryserlab/combinatorics.hpp"
#include "ryserlab/hypercover.hpp"

namespace ryser {

const char* to_string(Status s) {
    switch (s) {
        case Status::Optimal: return "optimal";
        case Status::Infeasible: return "infeasible";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

BudgetClock::BudgetClock(const SolveBudget& b) : b_(b), start_(std::chrono::steady_clock::now()) {}

bool BudgetClock::tick() {
    if (stop_.load(std::memory_order_relaxed)) return false;
    long long k = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (b_.max_nodes >= 0 && k > b_.max_nodes) {
        stop_ = true;
        return false;
    }
    if (b_.max_seconds >= 0 && (k & 1023) == 0) {
        double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (el > b_.max_seconds) {
            stop_ = true;
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- set cover

namespace {

struct CoverSearch {
    const std::vector<Bits>& sets;
    const std::vector<std::vector<int>>& containing;
    const std::vector<Bits>& reach;
    const std::vector<int>& order;  // elements by ascending reach, for the packing bound
    int maxSet;
    BudgetClock& clock;
    std::atomic<int>& shared;

    int best;
    std::vector<int> bestSol, cur;
    bool aborted = false;

    int lower_bound(const Bits& u) const {
        Bits freeB = u;
        int pack = 0;
        for (int e : order)
            if (freeB.test(e)) {
                ++pack;
                freeB.minus(reach[e]);
            }
        int cnt = u.count();
        return std::max(pack, (cnt + maxSet - 1) / maxSet);
    }

    void dfs(const Bits& u) {
        if (!clock.tick()) {
            aborted = true;
            return;
        }
        const int depth = int(cur.size());
        if (u.none()) {
            if (depth < best) {
                best = depth;
                bestSol = cur;
                int s = shared.load();
                while (depth < s && !shared.compare_exchange_weak(s, depth)) {}
            }
            return;
        }
        int lb = lower_bound(u);
        if (depth + lb >= best || depth + lb > shared.load()) return;
        int e = -1;
        std::size_t fewest = SIZE_MAX;
        for (int x = u.first(); x >= 0; x = u.next(x))
            if (containing[x].size() < fewest) fewest = containing[x].size(), e = x;
        std::vector<std::pair<int, int>> cand;
        for (int s : containing[e]) cand.push_back({-sets[s].and_count(u), s});
        std::sort(cand.begin(), cand.end());
        for (auto [negGain, s] : cand) {
            Bits nu = u;
            nu.minus(sets[s]);
            cur.push_back(s);
            dfs(nu);
            cur.pop_back();
            if (aborted) return;
        }
    }
};

}  // namespace

SetCoverResult solve_set_cover(int universe, const std::vector<Bits>& input, const SolveBudget& budget) {
    SetCoverResult res;
    if (universe == 0) {
        res.status = Status::Optimal;
        res.size = 0;
        return res;
    }
    // drop duplicate and dominated sets, keeping the lowest index
    std::vector<int> keep;
    {
        std::vector<int> idx(input.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return input[a].count() > input[b].count(); });
        std::vector<int> kept;
        for (int i : idx) {
            if (input[i].none()) continue;
            bool dom = false;
            for (int j : kept)
                if (input[i].subset_of(input[j])) {
                    dom = true;
                    break;
                }
            if (!dom) kept.push_back(i);
        }
        std::sort(kept.begin(), kept.end());
        keep = kept;
    }
    std::vector<Bits> sets;
    for (int i : keep) sets.push_back(input[i]);
    std::vector<std::vector<int>> containing(universe);
    for (int s = 0; s < int(sets.size()); ++s)
        for (int e = sets[s].first(); e >= 0; e = sets[s].next(e)) containing[e].push_back(s);
    for (int e = 0; e < universe; ++e)
        if (containing[e].empty()) {
            res.status = Status::Infeasible;
            res.uncoverable = e;
            return res;
        }
    std::vector<Bits> reach(universe, Bits(universe));
    for (int e = 0; e < universe; ++e)
        for (int s : containing[e]) reach[e] |= sets[s];
    std::vector<int> order(universe);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return reach[a].count() < reach[b].count(); });
    int maxSet = 1;
    for (auto& s : sets) maxSet = std::max(maxSet, s.count());

    // greedy upper bound
    std::vector<int> greedy;
    {
        Bits u = full_bits(universe);
        while (u.any()) {
            int bestS = -1, gain = 0;
            for (int s = 0; s < int(sets.size()); ++s) {
                int g = sets[s].and_count(u);
                if (g > gain) gain = g, bestS = s;
            }
            greedy.push_back(bestS);
            u.minus(sets[bestS]);
        }
    }
    BudgetClock clock(budget);
    std::atomic<int> shared{int(greedy.size())};
    const Bits all = full_bits(universe);

    // root lower bound
    CoverSearch probe{sets, containing, reach, order, maxSet, clock, shared, int(greedy.size()), {}, {}, false};
    res.lower = probe.lower_bound(all);

    std::vector<int> bestSol = greedy;
    int best = int(greedy.size());
    bool aborted = false;
    if (res.lower < best) {
        // split on the root branching element; children searched independently so that the
        // reported witness does not depend on scheduling
        int e = -1;
        std::size_t fewest = SIZE_MAX;
        for (int x = 0; x < universe; ++x)
            if (containing[x].size() < fewest) fewest = containing[x].size(), e = x;
        std::vector<std::pair<int, int>> cand;
        for (int s : containing[e]) cand.push_back({-sets[s].count(), s});
        std::sort(cand.begin(), cand.end());
        struct ChildOut {
            int best = INT32_MAX;
            std::vector<int> sol;
            bool aborted = false;
        };
        std::vector<ChildOut> outs(cand.size());
        auto run_child = [&](std::size_t i) {
            CoverSearch cs{sets, containing, reach, order, maxSet, clock, shared, int(greedy.size()), {}, {}, false};
            Bits u = all;
            u.minus(sets[cand[i].second]);
            cs.cur.push_back(cand[i].second);
            cs.dfs(u);
            outs[i].aborted = cs.aborted;
            if (!cs.bestSol.empty()) {
                outs[i].best = cs.best;
                outs[i].sol = cs.bestSol;
            }
        };
        int threads = std::max(1, budget.threads);
        if (threads == 1 || cand.size() < 2) {
            for (std::size_t i = 0; i < cand.size(); ++i) run_child(i);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i; (i = next.fetch_add(1)) < cand.size();) run_child(i);
                });
            for (auto& th : pool) th.join();
        }
        for (auto& o : outs) {
            aborted = aborted || o.aborted;
            if (o.best < best) best = o.best, bestSol = o.sol;
        }
    }
    res.nodes = clock.nodes();
    res.size = best;
    std::vector<int> chosen;
    for (int s : bestSol) chosen.push_back(keep[s]);
    std::sort(chosen.begin(), chosen.end());
    res.chosen = chosen;
    if (aborted) {
        res.status = Status::Inconclusive;
    } else {
        res.status = Status::Optimal;
        res.lower = best;
    }
    return res;
}

// ---------------------------------------------------------------- tc

namespace {

// Maximal subsets of `comp` (connected in color c) with induced diameter <= D.
std::vector<VertexSet> bounded_pieces(const ColoredMultigraph& g, const VertexSet& comp, int c, int D) {
    const int k = int(comp.size());
    if (k > 24) throw std::runtime_error("component of " + std::to_string(k) + " vertices too large for diameter-bounded enumeration");
    std::vector<std::uint32_t> adj(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b && g.has(comp[a], comp[b], c)) adj[a] |= 1u << b;
    auto diam_ok = [&](std::uint32_t s) {
        for (std::uint32_t t = s; t; t &= t - 1) {
            int src = std::countr_zero(t);
            std::uint32_t seen = 1u << src, front = seen;
            int d = 0;
            while (seen != s) {
                std::uint32_t nxt = 0;
                for (std::uint32_t f = front; f; f &= f - 1) nxt |= adj[std::countr_zero(f)];
                nxt &= s & ~seen;
                if (!nxt) return false;
                seen |= nxt;
                front = nxt;
                if (++d > D) return false;
            }
        }
        return true;
    };
    std::vector<std::uint32_t> good;
    std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t s, std::uint32_t nb, std::uint32_t excl) {
        if (diam_ok(s)) good.push_back(s);
        std::uint32_t cand = nb & ~s & ~excl;
        for (std::uint32_t t = cand; t; t &= t - 1) {
            int u = std::countr_zero(t);
            rec(s | (1u << u), nb | adj[u], excl);
            excl |= 1u << u;
        }
    };
    for (int s = 0; s < k; ++s) {
        std::uint32_t below = (1u << s) - 1;
        rec(1u << s, adj[s], below);
    }
    std::sort(good.begin(), good.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    std::vector<std::uint32_t> maximal;
    for (auto s : good) {
        bool dom = false;
        for (auto m : maximal)
            if ((s & ~m) == 0) {
                dom = true;
                break;
            }
        if (!dom) maximal.push_back(s);
    }
    std::vector<VertexSet> out;
    for (auto m : maximal) {
        VertexSet vs;
        for (int a = 0; a < k; ++a)
            if (m >> a & 1) vs.push_back(comp[a]);
        out.push_back(vs);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<CoverCertificate::Piece> cover_candidates(const ColoredMultigraph& g, const TcConstraints& cons) {
    std::vector<CoverCertificate::Piece> out;
    for (int c = 1; c <= g.r(); ++c) {
        if (cons.allowed && !(cons.allowed & color_bit(c))) continue;
        for (auto& p : components(g, c).parts) {
            if (cons.max_diam < 0 || diameter(g, p, c) <= cons.max_diam) {
                out.push_back({c, p, {}});
                continue;
            }
            for (auto& q : bounded_pieces(g, p, c, cons.max_diam)) out.push_back({c, q, {}});
        }
    }
    return out;
}

CoverResult tc_exact(const ColoredMultigraph& g, const TcConstraints& cons, const SolveBudget& budget) {
    CoverResult res;
    res.cert.max_diam = cons.max_diam;
    res.cert.allowed = cons.allowed;
    if (g.n() == 0) {
        res.status = Status::Optimal;
        res.size = 0;
        return res;
    }
    auto cands = cover_candidates(g, cons);
    std::vector<Bits> sets;
    for (auto& p : cands) {
        Bits b(g.n());
        for (int v : p.vertices) b.set(v);
        sets.push_back(b);
    }
    auto sc = solve_set_cover(g.n(), sets, budget);
    res.status = sc.status;
    res.nodes = sc.nodes;
    res.lower = sc.lower;
    if (sc.status == Status::Infeasible) {
        res.witness_vertex = sc.uncoverable;
        return res;
    }
    res.size = sc.size;
    for (int i : sc.chosen) res.cert.pieces.push_back(cands[i]);
    return res;
}

// ---------------------------------------------------------------- tp

namespace {

using Mask = std::uint64_t;

struct PartitionSearch {
    int n, r;
    std::vector<std::vector<Mask>> adj;  // adj[c][v]
    BudgetClock& clock;
    std::unordered_map<Mask, int> failed;  // largest t known to fail
    std::vector<std::pair<int, Mask>> stack;
    bool aborted = false;

    Mask comp_in(int c, int v, Mask u) const {
        Mask seen = Mask{1} << v, front = seen;
        while (front) {
            Mask nxt = 0;
            for (Mask f = front; f; f &= f - 1) nxt |= adj[c][std::countr_zero(f)];
            nxt &= u & ~seen;
            seen |= nxt;
            front = nxt;
        }
        return seen;
    }

    int lower_bound(Mask u) const {
        int lb = 0;
        Mask freeM = u;
        while (freeM) {
            int v = std::countr_zero(freeM);
            Mask reach = 0;
            for (int c = 1; c <= r; ++c) reach |= comp_in(c, v, u);
            freeM &= ~reach;
            ++lb;
        }
        return lb;
    }

    // greedy: repeatedly remove the largest monochromatic component of the remaining graph
    std::vector<std::pair<int, Mask>> greedy(Mask u) const {
        std::vector<std::pair<int, Mask>> out;
        while (u) {
            std::pair<int, Mask> best{0, 0};
            int bestSize = 0;
            for (Mask t = u; t; t &= t - 1) {
                int v = std::countr_zero(t);
                for (int c = 1; c <= r; ++c) {
                    Mask m = comp_in(c, v, u);
                    if (std::popcount(m) > bestSize) bestSize = std::popcount(m), best = {c, m};
                }
            }
            out.push_back(best);
            u &= ~best.second;
        }
        return out;
    }

    bool solve(Mask u, int t) {
        if (!u) return true;
        if (t == 0) return false;
        if (!clock.tick()) {
            aborted = true;
            return false;
        }
        auto it = failed.find(u);
        if (it != failed.end() && it->second >= t) return false;
        if (lower_bound(u) > t) {
            failed[u] = std::max(failed[u], t);
            return false;
        }
        int v = std::countr_zero(u);
        for (int c = 1; c <= r; ++c) {
            Mask comp = comp_in(c, v, u);
            if (t == 1) {
                if (comp == u) {
                    stack.push_back({c, comp});
                    return true;
                }
                continue;
            }
            // connected subsets of comp containing v
            bool found = false;
            std::function<void(Mask, Mask)> rec = [&](Mask s, Mask excl) {
                if (found || aborted) return;
                stack.push_back({c, s});
                if (solve(u & ~s, t - 1)) {
                    found = true;
                    return;
                }
                stack.pop_back();
                Mask nb = 0;
                for (Mask f = s; f; f &= f - 1) nb |= adj[c][std::countr_zero(f)];
                Mask cand = nb & comp & ~s & ~excl;
                for (Mask x = cand; x; x &= x - 1) {
                    int w = std::countr_zero(x);
                    rec(s | (Mask{1} << w), excl);
                    if (found || aborted) return;
                    excl |= Mask{1} << w;
                }
            };
            rec(Mask{1} << v, 0);
            if (found) return true;
            if (aborted) return false;
        }
        if (t == 1 && !aborted) {
            failed[u] = std::max(failed[u], t);
            return false;
        }
        if (!aborted) failed[u] = std::max(failed[u], t);
        return false;
    }
};

}  // namespace

CoverResult tp_exact(const ColoredMultigraph& g, const SolveBudget& budget) {
    if (g.n() > 64) throw std::invalid_argument("tp_exact supports at most 64 vertices");
    CoverResult res;
    res.cert.mode = CoverCertificate::Mode::Partition;
    if (g.n() == 0) {
        res.status = Status::Optimal;
        res.size = 0;
        return res;
    }
    BudgetClock clock(budget);
    PartitionSearch ps{g.n(), g.r(), {}, clock, {}, {}, false};
    ps.adj.assign(g.r() + 1, std::vector<Mask>(g.n(), 0));
    for (int c = 1; c <= g.r(); ++c)
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v)
                if (u != v && g.has(u, v, c)) ps.adj[c][u] |= Mask{1} << v;
    const Mask all = g.n() == 64 ? ~Mask{0} : (Mask{1} << g.n()) - 1;
    auto best = ps.greedy(all);
    int lb = ps.lower_bound(all);
    res.lower = lb;
    int t = lb;
    for (; t < int(best.size()); ++t) {
        ps.stack.clear();
        if (ps.solve(all, t)) {
            best = ps.stack;
            break;
        }
        if (ps.aborted) break;
        res.lower = t + 1;
    }
    res.nodes = clock.nodes();
    res.size = int(best.size());
    std::sort(best.begin(), best.end(), [](auto& a, auto& b) { return std::countr_zero(a.second) < std::countr_zero(b.second); });
    for (auto [c, m] : best) {
        VertexSet vs;
        for (Mask x = m; x; x &= x - 1) vs.push_back(std::countr_zero(x));
        res.cert.pieces.push_back({c, vs, {}});
    }
    res.status = ps.aborted ? Status::Inconclusive : Status::Optimal;
    if (res.status == Status::Optimal) res.lower = res.size;
    return res;
}

// ---------------------------------------------------------------- tau / nu

TauNu tau_nu(const ColoredHypergraph& h) {
    h.validate();
    TauNu out;
    const int m = int(h.edges.size());
    if (m == 0) return out;
    // nu = alpha of the edge-conflict graph
    ColoredMultigraph conflict(m, 1);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto& x = h.edges[a].vertices;
            const auto& y = h.edges[b].vertices;
            std::vector<int> common;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
            if (!common.empty()) conflict.add_edge(a, b, 1);
        }
    auto al = alpha(conflict);
    out.nu = al.size;
    out.matching = al.witness;
    // tau = minimum cover of edges by vertices
    std::vector<Bits> sets(h.n, Bits(m));
    for (int e = 0; e < m; ++e)
        for (int v : h.edges[e].vertices) sets[v].set(e);
    auto sc = solve_set_cover(m, sets);
    out.tau = sc.size;
    out.cover = sc.chosen;
    if (out.tau < out.nu) throw std::logic_error("tau < nu");
    return out;
}

McResult mc_graph(const ColoredMultigraph& g) {
    McResult best;
    for (int c = 1; c <= g.r(); ++c)
        for (auto& p : components(g, c).parts)
            if (int(p.size()) > best.size) {
                best.size = int(p.size());
                best.color = c;
                best.vertices = p;
            }
    if (g.r() == 0 && g.n() > 0) {
        best.size = 1;
        best.vertices = {0};
    }
    return best;
}

ClCoverResult tc_cl_exact(const ColoredHypergraph& h, int c, int ell, const SolveBudget& budget) {
    auto comps = cl_components(h, c, ell);
    const int N = int(binom(h.n, c));
    std::vector<Bits> sets;
    for (auto& comp : comps) sets.push_back(comp.shadow);
    auto sc = solve_set_cover(N, sets, budget);
    ClCoverResult res;
    res.status = sc.status;
    res.size = sc.size;
    for (int i : sc.chosen) res.pieces.push_back({comps[i].color, std::size_t(i)});
    return res;
}

}  // namespace ryser
