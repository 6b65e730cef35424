#include "ryserlab/goodpart.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ryserlab/bits.hpp"
#include "ryserlab/rng.hpp"

namespace ryser {

void WordSet::validate() const {
    if (r < 1 || d < 1) throw std::invalid_argument("word set needs r, d >= 1");
    std::set<Word> seen;
    for (auto& w : words) {
        if (int(w.size()) != d) throw std::invalid_argument("word " + format_word(w) + " has wrong length");
        for (int x : w)
            if (x < 1 || x > r) throw std::invalid_argument("word " + format_word(w) + " has a letter out of range");
        if (!seen.insert(w).second) throw std::invalid_argument("duplicate word " + format_word(w));
    }
}

std::string format_word(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

GoodPartitionResult good_partition(const ColoredMultigraph& g, const VertexSet& Y, const VertexSet& Z, int r,
                                   const SolveBudget& budget) {
    for (int y : Y)
        for (int z : Z)
            if (y == z || !g.adjacent(y, z)) throw std::invalid_argument("Y and Z must span a complete bipartite graph");
    const int ny = int(Y.size()), nz = int(Z.size());
    const ColorMask inRange = r >= 32 ? ~ColorMask{0} : (ColorMask{1} << r) - 1;
    std::vector<int> assign(ny, 0);
    std::vector<ColorMask> forbidden(ny, 0);
    BudgetClock clock(budget);
    GoodPartitionResult res;

    auto satisfied = [&](int zi) {
        for (int yi = 0; yi < ny; ++yi)
            if (assign[yi] && g.has(Y[yi], Z[zi], assign[yi])) return true;
        return false;
    };
    // branch on the first unsatisfied z: some y must take one of the colors it sends to z
    std::function<bool()> rec = [&]() -> bool {
        if (!clock.tick()) return false;
        int zi = 0;
        while (zi < nz && satisfied(zi)) ++zi;
        if (zi == nz) return true;
        std::vector<std::pair<int, int>> opts;
        for (int yi = 0; yi < ny; ++yi) {
            if (assign[yi]) continue;
            ColorMask m = g.colors(Y[yi], Z[zi]) & inRange & ~forbidden[yi];
            for (int c = 1; c <= r; ++c)
                if (m & color_bit(c)) opts.push_back({yi, c});
        }
        std::vector<std::pair<int, ColorMask>> undo;
        bool found = false;
        for (auto [yi, c] : opts) {
            assign[yi] = c;
            if (rec()) {
                found = true;
                break;
            }
            assign[yi] = 0;
            undo.push_back({yi, forbidden[yi]});
            forbidden[yi] |= color_bit(c);
            if (clock.exhausted()) break;
        }
        for (auto it = undo.rbegin(); it != undo.rend(); ++it) forbidden[it->first] = it->second;
        return found;
    };
    bool ok = rec();
    res.nodes = clock.nodes();
    if (ok) {
        res.status = Status::Optimal;
        res.parts.assign(r, {});
        for (int yi = 0; yi < ny; ++yi) res.parts[(assign[yi] ? assign[yi] : 1) - 1].push_back(Y[yi]);
        for (auto& p : res.parts) std::sort(p.begin(), p.end());
    } else {
        res.status = clock.exhausted() ? Status::Inconclusive : Status::Infeasible;
    }
    return res;
}

namespace {

long long ipow(int b, int e) {
    long long x = 1;
    while (e-- > 0) x *= b;
    return x;
}

Word decode(long long idx, int r, int d) {
    Word w(d);
    for (int i = d - 1; i >= 0; --i) {
        w[i] = int(idx % r) + 1;
        idx /= r;
    }
    return w;
}

long long encode(const Word& w, int r) {
    long long idx = 0;
    for (int x : w) idx = idx * r + (x - 1);
    return idx;
}

bool everywhere_different(const Word& a, const Word& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i]) return false;
    return true;
}

}  // namespace

std::optional<Word> covers_all_witness(const WordSet& w) {
    w.validate();
    const long long total = ipow(w.r, w.d);
    for (long long idx = 0; idx < total; ++idx) {
        Word x = decode(idx, w.r, w.d);
        bool hit = false;
        for (auto& f : w.words)
            if (everywhere_different(x, f)) {
                hit = true;
                break;
            }
        if (!hit) return x;
    }
    return std::nullopt;
}

bool covers_all(const WordSet& w) { return !covers_all_witness(w).has_value(); }

bool gamma_t_check(int r, int d, const WordSet& w) {
    if (r < 1 || d < 1) throw std::invalid_argument("gamma_t_check needs r, d >= 1");
    // K_r^{x j} built one factor at a time; vertex (v, a) of the next power is v * r + a
    std::vector<std::vector<int>> adj(r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            if (a != b) adj[a].push_back(b);
    for (int j = 2; j <= d; ++j) {
        std::vector<std::vector<int>> next(adj.size() * r);
        for (std::size_t v = 0; v < adj.size(); ++v)
            for (int a = 0; a < r; ++a)
                for (int u : adj[v])
                    for (int b = 0; b < r; ++b)
                        if (a != b) next[v * r + a].push_back(u * r + b);
        adj = std::move(next);
    }
    std::vector<char> inT(adj.size(), 0);
    for (auto& word : w.words) {
        if (int(word.size()) != d) return false;
        long long v = 0;
        for (int x : word) {
            if (x < 1 || x > r) return false;
            v = v * r + (x - 1);
        }
        inT[v] = 1;
    }
    for (auto& nb : adj) {
        bool dom = false;
        for (int u : nb)
            if (inT[u]) {
                dom = true;
                break;
            }
        if (!dom) return false;
    }
    return true;
}

int column_greedy_bound(int r, int d) {
    auto step = [r](long long m) { return m - (m + r - 1) / r; };
    long long m = 0;
    while (true) {
        long long x = m + 1;
        for (int i = 0; i < d && x > 0; ++i) x = step(x);
        if (x != 0) break;
        ++m;
        if (m > ipow(r, d)) break;
    }
    return int(m + 1);
}

namespace {

struct ZSearch {
    int r, d;
    int N;
    std::vector<Bits> nb;     // nb[f]: words everywhere different from f
    std::vector<int> ones;    // number of letters equal to 1
    BudgetClock& clock;
    std::vector<int> chosen;

    ZSearch(int r_, int d_, BudgetClock& c) : r(r_), d(d_), N(int(ipow(r_, d_))), clock(c) {
        std::vector<Word> all(N);
        for (int i = 0; i < N; ++i) all[i] = decode(i, r, d);
        // per (position, letter) masks; nb[f] is the intersection of complements
        std::vector<std::vector<Bits>> col(d, std::vector<Bits>(r, Bits(N)));
        for (int i = 0; i < N; ++i)
            for (int p = 0; p < d; ++p) col[p][all[i][p] - 1].set(i);
        nb.assign(N, full_bits(N));
        ones.assign(N, 0);
        for (int i = 0; i < N; ++i)
            for (int p = 0; p < d; ++p) {
                nb[i].minus(col[p][all[i][p] - 1]);
                if (all[i][p] == 1) ++ones[i];
            }
    }

    bool dfs(const Bits& uncovered, int k, Bits allowed) {
        if (uncovered.none()) return true;
        if (k == 0 || !clock.tick()) return false;
        const int U = uncovered.count();
        std::vector<int> gain;
        for (int f : allowed.members()) gain.push_back(nb[f].and_count(uncovered));
        std::vector<int> top = gain;
        std::partial_sort(top.begin(), top.begin() + std::min<std::size_t>(k, top.size()), top.end(), std::greater<>());
        long long reach = 0;
        for (int i = 0; i < std::min<int>(k, int(top.size())); ++i) reach += top[i];
        if (reach < U) return false;
        // fail-first: the uncovered word with fewest allowed dominators
        int best = -1, bestCount = kInf;
        for (int x : uncovered.members()) {
            int c = nb[x].and_count(allowed);
            if (c < bestCount) best = x, bestCount = c;
            if (c == 0) return false;
        }
        Bits opts = nb[best];
        opts &= allowed;
        std::vector<int> order = opts.members();
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return nb[a].and_count(uncovered) > nb[b].and_count(uncovered); });
        for (int f : order) {
            allowed.reset(f);
            chosen.push_back(f);
            if (dfs(uncovered - nb[f], k - 1, allowed)) return true;
            chosen.pop_back();
            if (clock.exhausted()) return false;
        }
        return false;
    }

    // Is there a covering set of size m? Word 0 (all ones) is in it by transitivity; the
    // member with the most ones besides it is mapped to 1^j 2^(d-j).
    bool decide(int m) {
        chosen.clear();
        if (m < 1) return false;
        Bits unc = full_bits(N) - nb[0];
        chosen.push_back(0);
        if (m == 1) return unc.none();
        for (int j = d - 1; j >= 0; --j) {
            Word w2(d, 2);
            for (int p = 0; p < j; ++p) w2[p] = 1;
            int s = int(encode(w2, r));
            Bits allowed(N);
            for (int i = 0; i < N; ++i)
                if (i != 0 && i != s && ones[i] <= j) allowed.set(i);
            chosen.push_back(s);
            if (dfs(unc - nb[s], m - 2, allowed)) return true;
            chosen.pop_back();
            if (clock.exhausted()) return false;
        }
        return false;
    }

    std::vector<int> greedy() const {
        Bits unc = full_bits(N);
        std::vector<int> out;
        while (unc.any()) {
            int best = 0, gain = -1;
            for (int f = 0; f < N; ++f) {
                int gf = nb[f].and_count(unc);
                if (gf > gain) best = f, gain = gf;
            }
            out.push_back(best);
            unc.minus(nb[best]);
        }
        return out;
    }

    // Seeded local search for a covering set of size m (swap moves minimizing uncovered count).
    std::optional<std::vector<int>> local(int m, long long iters, std::uint64_t seed) const {
        Rng rng(seed);
        std::vector<int> cur(m);
        std::vector<char> in(N, 0);
        for (int i = 0; i < m; ++i) {
            int f;
            do f = int(rng.below(N));
            while (in[f]);
            in[f] = 1;
            cur[i] = f;
        }
        std::vector<int> cnt(N, 0);
        for (int f : cur)
            for (int x : nb[f].members()) ++cnt[x];
        auto uncovered = [&]() {
            int u = 0;
            for (int x = 0; x < N; ++x) u += cnt[x] == 0;
            return u;
        };
        int score = uncovered();
        for (long long it = 0; it < iters && score > 0; ++it) {
            if (clock.exhausted()) break;
            // pick an uncovered word and a dominator of it to swap in
            std::vector<int> unc;
            for (int x = 0; x < N; ++x)
                if (!cnt[x]) unc.push_back(x);
            int x = unc[rng.below(unc.size())];
            auto doms = nb[x].members();
            int in_f = doms[rng.below(doms.size())];
            if (in[in_f]) continue;
            int bestPos = -1, bestScore = kInf;
            for (int pos = 0; pos < m; ++pos) {
                int out_f = cur[pos];
                int delta = 0;
                for (int y : nb[out_f].members())
                    if (cnt[y] == 1 && !nb[in_f].test(y)) ++delta;
                for (int y : nb[in_f].members())
                    if (cnt[y] == 0) --delta;
                if (delta < bestScore) bestScore = delta, bestPos = pos;
            }
            if (bestScore > 0 && rng.below(10) != 0) continue;
            int out_f = cur[bestPos];
            for (int y : nb[out_f].members()) --cnt[y];
            for (int y : nb[in_f].members()) ++cnt[y];
            in[out_f] = 0;
            in[in_f] = 1;
            cur[bestPos] = in_f;
            score += bestScore;
        }
        if (score == 0) return cur;
        return std::nullopt;
    }
};

}  // namespace

ZResult z_exact(int r, int d, const SolveBudget& budget) {
    if (r < 2 || d < 1) throw std::invalid_argument("z_exact needs r >= 2, d >= 1");
    if (ipow(r, d) > 4096) throw std::invalid_argument("z_exact supports r^d <= 4096");
    ZResult res;
    res.lower_sources.push_back({int(std::ceil(std::pow(double(r) / (r - 1), d) - 1e-9)), "fractional"});
    res.lower_sources.push_back({d + 1, "d+1"});
    res.lower_sources.push_back({column_greedy_bound(r, d), "column-greedy"});
    for (auto& b : res.lower_sources) res.lower = std::max(res.lower, b.value);
    res.witness.r = r;
    res.witness.d = d;
    if (r >= d + 1) {
        for (int i = 1; i <= d + 1; ++i) res.witness.words.push_back(Word(d, i));
        res.upper = d + 1;
        res.status = Status::Optimal;
        return res;
    }
    BudgetClock clock(budget);
    ZSearch zs(r, d, clock);
    std::vector<int> best = zs.greedy();
    for (int m = int(best.size()) - 1; m >= res.lower; --m) {
        auto found = zs.local(m, 200000, 0x5eed0000ULL + std::uint64_t(m));
        if (!found) break;
        best = *found;
    }
    auto set_witness = [&](const std::vector<int>& ids) {
        std::vector<int> s = ids;
        std::sort(s.begin(), s.end());
        res.witness.words.clear();
        for (int f : s) res.witness.words.push_back(decode(f, r, d));
        res.upper = int(s.size());
    };
    set_witness(best);
    for (int m = res.lower; m < res.upper; ++m) {
        if (zs.decide(m)) {
            set_witness(zs.chosen);
            break;
        }
        if (clock.exhausted()) break;
        res.lower = m + 1;
        res.lower_sources.push_back({m + 1, "search"});
    }
    res.nodes = clock.nodes();
    res.status = res.lower == res.upper ? Status::Optimal : Status::Inconclusive;
    return res;
}

BadBipartite bad_bipartite_coloring(int ySize, int zSize) {
    if (ySize < 1 || ySize > 20) throw std::invalid_argument("ySize must be in 1..20");
    const long long blocks = ipow(2, ySize);
    if (zSize < blocks) throw std::invalid_argument("zSize must be at least 2^ySize");
    BadBipartite out;
    out.g = ColoredMultigraph(ySize + zSize, 2);
    out.Y = all_vertices(ySize);
    out.blocks.assign(std::size_t(blocks), {});
    for (int j = 0; j < zSize; ++j) {
        int z = ySize + j;
        out.Z.push_back(z);
        long long b = j % blocks;
        out.blocks[b].push_back(z);
        for (int y = 0; y < ySize; ++y) out.g.add_edge(y, z, int((b >> y) & 1) + 1);
    }
    return out;
}

BadMulti badmulti_graph(int k, int t, int ySize) {
    if (k < 2 || t < 1) throw std::invalid_argument("badmulti needs k >= 2, t >= 1");
    if (ySize < 0) ySize = std::max(2, k - 1);
    if (ySize < k - 1) throw std::invalid_argument("need at least one vertex in each small part");
    const int zSize = int((t + 1) * ipow(2, ySize));
    auto bb = bad_bipartite_coloring(ySize, zSize);
    BadMulti out;
    out.g = bb.g;
    // small parts: ySize vertices split as evenly as possible over k-1 parts
    out.parts.assign(k, {});
    for (int y = 0; y < ySize; ++y) out.parts[y % (k - 1)].push_back(y);
    out.parts[k - 1] = bb.Z;
    for (int a = 0; a < ySize; ++a)
        for (int b = a + 1; b < ySize; ++b)
            if (a % (k - 1) != b % (k - 1)) out.g.add_edge(a, b, 1);
    out.tp_lower = int(zSize / ipow(2, ySize));
    return out;
}

}  // namespace ryser
