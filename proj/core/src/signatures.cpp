#include "ryserlab/signatures.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "ryserlab/combinatorics.hpp"

namespace ryser {

namespace {

using Rgs = std::vector<int>;

std::vector<Rgs> set_partitions(int n) {
    std::vector<Rgs> out;
    Rgs cur(n);
    std::function<void(int, int)> rec = [&](int i, int mx) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int b = 0; b <= mx + 1; ++b) {
            cur[i] = b;
            rec(i + 1, std::max(mx, b));
        }
    };
    rec(0, -1);
    return out;
}

IntPartition shape(const Rgs& blocks, unsigned mask) {
    std::vector<int> cnt(blocks.size(), 0);
    for (std::size_t v = 0; v < blocks.size(); ++v)
        if (mask >> v & 1) ++cnt[blocks[v]];
    IntPartition out;
    for (int c : cnt)
        if (c) out.push_back(c);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

unsigned pair_mask(const Rgs& blocks) {
    const int n = int(blocks.size());
    unsigned m = 0;
    int e = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++e)
            if (blocks[u] == blocks[v]) m |= 1u << e;
    return m;
}

// t = number of parts, ge[m] = number of parts of size >= m
struct Stat {
    int t = 0;
    std::array<int, 5> ge{};
};

Stat stat_of(const IntPartition& q) {
    Stat s;
    s.t = int(q.size());
    for (int x : q)
        for (int m = 0; m < 5; ++m)
            if (x >= m) ++s.ge[m];
    return s;
}

template <std::size_t P, class F>
bool any_ordering(F&& f) {
    std::array<int, P> idx;
    std::iota(idx.begin(), idx.end(), 0);
    do
        if (f(idx)) return true;
    while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

bool r5(const std::array<Stat, 3>& s) {
    return any_ordering<3>([&](const std::array<int, 3>& o) {
        auto &a = s[o[0]], &b = s[o[1]], &c = s[o[2]];
        return a.t + b.t + c.ge[3] <= 4 || a.t + b.ge[2] + c.ge[2] <= 4;
    });
}

bool r6(const std::array<Stat, 4>& s) {
    return any_ordering<4>([&](const std::array<int, 4>& o) {
        auto &a = s[o[0]], &b = s[o[1]], &c = s[o[2]], &d = s[o[3]];
        return a.t + b.ge[2] + c.ge[2] + d.ge[2] <= 5 || a.t + b.t + c.ge[2] + d.ge[3] <= 5 ||
               a.t + b.t + c.t + d.ge[4] <= 5;
    });
}

// conditions on the signature induced by a subset W of size w
bool r6ii(const std::array<Stat, 4>& s, int w) {
    if (w == 3) return s[0].t + s[1].t + s[2].t + s[3].t <= 5;
    return any_ordering<4>([&](const std::array<int, 4>& o) {
        auto &a = s[o[0]], &b = s[o[1]], &c = s[o[2]], &d = s[o[3]];
        if (w == 4) return a.t + b.t + c.t + d.ge[2] <= 5;
        if (w == 5) return a.t + b.t + c.ge[2] + d.ge[2] <= 5 || a.t + b.t + c.t + d.ge[3] <= 5;
        return false;
    });
}

int popcount(unsigned x) { return __builtin_popcount(x); }

}  // namespace

std::vector<IntPartition> integer_partitions(int n) {
    std::vector<IntPartition> out;
    IntPartition cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, cap); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

void SignatureSet::canonicalize() {
    for (auto& q : sigs) std::sort(q.begin(), q.end(), std::greater<>());
    std::sort(sigs.begin(), sigs.end(), std::greater<>());
    p = int(sigs.size());
}

bool SignatureSet::operator<(const SignatureSet& o) const {
    if (n != o.n) return n < o.n;
    if (p != o.p) return p < o.p;
    return sigs > o.sigs;
}

std::string SignatureSet::str() const {
    std::string s;
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        if (i) s += ',';
        s += '(';
        for (std::size_t j = 0; j < sigs[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(sigs[i][j]);
        }
        s += ')';
    }
    return s;
}

SignatureSet parse_signature(std::string_view text) {
    SignatureSet sig;
    std::size_t i = 0;
    auto fail = [&](const char* why) {
        throw std::invalid_argument("signature column " + std::to_string(i + 1) + ": " + why);
    };
    while (i < text.size() && text[i] == ' ') ++i;
    while (i < text.size()) {
        if (text[i] != '(') fail("expected '('");
        ++i;
        IntPartition q;
        while (true) {
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a part");
            int x = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) x = 10 * x + (text[i++] - '0');
            if (x <= 0) fail("parts must be positive");
            q.push_back(x);
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            fail("expected ',' or ')'");
        }
        sig.sigs.push_back(q);
        while (i < text.size() && (text[i] == ' ' || text[i] == '\r' || text[i] == '\n')) ++i;
        if (i < text.size()) {
            if (text[i] != ',') fail("expected ','");
            ++i;
        }
    }
    if (sig.sigs.empty()) fail("empty signature");
    sig.n = std::accumulate(sig.sigs[0].begin(), sig.sigs[0].end(), 0);
    for (auto& q : sig.sigs)
        if (std::accumulate(q.begin(), q.end(), 0) != sig.n) throw std::invalid_argument("partitions of different sizes");
    sig.canonicalize();
    return sig;
}

SignatureSet signature_of(const ColoredMultigraph& g, const VertexSet& X, const std::vector<int>& S) {
    if (X.empty()) throw std::invalid_argument("signature_of needs a nonempty vertex set");
    SignatureSet sig;
    sig.n = int(X.size());
    for (int c : S) {
        if (c < 1 || c > g.r()) throw std::invalid_argument("color out of range");
        std::vector<int> parent(X.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (std::size_t a = 0; a < X.size(); ++a)
            for (std::size_t b = a + 1; b < X.size(); ++b)
                if (g.has(X[a], X[b], c)) parent[find(int(a))] = find(int(b));
        std::vector<int> cnt(X.size(), 0);
        for (std::size_t a = 0; a < X.size(); ++a) ++cnt[find(int(a))];
        IntPartition q;
        for (int x : cnt)
            if (x) q.push_back(x);
        sig.sigs.push_back(q);
    }
    sig.canonicalize();
    return sig;
}

std::vector<SignatureSet> enumerate_signatures(int n, int p) {
    if (n < 1 || p < 1) throw std::invalid_argument("enumerate_signatures needs n, p >= 1");
    auto parts = integer_partitions(n);
    std::vector<SignatureSet> out;
    std::vector<int> idx(p, 0);
    // nondecreasing index tuples = multisets, listed largest partitions first
    std::function<void(int, int)> rec = [&](int i, int from) {
        if (i == p) {
            SignatureSet s;
            s.n = n;
            s.p = p;
            for (int x : idx) s.sigs.push_back(parts[x]);
            out.push_back(std::move(s));
            return;
        }
        for (int x = from; x < int(parts.size()); ++x) {
            idx[i] = x;
            rec(i + 1, x);
        }
    };
    rec(0, 0);
    return out;
}

bool passes_edge_count(const SignatureSet& sig) {
    long long covered = 0;
    for (auto& q : sig.sigs)
        for (int x : q) covered += binom(x, 2);
    return covered >= binom(sig.n, 2);
}

std::optional<ColoredMultigraph> is_valid(const SignatureSet& sig) {
    const int n = sig.n, p = int(sig.sigs.size());
    if (n < 1 || n > 8 || p < 1) throw std::invalid_argument("is_valid supports 1 <= n <= 8");
    if (!passes_edge_count(sig)) return std::nullopt;
    const unsigned full = n * (n - 1) / 2 >= 32 ? ~0u : (1u << (n * (n - 1) / 2)) - 1;
    auto all = set_partitions(n);
    std::vector<std::vector<const Rgs*>> cand(p);
    for (int i = 1; i < p; ++i)
        for (auto& b : all)
            if (shape(b, (1u << n) - 1) == sig.sigs[i]) cand[i].push_back(&b);
    // vertex symmetry: color 1 uses consecutive blocks in part order
    Rgs first(n);
    {
        int v = 0;
        for (int b = 0; b < int(sig.sigs[0].size()); ++b)
            for (int j = 0; j < sig.sigs[0][b]; ++j) first[v++] = b;
    }
    std::vector<const Rgs*> chosen(p);
    chosen[0] = &first;
    std::function<bool(int, unsigned)> rec = [&](int i, unsigned cov) {
        if (i == p) return cov == full;
        for (const Rgs* b : cand[i]) {
            chosen[i] = b;
            unsigned c2 = cov | pair_mask(*b);
            if (i == p - 1 && c2 != full) continue;
            if (rec(i + 1, c2)) return true;
        }
        return false;
    };
    if (!rec(1, pair_mask(first))) return std::nullopt;
    ColoredMultigraph g(n, p);
    for (int i = 0; i < p; ++i)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((*chosen[i])[u] == (*chosen[i])[v]) g.add_edge(u, v, i + 1);
    return g;
}

bool lemma_filter(const SignatureSet& sig, Lemma which, const ColoredMultigraph* realization) {
    auto need = [&](int n, int p) {
        if (sig.n != n || int(sig.sigs.size()) != p)
            throw std::invalid_argument("lemma filter applies to (n,p) = (" + std::to_string(n) + "," + std::to_string(p) + ")");
    };
    switch (which) {
    case Lemma::R5: {
        need(5, 3);
        return r5({stat_of(sig.sigs[0]), stat_of(sig.sigs[1]), stat_of(sig.sigs[2])});
    }
    case Lemma::R6: {
        need(6, 4);
        return r6({stat_of(sig.sigs[0]), stat_of(sig.sigs[1]), stat_of(sig.sigs[2]), stat_of(sig.sigs[3])});
    }
    case Lemma::R6II: {
        need(6, 4);
        if (!realization) throw std::invalid_argument("R6II needs a realization");
        if (realization->n() != 6 || realization->r() != 4) throw std::invalid_argument("realization must be a 4-colored K_6");
        if (!(signature_of(*realization, all_vertices(6), {1, 2, 3, 4}) == sig))
            throw std::invalid_argument("realization does not have this signature");
        for (unsigned mask = 0; mask < 64; ++mask) {
            int w = popcount(mask);
            if (w < 3 || w > 5) continue;
            VertexSet W;
            for (int v = 0; v < 6; ++v)
                if (mask >> v & 1) W.push_back(v);
            std::array<Stat, 4> st;
            for (int c = 1; c <= 4; ++c) st[c - 1] = stat_of(signature_of(*realization, W, {c}).sigs[0]);
            if (r6ii(st, w)) return true;
        }
        return false;
    }
    }
    return false;
}

SignatureCensus signature_census(int n, int p) {
    if (n < 1 || n > 7 || p < 1 || p > 6) throw std::invalid_argument("census supports n <= 7, p <= 6");
    const bool lemmas5 = n == 5 && p == 3, lemmas6 = n == 6 && p == 4;
    auto ip = integer_partitions(n);
    const int P = int(ip.size());
    auto all = set_partitions(n);
    const int m = int(all.size());
    const unsigned fullMask = (1u << n) - 1;
    const unsigned fullPairs = (1u << (n * (n - 1) / 2)) - 1;
    std::vector<unsigned> cov(m);
    std::vector<int> sid(m);
    for (int x = 0; x < m; ++x) {
        cov[x] = pair_mask(all[x]);
        sid[x] = int(std::find(ip.begin(), ip.end(), shape(all[x], fullMask)) - ip.begin());
    }
    // restricted stats for R6II
    std::vector<std::vector<Stat>> sub;
    if (lemmas6) {
        sub.assign(m, std::vector<Stat>(64));
        for (int x = 0; x < m; ++x)
            for (unsigned w = 0; w < 64; ++w) sub[x][w] = stat_of(shape(all[x], w));
    }
    std::vector<Stat> fullStat(P);
    for (int i = 0; i < P; ++i) fullStat[i] = stat_of(ip[i]);

    struct Entry {
        bool sig_filtered = false;
        bool some_without_w = false;
    };
    std::unordered_map<std::uint64_t, Entry> seen;
    SignatureCensus out;
    std::vector<int> tup(p);
    std::vector<int> ids(p);

    auto key_of = [&](std::vector<int>& s) {
        std::sort(s.begin(), s.end());
        std::uint64_t k = 0;
        for (int x : s) k = k * std::uint64_t(P) + std::uint64_t(x);
        return k;
    };

    auto leaf = [&]() {
        ++out.realizations;
        for (int i = 0; i < p; ++i) ids[i] = sid[tup[i]];
        auto key = key_of(ids);
        auto [it, fresh] = seen.try_emplace(key);
        Entry& e = it->second;
        if (fresh) {
            if (lemmas5) e.sig_filtered = r5({fullStat[ids[0]], fullStat[ids[1]], fullStat[ids[2]]});
            if (lemmas6) e.sig_filtered = r6({fullStat[ids[0]], fullStat[ids[1]], fullStat[ids[2]], fullStat[ids[3]]});
            if (!lemmas6) e.some_without_w = true;
        }
        if (e.sig_filtered || e.some_without_w) return;
        for (unsigned w = 0; w < 64; ++w) {
            int sz = popcount(w);
            if (sz < 3 || sz > 5) continue;
            std::array<Stat, 4> st{sub[tup[0]][w], sub[tup[1]][w], sub[tup[2]][w], sub[tup[3]][w]};
            if (r6ii(st, sz)) return;
        }
        e.some_without_w = true;
    };

    std::function<void(int, int, unsigned)> rec = [&](int i, int from, unsigned c) {
        if (i == p) {
            if (c == fullPairs) leaf();
            return;
        }
        for (int x = from; x < m; ++x) {
            tup[i] = x;
            unsigned c2 = c | cov[x];
            if (i == p - 1 && c2 != fullPairs) continue;
            rec(i + 1, x, c2);
        }
    };
    rec(0, 0, 0);

    auto cands = enumerate_signatures(n, p);
    out.candidates = int(cands.size());
    for (auto& s : cands) {
        std::vector<int> k;
        for (auto& q : s.sigs) k.push_back(int(std::find(ip.begin(), ip.end(), q) - ip.begin()));
        auto it = seen.find(key_of(k));
        if (it == seen.end()) continue;
        out.valid.push_back(s);
        if (!it->second.sig_filtered && it->second.some_without_w) out.residual.push_back(s);
    }
    return out;
}

std::vector<SignatureSet> residual_cases(int n, int p) {
    if (!((n == 5 && p == 3) || (n == 6 && p == 4))) throw std::invalid_argument("residual cases exist for (5,3) and (6,4)");
    return signature_census(n, p).residual;
}

}  // namespace ryser
