#include "ryserlab/constructions.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <map>
#include <stdexcept>

#include "ryserlab/combinatorics.hpp"

namespace ryser {

bool is_prime_power(int q, int* p, int* e) {
    if (q < 2) return false;
    int x = q, prime = 0;
    for (int f = 2; f * f <= x; ++f)
        if (x % f == 0) {
            prime = f;
            break;
        }
    if (!prime) prime = q;
    int k = 0;
    while (x % prime == 0) x /= prime, ++k;
    if (x != 1) return false;
    if (p) *p = prime;
    if (e) *e = k;
    return true;
}

namespace {

using Poly = std::vector<int>;  // low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const int dm = int(m.size()) - 1;
    // m is monic
    while (int(a.size()) - 1 >= dm) {
        int shift = int(a.size()) - 1 - dm;
        int c = a.back();
        for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly monic_from_index(long long idx, int p, int deg) {
    Poly m(deg + 1, 0);
    for (int i = 0; i < deg; ++i) {
        m[i] = int(idx % p);
        idx /= p;
    }
    m[deg] = 1;
    return m;
}

bool irreducible(const Poly& m, int p) {
    const int deg = int(m.size()) - 1;
    for (int d = 1; d <= deg / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx)
            if (poly_mod(m, monic_from_index(idx, p, d), p).empty()) return false;
    }
    return true;
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
    if (!is_prime_power(q, &p_, &e_)) throw std::invalid_argument("order " + std::to_string(q) + " is not a prime power");
    if (q > 256) throw std::invalid_argument("field order above 256 unsupported");
    if (e_ == 1) {
        modulus_ = {0, 1};
    } else {
        long long count = 1;
        for (int i = 0; i < e_; ++i) count *= p_;
        for (long long idx = 0; idx < count; ++idx) {
            auto m = monic_from_index(idx, p_, e_);
            if (irreducible(m, p_)) {
                modulus_ = m;
                break;
            }
        }
    }
    auto digits = [&](int a) {
        Poly d(e_);
        for (int i = 0; i < e_; ++i) d[i] = a % p_, a /= p_;
        return d;
    };
    auto value = [&](const Poly& d) {
        int a = 0;
        for (int i = int(d.size()) - 1; i >= 0; --i) a = a * p_ + d[i];
        return a;
    };
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        auto da = digits(a);
        Poly dn(e_);
        for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = value(dn);
        for (int b = 0; b < q; ++b) {
            auto db = digits(b);
            Poly s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[a * q + b] = value(s);
            Poly prod(2 * e_, 0);
            for (int i = 0; i < e_; ++i)
                for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            Poly red = e_ == 1 ? Poly{prod[0] % p_} : poly_mod(prod, modulus_, p_);
            red.resize(e_, 0);
            mul_[a * q + b] = value(red);
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul(a, b) == 1) inv_[a] = b;
}

int GaloisField::inv(int a) const {
    if (a == 0) throw std::domain_error("zero has no inverse");
    return inv_[a];
}

IncidenceDesign galois_plane(int q, PlaneKind kind) {
    GaloisField F(q);
    // canonical representatives, lexicographic over (x, y, z)
    std::vector<std::array<int, 3>> reps;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            for (int z = 0; z < q; ++z) {
                std::array<int, 3> v{x, y, z};
                int lead = x ? x : y ? y : z;
                if (lead == 1) reps.push_back(v);
            }
    const int np = int(reps.size());
    std::vector<VertexSet> lines;
    for (auto& a : reps) {
        VertexSet line;
        for (int i = 0; i < np; ++i) {
            auto& x = reps[i];
            int dot = F.add(F.add(F.mul(a[0], x[0]), F.mul(a[1], x[1])), F.mul(a[2], x[2]));
            if (dot == 0) line.push_back(i);
        }
        lines.push_back(line);
    }
    IncidenceDesign d;
    d.order = q;
    d.kind = kind;
    if (kind == PlaneKind::Projective) {
        d.points = np;
        d.lines = lines;
    } else {
        std::vector<char> gone(np, 0);
        std::vector<char> dropLine(lines.size(), 0);
        if (kind == PlaneKind::Truncated) {
            gone[np - 1] = 1;
            for (std::size_t l = 0; l < lines.size(); ++l)
                if (std::binary_search(lines[l].begin(), lines[l].end(), np - 1)) dropLine[l] = 1;
        } else {
            for (int v : lines[0]) gone[v] = 1;
            dropLine[0] = 1;
        }
        std::vector<int> relabel(np, -1);
        int next = 0;
        for (int i = 0; i < np; ++i)
            if (!gone[i]) relabel[i] = next++;
        d.points = next;
        for (std::size_t l = 0; l < lines.size(); ++l) {
            if (dropLine[l]) continue;
            VertexSet line;
            for (int v : lines[l])
                if (!gone[v]) line.push_back(relabel[v]);
            d.lines.push_back(line);
        }
    }
    check_design(d);
    return d;
}

namespace {

// number of lines through each pair, indexed u * n + v
std::vector<int> pair_counts(const IncidenceDesign& d) {
    std::vector<int> cnt(std::size_t(d.points) * d.points, 0);
    for (auto& l : d.lines)
        for (std::size_t i = 0; i < l.size(); ++i)
            for (std::size_t j = i + 1; j < l.size(); ++j) ++cnt[std::size_t(l[i]) * d.points + l[j]];
    return cnt;
}

int meet(const VertexSet& a, const VertexSet& b) {
    VertexSet c;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
    return int(c.size());
}

}  // namespace

void check_design(const IncidenceDesign& d) {
    const int q = d.order;
    auto fail = [](const std::string& why) { throw std::logic_error("design check failed: " + why); };
    int pts = 0, nl = 0, sz = 0;
    switch (d.kind) {
    case PlaneKind::Projective: pts = q * q + q + 1, nl = pts, sz = q + 1; break;
    case PlaneKind::Truncated: pts = q * q + q, nl = q * q, sz = q + 1; break;
    case PlaneKind::Affine: pts = q * q, nl = q * q + q, sz = q; break;
    }
    if (d.points != pts) fail("point count");
    if (int(d.lines.size()) != nl) fail("line count");
    for (auto& l : d.lines) {
        if (int(l.size()) != sz) fail("line size");
        if (!std::is_sorted(l.begin(), l.end())) fail("unsorted line");
    }
    auto cnt = pair_counts(d);
    for (int u = 0; u < d.points; ++u)
        for (int v = u + 1; v < d.points; ++v) {
            int c = cnt[std::size_t(u) * d.points + v];
            if (c > 1 || (d.kind != PlaneKind::Truncated && c != 1)) fail("pair coverage");
        }
    if (d.kind == PlaneKind::Projective)
        for (std::size_t a = 0; a < d.lines.size(); ++a)
            for (std::size_t b = a + 1; b < d.lines.size(); ++b)
                if (meet(d.lines[a], d.lines[b]) != 1) fail("two lines not meeting in one point");
    if (d.kind == PlaneKind::Affine) {
        auto classes = parallel_classes(d);
        if (int(classes.size()) != q + 1) fail("parallel class count");
        for (auto& cl : classes) {
            std::vector<int> hit(d.points, 0);
            for (int l : cl)
                for (int v : d.lines[l]) ++hit[v];
            for (int h : hit)
                if (h != 1) fail("parallel class is not a partition");
        }
    }
}

std::vector<std::vector<int>> parallel_classes(const IncidenceDesign& d) {
    if (d.kind != PlaneKind::Affine) throw std::invalid_argument("parallel classes need an affine plane");
    std::vector<int> cls(d.lines.size(), -1);
    std::vector<std::vector<int>> out;
    for (std::size_t l = 0; l < d.lines.size(); ++l) {
        if (cls[l] >= 0) continue;
        cls[l] = int(out.size());
        out.push_back({int(l)});
        for (std::size_t m = l + 1; m < d.lines.size(); ++m)
            if (cls[m] < 0 && meet(d.lines[l], d.lines[m]) == 0) {
                bool ok = true;
                for (int o : out.back())
                    if (meet(d.lines[o], d.lines[m]) != 0) ok = false;
                if (ok) {
                    cls[m] = cls[l];
                    out.back().push_back(int(m));
                }
            }
    }
    return out;
}

ColoredHypergraph design_hypergraph(const IncidenceDesign& d) {
    ColoredHypergraph h;
    h.n = d.points;
    h.k = d.lines.empty() ? 0 : int(d.lines[0].size());
    h.r = 0;
    for (auto& l : d.lines) h.add_edge(l);
    if (d.kind == PlaneKind::Truncated) {
        // points that shared a line with the removed point: the complementary pairs never met
        auto cnt = pair_counts(d);
        std::vector<int> cls(d.points, -1);
        std::vector<VertexSet> classes;
        for (int u = 0; u < d.points; ++u) {
            if (cls[u] >= 0) continue;
            cls[u] = int(classes.size());
            classes.push_back({u});
            for (int v = u + 1; v < d.points; ++v)
                if (cls[v] < 0 && cnt[std::size_t(u) * d.points + v] == 0) {
                    cls[v] = cls[u];
                    classes.back().push_back(v);
                }
        }
        h.set_parts(classes);
    }
    h.validate();
    return h;
}

ColoredMultigraph affine_tc_coloring(int r, int alpha) {
    if (r < 3) throw std::invalid_argument("affine coloring needs r >= 3");
    if (alpha < 1) throw std::invalid_argument("alpha must be positive");
    const int q = r - 1;
    if (!is_prime_power(q)) throw std::invalid_argument("no affine plane of order " + std::to_string(q) + " available");
    auto plane = galois_plane(q, PlaneKind::Affine);
    auto classes = parallel_classes(plane);
    const int m = plane.points;
    ColoredMultigraph g(m * alpha, r);
    for (int c = 0; c < int(classes.size()); ++c)
        for (int l : classes[c])
            for (int copy = 0; copy < alpha; ++copy) {
                auto& line = plane.lines[l];
                for (std::size_t i = 0; i < line.size(); ++i)
                    for (std::size_t j = i + 1; j < line.size(); ++j)
                        g.add_edge(copy * m + line[i], copy * m + line[j], c + 1);
            }
    return g;
}

HalfRExample half_r_example(int r, int block_size) {
    if (r < 3) throw std::invalid_argument("half-r example needs r >= 3");
    if (block_size < 1) throw std::invalid_argument("block size must be positive");
    const int s = r / 2 + 1;
    HalfRExample ex;
    for (auto& sub : all_subsets(r, s)) {
        std::vector<int> X;
        for (int x : sub) X.push_back(x + 1);
        ex.block_sets.push_back(X);
    }
    const int nb = int(ex.block_sets.size());
    ex.g = ColoredMultigraph(nb * block_size, r);
    for (int b = 0; b < nb; ++b) {
        VertexSet blk;
        for (int i = 0; i < block_size; ++i) blk.push_back(b * block_size + i);
        ex.blocks.push_back(blk);
    }
    for (int a = 0; a < nb; ++a)
        for (int b = a; b < nb; ++b) {
            std::vector<int> both;
            std::set_intersection(ex.block_sets[a].begin(), ex.block_sets[a].end(), ex.block_sets[b].begin(),
                                  ex.block_sets[b].end(), std::back_inserter(both));
            const int c = both.front();
            for (int u : ex.blocks[a])
                for (int v : ex.blocks[b])
                    if (u < v) ex.g.add_edge(u, v, c);
        }
    return ex;
}

MultipartiteExample multipartite_star_example(int k, int r, int part_size) {
    if (k < 2 || r < 2) throw std::invalid_argument("star example needs k, r >= 2");
    part_size = std::max(part_size, 1);
    MultipartiteExample ex;
    int next = 0;
    for (int i = 0; i < k; ++i) {
        int sz = i == 0 ? std::max(part_size, r) : part_size;
        VertexSet p;
        for (int j = 0; j < sz; ++j) p.push_back(next++);
        ex.parts.push_back(p);
    }
    ex.g = ColoredMultigraph(next, r);
    std::vector<int> part(next);
    for (int i = 0; i < k; ++i)
        for (int v : ex.parts[i]) part[v] = i;
    for (int u = 0; u < next; ++u)
        for (int v = u + 1; v < next; ++v) {
            if (part[u] == part[v]) continue;
            // x_i = vertex i of part 0 for i < r
            int c = u < r ? u + 1 : 1;
            ex.g.add_edge(u, v, c);
        }
    return ex;
}

MultipartiteExample multipartite_alpha2_example(int k) {
    if (k < 3) throw std::invalid_argument("alpha-2 example needs k >= 3");
    constexpr int B = 1, R = 2, G = 3;
    MultipartiteExample ex;
    for (int i = 0; i < k; ++i) ex.parts.push_back({2 * i, 2 * i + 1});
    ex.g = ColoredMultigraph(2 * k, 3);
    const int x1 = 0, x2 = 1, y1 = 2, y2 = 3, z1 = 4, z2 = 5;
    auto tri = [&](int a, int b, int c, int col) {
        ex.g.add_edge(a, b, col);
        ex.g.add_edge(a, c, col);
        ex.g.add_edge(b, c, col);
    };
    tri(x1, y1, z1, B);
    tri(x2, y1, z2, R);
    tri(x2, y2, z1, G);
    ex.g.add_edge(x1, y2, R);
    ex.g.add_edge(y2, z2, B);
    ex.g.add_edge(x1, z2, G);
    for (int w = 6; w < 2 * k; ++w) {
        for (int v : {y1, z2}) ex.g.add_edge(v, w, R);
        for (int v : {x1, z1}) ex.g.add_edge(v, w, B);
        for (int v : {x2, y2}) ex.g.add_edge(v, w, G);
        for (int u = 6; u < w; ++u)
            if (u / 2 != w / 2) ex.g.add_edge(u, w, B);
    }
    return ex;
}

}  // namespace ryser
