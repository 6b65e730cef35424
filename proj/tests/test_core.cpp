#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "ryserlab/generators.hpp"
#include "ryserlab/graph.hpp"

using namespace ryser;

namespace {

ColoredMultigraph mono_complete(int n, int c = 1, int r = 1) {
    ColoredMultigraph g(n, r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v, c);
    return g;
}

ColoredMultigraph rainbow_triangle() {
    ColoredMultigraph g(3, 3);
    g.add_edge(0, 1, 1);
    g.add_edge(0, 2, 2);
    g.add_edge(1, 2, 3);
    return g;
}

ColoredMultigraph cycle(int n) {
    ColoredMultigraph g(n, 1);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, 1);
    return g;
}

ColoredMultigraph random_graph(int n, int r, Rng& rng) {
    ColoredMultigraph g(n, r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int c = 1; c <= r; ++c)
                if (rng.below(3) == 0) g.add_edge(u, v, c);
    return g;
}

}  // namespace

TEST_CASE("graph rejects loops and out of range colors") {
    ColoredMultigraph g(3, 2);
    CHECK_THROWS_AS(g.add_edge(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1, 3), std::out_of_range);
    CHECK_THROWS_AS(g.add_edge(0, 3, 1), std::out_of_range);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 0, 2);
    CHECK(g.colors(0, 1) == 3u);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("components of small colorings") {
    ColoredMultigraph m(4, 3);
    m.add_edge(0, 1, 1), m.add_edge(2, 3, 1);
    m.add_edge(0, 2, 2), m.add_edge(1, 3, 2);
    m.add_edge(0, 3, 3), m.add_edge(1, 2, 3);
    CHECK(components(m, 1).parts == std::vector<VertexSet>{{0, 1}, {2, 3}});
    CHECK(components(mono_complete(5), 1).parts == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
    CHECK(components(rainbow_triangle(), 2).parts == std::vector<VertexSet>{{0, 2}, {1}});
    CHECK_THROWS_AS(components(m, 4), std::out_of_range);
}

TEST_CASE("components agree with union-find and partition the vertices") {
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + int(rng.below(12)), r = 1 + int(rng.below(4));
        auto g = random_graph(n, r, rng);
        for (int c = 1; c <= r; ++c) {
            auto lab = oracle::component_labels(g, c);
            auto cs = components(g, c);
            std::vector<int> hit(n, 0);
            for (auto& p : cs.parts)
                for (int v : p) {
                    ++hit[v];
                    CHECK(lab[v] == lab[p.front()]);
                }
            for (int v = 0; v < n; ++v) CHECK(hit[v] == 1);
            int distinct = 0;
            for (int v = 0; v < n; ++v) distinct += lab[v] == v;
            CHECK(int(cs.parts.size()) == distinct);
        }
    }
}

TEST_CASE("closure") {
    ColoredMultigraph path(3, 2);
    path.add_edge(0, 1, 1), path.add_edge(1, 2, 1);
    auto c = closure(path);
    CHECK(c.has(0, 2, 1));
    CHECK(c == closure(c));

    ColoredMultigraph mixed(3, 2);
    mixed.add_edge(0, 1, 1), mixed.add_edge(1, 2, 2);
    CHECK(closure(mixed) == mixed);

    Rng rng(5);
    for (int it = 0; it < 100; ++it) {
        auto g = random_graph(1 + int(rng.below(9)), 3, rng);
        auto cl = closure(g);
        CHECK(is_closed(cl));
        CHECK(closure(cl) == cl);
        for (int c2 = 1; c2 <= 3; ++c2) CHECK(components(cl, c2).parts == components(g, c2).parts);
    }
}

TEST_CASE("diameter") {
    ColoredMultigraph p4(4, 1);
    p4.add_edge(0, 1, 1), p4.add_edge(1, 2, 1), p4.add_edge(2, 3, 1);
    CHECK(diameter(p4, {0, 1, 2, 3}, 1) == 3);
    CHECK(diameter(ColoredMultigraph(2, 1), {0, 1}, 1) == kInf);
    CHECK(diameter(cycle(5), {0, 1, 2, 3, 4}, 1) == 2);
    CHECK(diameter(p4, {2}, 1) == 0);
    CHECK_THROWS_AS(diameter(p4, {}, 1), std::invalid_argument);
    // induced: the middle vertex is missing
    CHECK(diameter(p4, {0, 2, 3}, 1) == kInf);

    Rng rng(9);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + int(rng.below(9));
        auto g = random_graph(n, 2, rng);
        std::uint64_t mask = 1 + rng.below((std::uint64_t{1} << n) - 1);
        int want = oracle::induced_diameter(g, mask, 1);
        int got = diameter(g, oracle::members(mask), 1);
        CHECK(got == (want < 0 ? kInf : want));
    }
}

TEST_CASE("alpha") {
    CHECK(alpha(mono_complete(6)).size == 1);
    CHECK(alpha(ColoredMultigraph(4, 1)).size == 4);
    auto c5 = alpha(cycle(5));
    CHECK(c5.size == 2);
    CHECK(c5.size == oracle::alpha(cycle(5)));
    Rng rng(3);
    for (int it = 0; it < 200; ++it) {
        auto g = random_graph(1 + int(rng.below(12)), 2, rng);
        auto a = alpha(g);
        CHECK(a.size == oracle::alpha(g));
        CHECK(int(a.witness.size()) == a.size);
        for (std::size_t i = 0; i < a.witness.size(); ++i)
            for (std::size_t j = i + 1; j < a.witness.size(); ++j) CHECK(!g.adjacent(a.witness[i], a.witness[j]));
    }
}

TEST_CASE("verify") {
    auto k4 = mono_complete(4);
    CoverCertificate cert;
    cert.max_size = 1;
    cert.pieces = {{1, {0, 1, 2, 3}, {}}};
    CHECK(verify(k4, cert).ok);

    cert.pieces = {{1, {0, 1, 2}, {}}};
    auto rep = verify(k4, cert);
    CHECK_FALSE(rep.ok);
    CHECK(rep.vertex == 3);

    ColoredMultigraph p5(5, 1);
    for (int i = 0; i < 4; ++i) p5.add_edge(i, i + 1, 1);
    CoverCertificate d;
    d.max_diam = 3;
    d.pieces = {{1, {0, 1, 2, 3, 4}, {}}};
    rep = verify(p5, d);
    CHECK_FALSE(rep.ok);
    CHECK(rep.message.find("diameter") != std::string::npos);

    CoverCertificate part;
    part.mode = CoverCertificate::Mode::Partition;
    part.pieces = {{1, {0, 1, 2}, {}}, {1, {2, 3}, {}}};
    CHECK_FALSE(verify(k4, part).ok);

    CoverCertificate colors;
    colors.allowed = color_bit(2);
    colors.pieces = {{1, {0, 1, 2, 3}, {}}};
    CHECK_FALSE(verify(k4, colors).ok);
}

TEST_CASE("verify matches a from-scratch recheck") {
    Rng rng(21);
    for (int it = 0; it < 400; ++it) {
        int n = 2 + int(rng.below(6));
        auto g = random_graph(n, 2, rng);
        CoverCertificate cert;
        cert.mode = rng.coin() ? CoverCertificate::Mode::Cover : CoverCertificate::Mode::Partition;
        if (rng.coin()) cert.max_diam = int(rng.below(3)) + 1;
        int k = 1 + int(rng.below(3));
        for (int i = 0; i < k; ++i) {
            std::uint64_t mask = 1 + rng.below((std::uint64_t{1} << n) - 1);
            cert.pieces.push_back({1 + int(rng.below(2)), oracle::members(mask), {}});
        }
        bool want = true;
        std::uint64_t covered = 0;
        for (auto& p : cert.pieces) {
            std::uint64_t m = 0;
            for (int v : p.vertices) m |= std::uint64_t{1} << v;
            int dd = oracle::induced_diameter(g, m, p.color);
            if (dd < 0 || (cert.max_diam >= 0 && dd > cert.max_diam)) want = false;
            if (cert.mode == CoverCertificate::Mode::Partition && (covered & m)) want = false;
            covered |= m;
        }
        if (covered != (std::uint64_t{1} << n) - 1) want = false;
        CHECK(verify(g, cert).ok == want);
    }
}

TEST_CASE("min diameter tree") {
    Rng rng(4);
    for (int it = 0; it < 100; ++it) {
        auto g = random_complete(2 + int(rng.below(10)), 3, rng);
        auto vs = component_of(g, 1, 0);
        auto t = min_diameter_tree(g, vs, 1);
        CHECK(int(t.edges.size()) == int(vs.size()) - 1);
        CHECK(t.diameter == tree_diameter(g.n(), t.edges));
        CHECK(t.diameter >= diameter(g, vs, 1));
        CHECK(t.diameter <= 2 * diameter(g, vs, 1));
        for (auto [u, v] : t.edges) CHECK(g.has(u, v, 1));
    }
}
