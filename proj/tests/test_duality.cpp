#include "doctest.h"
#include "oracles.hpp"
#include "ryserlab/constructions.hpp"
#include "ryserlab/duality.hpp"
#include "ryserlab/exact.hpp"
#include "ryserlab/generators.hpp"

using namespace ryser;

namespace {

ColoredHypergraph matching(int m) {
    ColoredHypergraph h;
    h.n = 2 * m, h.k = 2;
    std::vector<VertexSet> parts(2);
    for (int i = 0; i < m; ++i) {
        parts[0].push_back(2 * i);
        parts[1].push_back(2 * i + 1);
    }
    h.set_parts(parts);
    for (int i = 0; i < m; ++i) h.add_edge({2 * i, 2 * i + 1});
    return h;
}

}  // namespace

TEST_CASE("graph to hypergraph on tiny colorings") {
    ColoredMultigraph tri(3, 3);
    tri.add_edge(0, 1, 1), tri.add_edge(0, 2, 2), tri.add_edge(1, 2, 3);
    auto d = graph_to_hypergraph(tri);
    CHECK(d.h.n == 3);
    REQUIRE(d.h.edges.size() == 3);
    for (auto& e : d.h.edges) CHECK(e.vertices.size() == 2);
    CHECK(d.components[0] == std::pair<int, VertexSet>{1, {0, 1}});
    CHECK(d.components[1] == std::pair<int, VertexSet>{2, {0, 2}});
    CHECK(d.components[2] == std::pair<int, VertexSet>{3, {1, 2}});

    ColoredMultigraph k3(3, 1);
    k3.add_edge(0, 1, 1), k3.add_edge(0, 2, 1), k3.add_edge(1, 2, 1);
    auto d3 = graph_to_hypergraph(k3);
    CHECK(d3.h.n == 1);
    REQUIRE(d3.h.edges.size() == 1);
    CHECK(d3.h.edges[0].vertices == VertexSet{0});

    ColoredMultigraph k2(2, 2);
    k2.add_colors(0, 1, 3);
    auto d2 = graph_to_hypergraph(k2);
    CHECK(d2.h.n == 2);
    REQUIRE(d2.h.edges.size() == 1);
    CHECK(d2.h.edges[0].vertices == VertexSet{0, 1});
}

TEST_CASE("hypergraph to graph") {
    auto trunc = design_hypergraph(galois_plane(2, PlaneKind::Truncated));
    REQUIRE(trunc.edges.size() == 4);
    auto g = hypergraph_to_graph(trunc);
    CHECK(g.n() == 4);
    CHECK(g.r() == 3);
    CHECK(alpha(g).size == 1);
    CHECK(is_closed(g));

    auto two = matching(2);
    auto g2 = hypergraph_to_graph(two);
    CHECK(g2.edge_count() == 0);

    auto m5 = matching(5);
    auto g5 = hypergraph_to_graph(m5);
    CHECK(alpha(g5).size == 5);
    CHECK(oracle::nu(m5) == 5);

    ColoredHypergraph bare;
    bare.n = 2;
    bare.add_edge({0, 1});
    CHECK_THROWS_AS(hypergraph_to_graph(bare), std::invalid_argument);
}

TEST_CASE("check_duality on named instances") {
    auto trunc = design_hypergraph(galois_plane(2, PlaneKind::Truncated));
    auto rep = check_duality(trunc, hypergraph_to_graph(trunc));
    CHECK(rep.ok);
    CHECK(rep.nu == 1);
    CHECK(rep.alpha == 1);
    CHECK(rep.tau == 2);
    CHECK(rep.tc == 2);

    auto m3 = matching(3);
    auto r3 = check_duality(m3, hypergraph_to_graph(m3));
    CHECK(r3.ok);
    CHECK(r3.nu == 3);
    CHECK(r3.alpha == 3);

    auto one = matching(1);
    auto r1 = check_duality(one, hypergraph_to_graph(one));
    CHECK(r1.ok);
    CHECK(r1.nu == 1);
    CHECK(r1.tau == 1);
    CHECK(r1.tc == 1);
}

TEST_CASE("tau equals the minimum component cover of the dual graph") {
    Rng rng(77);
    for (int it = 0; it < 300; ++it) {
        int r = 2 + int(rng.below(3));
        auto h = random_partite_hypergraph(1 + int(rng.below(10 / r)), r, 1 + int(rng.below(8)), rng);
        auto g = hypergraph_to_graph(h);
        CHECK(oracle::nu(h) == oracle::alpha(g));
        // every vertex of h lying on an edge is a whole component; isolated ones never help
        CHECK(oracle::tau(h) == oracle::min_cover(g, false));
    }
}

TEST_CASE("graph to hypergraph is partite and depends only on the component partitions") {
    Rng rng(8);
    for (int it = 0; it < 200; ++it) {
        auto g = random_complete(2 + int(rng.below(7)), 3, rng);
        auto d = graph_to_hypergraph(g);
        CHECK_NOTHROW(d.h.validate());
        auto cl = closure(g);
        CHECK(graph_to_hypergraph(cl).h == d.h);
    }
}

TEST_CASE("konig cover is minimal among two colors") {
    Rng rng(12);
    for (int it = 0; it < 200; ++it) {
        auto g = random_complete(2 + int(rng.below(7)), 3, rng);
        auto pieces = konig_cover(g, 1, 2);
        CoverCertificate cert;
        cert.pieces = pieces;
        CHECK(verify(g, cert).ok);
        // trivial components are allowed here, so singletons count as pieces
        ColoredMultigraph two(g.n(), 2);
        for (auto& [uv, m] : g.edges()) two.add_colors(uv.first, uv.second, m & 3u);
        CHECK(int(pieces.size()) == oracle::min_cover(two, false));
    }
}
