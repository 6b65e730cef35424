#include "doctest.h"
#include "ryserlab/constructions.hpp"
#include "ryserlab/generators.hpp"
#include "ryserlab/io.hpp"

using namespace ryser;

TEST_CASE("graph format") {
    auto g = parse_graph("cg 3 3\ne 0 1 1\ne 0 2 2\ne 1 2 3\n");
    CHECK(g.n() == 3);
    CHECK(g.has(1, 2, 3));
    CHECK(write_graph(g) == "cg 3 3\ne 0 1 1\ne 0 2 2\ne 1 2 3\n");

    auto merged = parse_graph("# comment\ncg 2 2   # header\ne 1 0 2\n\ne 0 1 1\n");
    CHECK(merged.colors(0, 1) == 3u);
    CHECK(write_graph(merged) == "cg 2 2\ne 0 1 1\ne 0 1 2\n");

    try {
        parse_graph("cg 2 1\ne 0 0 1");
        FAIL("loop accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("loop") != std::string::npos);
    }
    try {
        parse_graph("cg 3 2\ne 0 1 1\ne 0  7 1\n");
        FAIL("bad vertex accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 6);
    }
    CHECK_THROWS_AS(parse_graph("cg 3 2\ne 0 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("cg 3 2\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("cg 3 2\nf 0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("cg x 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("graph round trips") {
    Rng rng(61);
    for (int it = 0; it < 100; ++it) {
        ColoredMultigraph g(1 + int(rng.below(9)), 1 + int(rng.below(4)));
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                for (int c = 1; c <= g.r(); ++c)
                    if (rng.coin()) g.add_edge(u, v, c);
        auto text = write_graph(g);
        CHECK(parse_graph(text) == g);
        CHECK(write_graph(parse_graph(text)) == text);
    }
}

TEST_CASE("hypergraph format") {
    const char* fano =
        "hg 7 3 0\n"
        "e 1 3 5\ne 0 3 4\ne 2 3 6\ne 0 1 2\ne 1 4 6\ne 0 5 6\ne 2 4 5\n";
    auto h = parse_hypergraph(fano);
    auto d = design_hypergraph(galois_plane(2, PlaneKind::Projective));
    CHECK(h == d);
    CHECK(write_hypergraph(h) == fano);

    auto p = parse_hypergraph("hg 4 0 2\npart 0 0 1\npart 1 2 3\ne 1 0 2\ne 2 1\n");
    CHECK(p.num_parts == 2);
    CHECK(p.edges[1].color == 2);
    CHECK(parse_hypergraph(write_hypergraph(p)) == p);

    CHECK_THROWS_AS(parse_hypergraph("hg 3 2 0\ne 0 1\ne 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("hg 3 2 0\ne 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("hg 4 0 0\npart 0 0 1\npart 1 2 3\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("hg 4 0 0\npart 1 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("hg 4 0 0\ne 0\npart 0 0 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("hg 3 2 2\ne 3 0 1\n"), ParseError);

    Rng rng(62);
    for (int it = 0; it < 50; ++it) {
        auto r = random_partite_hypergraph(3, 3, 6, rng);
        CHECK(parse_hypergraph(write_hypergraph(r)) == r);
    }
}

TEST_CASE("cover format") {
    CoverCertificate c;
    c.mode = CoverCertificate::Mode::Partition;
    c.max_size = 2;
    c.max_diam = 4;
    c.allowed = color_bit(1) | color_bit(3);
    c.pieces = {{1, {0, 1, 2}, {{0, 1}, {1, 2}}}, {3, {3}, {}}};
    auto text = write_cover(c);
    CHECK(text == "cover partition 2\nmaxsize 2\nmaxdiam 4\ncolors 1 3\npiece 1 0 1 2\npiece 3 3\ntree 0 0 1 1 2\n");
    auto back = parse_cover(text);
    CHECK(write_cover(back) == text);
    CHECK(back.pieces[0].tree == c.pieces[0].tree);

    auto plain = parse_cover("cover cover 1\npiece 2 4 3\n");
    CHECK(plain.pieces[0].vertices == VertexSet{3, 4});
    CHECK_THROWS_AS(parse_cover("cover cover 2\npiece 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_cover("cover both 1\npiece 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_cover("cover cover 1\npiece 1 0\ntree 1 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_cover("cover cover 1\npiece 1 0 0\n"), ParseError);
}
