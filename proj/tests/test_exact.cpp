#include "doctest.h"
#include "oracles.hpp"
#include "ryserlab/constructions.hpp"
#include "ryserlab/exact.hpp"
#include "ryserlab/generators.hpp"
#include "ryserlab/goodpart.hpp"
#include "ryserlab/hypercover.hpp"

using namespace ryser;

namespace {

ColoredMultigraph mono_complete(int n) {
    ColoredMultigraph g(n, 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v, 1);
    return g;
}

ColoredMultigraph rainbow_triangle() {
    ColoredMultigraph g(3, 3);
    g.add_edge(0, 1, 1), g.add_edge(0, 2, 2), g.add_edge(1, 2, 3);
    return g;
}

ColoredMultigraph random_sparse(int n, int r, Rng& rng) {
    ColoredMultigraph g(n, r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(3)) g.add_edge(u, v, 1 + int(rng.below(r)));
    return g;
}

}  // namespace

TEST_CASE("set cover solver against exhaustive search") {
    Rng rng(1);
    for (int it = 0; it < 200; ++it) {
        int u = 1 + int(rng.below(10)), m = 1 + int(rng.below(8));
        std::vector<Bits> sets(m, Bits(u));
        for (auto& s : sets)
            for (int e = 0; e < u; ++e)
                if (rng.below(3) == 0) s.set(e);
        int best = -1;
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
            Bits cov(u);
            for (int i : oracle::members(pick)) cov |= sets[i];
            int k = int(oracle::members(pick).size());
            if (cov.count() == u && (best < 0 || k < best)) best = k;
        }
        auto res = solve_set_cover(u, sets);
        if (best < 0) {
            CHECK(res.status == Status::Infeasible);
            CHECK(res.uncoverable >= 0);
        } else {
            REQUIRE(res.status == Status::Optimal);
            CHECK(res.size == best);
        }
    }
}

TEST_CASE("tc_exact named values") {
    CHECK(tc_exact(mono_complete(6)).size == 1);
    auto aff = affine_tc_coloring(3, 1);
    auto a = tc_exact(aff);
    CHECK(a.size == 2);
    CHECK(verify(aff, a.cert).ok);
    CHECK(tc_exact(rainbow_triangle()).size == 2);

    // Vertex 2 has no color 1 edge, so it is a trivial color 1 component of its own.
    TcConstraints only1;
    only1.allowed = color_bit(1);
    auto one = tc_exact(rainbow_triangle(), only1);
    CHECK(one.status == Status::Optimal);
    CHECK(one.size == 2);

    TcConstraints none;
    none.allowed = color_bit(4);
    auto inf = tc_exact(rainbow_triangle(), none);
    CHECK(inf.status == Status::Infeasible);
    CHECK(inf.witness_vertex == 0);
}

TEST_CASE("tc_exact and tp_exact against brute force") {
    Rng rng(2);
    for (int it = 0; it < 150; ++it) {
        int n = 1 + int(rng.below(7)), r = 1 + int(rng.below(3));
        auto g = random_sparse(n, r, rng);
        auto tc = tc_exact(g);
        REQUIRE(tc.status == Status::Optimal);
        CHECK(tc.size == oracle::min_cover(g, false));
        CHECK(verify(g, tc.cert).ok);
        CHECK(tc.size <= r * alpha(g).size);

        auto tp = tp_exact(g);
        REQUIRE(tp.status == Status::Optimal);
        CHECK(tp.size == oracle::min_cover(g, true));
        CHECK(tp.cert.mode == CoverCertificate::Mode::Partition);
        CHECK(verify(g, tp.cert).ok);
        CHECK(tp.size >= tc.size);

        TcConstraints cons;
        cons.max_diam = 1 + int(rng.below(2));
        if (rng.coin()) cons.allowed = color_bit(1) | (r > 1 ? color_bit(2) : 0);
        auto cd = tc_exact(g, cons);
        int want = oracle::min_cover(g, false, cons.max_diam, cons.allowed);
        if (want < 0) {
            CHECK(cd.status == Status::Infeasible);
        } else {
            REQUIRE(cd.status == Status::Optimal);
            CHECK(cd.size == want);
            CHECK(verify(g, cd.cert).ok);
        }
    }
}

TEST_CASE("closure preserves tc and tp") {
    Rng rng(3);
    for (int it = 0; it < 100; ++it) {
        auto g = random_sparse(1 + int(rng.below(7)), 2, rng);
        auto cl = closure(g);
        CHECK(tc_exact(g).size == tc_exact(cl).size);
        CHECK(tp_exact(g).size == tp_exact(cl).size);
    }
}

TEST_CASE("tp_2 is at most alpha") {
    Rng rng(4);
    for (int it = 0; it < 150; ++it) {
        auto g = random_sparse(1 + int(rng.below(6)), 2, rng);
        CHECK(tp_exact(g).size <= alpha(g).size);
    }
    Rng rng2(5);
    for (int it = 0; it < 50; ++it) {
        auto g = random_complete(2 + int(rng2.below(8)), 2, rng2);
        CHECK(tp_exact(g).size == 1);
    }
    CHECK(tp_exact(affine_tc_coloring(3, 1)).size == 2);
    auto bm = badmulti_graph(2, 1, 2);
    CHECK(tp_exact(bm.g).size >= 2);
}

TEST_CASE("solvers do not depend on the thread count") {
    Rng rng(6);
    for (int it = 0; it < 30; ++it) {
        auto g = random_complete(8, 3, rng);
        SolveBudget one, four;
        four.threads = 4;
        auto a = tc_exact(g, {}, one), b = tc_exact(g, {}, four);
        CHECK(a.size == b.size);
        CHECK(a.cert.pieces.size() == b.cert.pieces.size());
        for (std::size_t i = 0; i < a.cert.pieces.size() && i < b.cert.pieces.size(); ++i)
            CHECK(a.cert.pieces[i].vertices == b.cert.pieces[i].vertices);
    }
}

TEST_CASE("a tiny node budget is reported as inconclusive") {
    Rng rng(7);
    auto g = random_complete(20, 4, rng);
    SolveBudget b;
    b.max_nodes = 1;
    TcConstraints cons;
    cons.max_diam = 1;
    auto res = tc_exact(g, cons, b);
    CHECK(res.status == Status::Inconclusive);
    CHECK(res.lower <= res.size);
}

TEST_CASE("tau and nu") {
    auto fano = design_hypergraph(galois_plane(2, PlaneKind::Projective));
    auto tn = tau_nu(fano);
    CHECK(tn.nu == 1);
    CHECK(tn.tau == 3);
    CHECK(tn.tau == oracle::tau(fano));
    auto trunc = design_hypergraph(galois_plane(2, PlaneKind::Truncated));
    CHECK(tau_nu(trunc).tau == 2);
    CHECK(tau_nu(trunc).nu == 1);

    Rng rng(8);
    for (int it = 0; it < 200; ++it) {
        int r = 2 + int(rng.below(2));
        auto h = random_partite_hypergraph(1 + int(rng.below(3)), r, 1 + int(rng.below(6)), rng);
        auto t = tau_nu(h);
        CHECK(t.tau == oracle::tau(h));
        CHECK(t.nu == oracle::nu(h));
        CHECK(t.nu <= t.tau);
        CHECK(t.tau <= (r - 1) * t.nu);
        for (auto& e : h.edges) {
            bool hit = false;
            for (int v : e.vertices) hit = hit || std::count(t.cover.begin(), t.cover.end(), v);
            CHECK(hit);
        }
    }
}

TEST_CASE("largest monochromatic component") {
    auto k7 = mono_complete(7);
    auto m = mc_graph(k7);
    CHECK(m.size == 7);
    CHECK(m.color == 1);
    CHECK(mc_graph(affine_tc_coloring(3, 1)).size == 2);
    Rng rng(9);
    for (int it = 0; it < 100; ++it) {
        auto g = random_complete(12, 3, rng);
        CHECK(mc_graph(g).size >= 6);
    }
}

TEST_CASE("tc_cl_exact") {
    auto mono = complete_hypergraph(4, 3, 1, std::vector<int>(4, 1));
    CHECK(tc_cl_exact(mono, 1, 2).size == 1);
    CHECK_THROWS_AS(tc_cl_exact(mono, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(tc_cl_exact(mono, 1, 3), std::invalid_argument);
    Rng rng(10);
    for (int it = 0; it < 50; ++it) {
        auto h = random_complete_coloring(5, 3, 3, rng);
        CHECK(tc_cl_exact(h, 1, 2).size == 1);
    }
}

TEST_CASE("hunt") {
    for (int n = 2; n <= 5; ++n) {
        HuntOptions o;
        o.n = n, o.r = 2, o.alpha_factor = 1;
        auto res = hunt(o);
        CHECK(res.status == Status::Optimal);
        CHECK_FALSE(res.counterexample);
    }
    HuntOptions aff;
    aff.n = 4, aff.r = 3, aff.bound = 1;
    auto found = hunt(aff);
    REQUIRE(found.counterexample);
    CHECK(found.counterexample_tc == 2);
    CHECK(tc_exact(*found.counterexample).size == 2);

    // without filters the search sees more colorings but reaches the same verdict
    HuntOptions raw;
    raw.n = 4, raw.r = 3, raw.alpha_factor = 2, raw.use_filters = false;
    auto res = hunt(raw);
    CHECK(res.status == Status::Optimal);
    CHECK_FALSE(res.counterexample);
}
