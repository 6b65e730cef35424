#include <set>
#include <tuple>

#include "doctest.h"
#include "ryserlab/constructions.hpp"
#include "ryserlab/exact.hpp"

using namespace ryser;

TEST_CASE("prime powers and fields") {
    int p = 0, e = 0;
    CHECK(is_prime_power(8, &p, &e));
    CHECK(p == 2);
    CHECK(e == 3);
    CHECK_FALSE(is_prime_power(6));
    CHECK_FALSE(is_prime_power(1));
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        GaloisField f(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.mul(a, 1) == a);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
    CHECK_THROWS_AS(GaloisField(6), std::invalid_argument);
}

TEST_CASE("projective planes") {
    for (int q : {2, 3, 4, 5, 7, 8}) {
        auto d = galois_plane(q, PlaneKind::Projective);
        CHECK_NOTHROW(check_design(d));
        const int n = q * q + q + 1;
        CHECK(d.points == n);
        CHECK(int(d.lines.size()) == n);
        std::vector<int> pair(n * n, 0);
        for (auto& l : d.lines) {
            CHECK(int(l.size()) == q + 1);
            for (std::size_t i = 0; i < l.size(); ++i)
                for (std::size_t j = i + 1; j < l.size(); ++j) ++pair[l[i] * n + l[j]];
        }
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) CHECK(pair[a * n + b] == 1);
        for (std::size_t a = 0; a < d.lines.size(); ++a)
            for (std::size_t b = a + 1; b < d.lines.size(); ++b) {
                VertexSet m;
                std::set_intersection(d.lines[a].begin(), d.lines[a].end(), d.lines[b].begin(), d.lines[b].end(),
                                      std::back_inserter(m));
                CHECK(m.size() == 1);
            }
    }
    CHECK_THROWS_AS(galois_plane(6, PlaneKind::Projective), std::invalid_argument);
}

TEST_CASE("truncated and affine planes") {
    auto a = galois_plane(3, PlaneKind::Affine);
    CHECK(a.points == 9);
    CHECK(a.lines.size() == 12);
    CHECK(parallel_classes(a).size() == 4);
    for (int q : {2, 3, 4}) {
        auto t = galois_plane(q, PlaneKind::Truncated);
        CHECK(t.points == q * q + q);
        CHECK(int(t.lines.size()) == q * q);
        auto h = design_hypergraph(t);
        auto tn = tau_nu(h);
        CHECK(tn.tau == q);
        CHECK(tn.nu == 1);
        auto g = hypergraph_to_graph(h);
        CHECK(tau_nu(h).tau == tc_exact(g).size);
    }
}

TEST_CASE("affine colorings") {
    auto k4 = affine_tc_coloring(3, 1);
    CHECK(k4.n() == 4);
    CHECK(tc_exact(k4).size == 2);
    auto two = affine_tc_coloring(3, 2);
    CHECK(two.n() == 8);
    CHECK(alpha(two).size == 2);
    CHECK(tc_exact(two).size == 4);
    auto nine = affine_tc_coloring(4, 1);
    CHECK(nine.n() == 9);
    CHECK(tc_exact(nine).size == 3);

    // every color class is one parallel class of lines
    auto plane = galois_plane(3, PlaneKind::Affine);
    auto classes = parallel_classes(plane);
    std::set<std::set<VertexSet>> want, got;
    for (auto& cls : classes) {
        std::set<VertexSet> lines;
        for (int l : cls) lines.insert(plane.lines[l]);
        want.insert(lines);
    }
    for (int c = 1; c <= 4; ++c) {
        auto parts = components(nine, c).parts;
        got.insert(std::set<VertexSet>(parts.begin(), parts.end()));
    }
    CHECK(got == want);
}

TEST_CASE("half-r examples need two colors") {
    for (auto [r, b, t] : {std::tuple{4, 4, 3}, std::tuple{3, 3, 2}}) {
        auto ex = half_r_example(r, b);
        CHECK(ex.g.n() == int(ex.blocks.size()) * b);
        auto all = tc_exact(ex.g);
        REQUIRE(all.status == Status::Optimal);
        CHECK(all.size <= t);
        for (int c = 1; c <= r; ++c) {
            TcConstraints one;
            one.allowed = color_bit(c);
            auto res = tc_exact(ex.g, one);
            CHECK((res.status == Status::Infeasible || res.size > t));
        }
    }
}

TEST_CASE("multipartite examples") {
    for (auto [k, r] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}}) {
        auto ex = multipartite_star_example(k, r);
        CHECK(ex.parts.size() == std::size_t(k));
        CHECK(tc_exact(ex.g).size == r);
    }
    for (int k = 3; k <= 4; ++k) {
        auto ex = multipartite_alpha2_example(k);
        CHECK(alpha(ex.g).size == 2);
        CHECK(tc_exact(ex.g).size == 3);
    }
}
