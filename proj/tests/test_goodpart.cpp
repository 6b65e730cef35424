#include "doctest.h"
#include "oracles.hpp"
#include "ryserlab/exact.hpp"
#include "ryserlab/generators.hpp"
#include "ryserlab/goodpart.hpp"

using namespace ryser;

namespace {

WordSet words(int r, int d, std::vector<Word> w) { return WordSet{r, d, std::move(w)}; }

// Every assignment of Y to colors, checked directly.
bool brute_good(const ColoredMultigraph& g, const VertexSet& Y, const VertexSet& Z, int r) {
    std::vector<int> col(Y.size(), 1);
    while (true) {
        bool ok = true;
        for (int z : Z) {
            bool seen = false;
            for (std::size_t i = 0; i < Y.size(); ++i) seen = seen || g.has(z, Y[i], col[i]);
            ok = ok && seen;
        }
        if (ok) return true;
        std::size_t i = 0;
        while (i < col.size() && col[i] == r) col[i++] = 1;
        if (i == col.size()) return false;
        ++col[i];
    }
}

}  // namespace

TEST_CASE("word set validation") {
    CHECK_THROWS_AS(words(2, 2, {{1, 3}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(words(2, 2, {{1}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(words(2, 2, {{1, 2}, {1, 2}}).validate(), std::invalid_argument);
    CHECK(format_word({1, 2, 1}) == "(1,2,1)");
}

TEST_CASE("covers_all named sets") {
    CHECK(covers_all(words(3, 2, {{1, 1}, {2, 2}, {3, 3}})));
    auto w = covers_all_witness(words(3, 2, {{1, 1}}));
    REQUIRE(w);
    CHECK_FALSE(oracle::everywhere_different(*w, Word{1, 1}));
    CHECK(covers_all(words(3, 3, {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {2, 2, 2}, {3, 3, 3}})));
    CHECK(gamma_t_check(3, 2, words(3, 2, {{1, 1}, {2, 2}, {3, 3}})));
    CHECK_FALSE(gamma_t_check(2, 2, words(2, 2, {})));
    CHECK(gamma_t_check(2, 1, words(2, 1, {{1}, {2}})));
}

TEST_CASE("covers_all agrees with total domination and brute force") {
    Rng rng(41);
    for (int it = 0; it < 2000; ++it) {
        int r = 2 + int(rng.below(2)), d = 1 + int(rng.below(r == 2 ? 4 : 3));
        auto all = oracle::all_words(r, d);
        std::vector<Word> pick;
        for (auto& w : all)
            if (rng.below(3) == 0) pick.push_back(w);
        WordSet ws{r, d, pick};
        bool c = covers_all(ws);
        CHECK(c == gamma_t_check(r, d, ws));
        CHECK(c == oracle::covers(pick, r, d));
    }
}

TEST_CASE("z_exact against brute force on small cases") {
    for (auto [r, d] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 1}, std::pair{3, 2},
                        std::pair{4, 2}, std::pair{3, 3}}) {
        auto z = z_exact(r, d);
        REQUIRE(z.status == Status::Optimal);
        CHECK(z.upper == oracle::z_brute(r, d));
        CHECK(int(z.witness.words.size()) == z.upper);
        CHECK(covers_all(z.witness));
    }
}

TEST_CASE("z_exact table values") {
    for (int d = 1; d <= 5; ++d) CHECK(z_exact(2, d).upper == (1 << d));
    CHECK(z_exact(3, 2).upper == 3);
    CHECK(z_exact(3, 3).upper == 5);
    CHECK(z_exact(3, 4).upper == 8);
    CHECK(z_exact(4, 2).upper == 3);
    CHECK(z_exact(4, 3).upper == 4);
    for (int d = 1; d <= 4; ++d) CHECK(z_exact(5, d).upper == d + 1);
    for (int r = 2; r <= 6; ++r) CHECK(z_exact(r, 1).upper == 2);
}

TEST_CASE("z_exact structural properties") {
    for (int r = 2; r <= 5; ++r)
        for (int d = 1; d <= 3; ++d) {
            auto z = z_exact(r, d);
            REQUIRE(z.status == Status::Optimal);
            CHECK(z.upper >= d + 1);
            if (r >= d + 1) CHECK(z.upper == d + 1);
            if (r > 2) CHECK(z.upper <= z_exact(r - 1, d).upper);
            CHECK(z.lower == z.upper);
        }
}

TEST_CASE("Z(3,5) and Z(4,4) land inside their known intervals") {
    auto a = z_exact(3, 5);
    CHECK(a.lower >= 11);
    CHECK(a.upper <= 12);
    CHECK(covers_all(a.witness));
    auto b = z_exact(4, 4);
    CHECK(b.lower >= 6);
    CHECK(b.upper <= 7);
    CHECK(covers_all(b.witness));
    // the searches close both cells
    CHECK(a.status == Status::Optimal);
    CHECK(a.upper == 12);
    CHECK(b.status == Status::Optimal);
    CHECK(b.upper == 7);
}

TEST_CASE("column greedy lower bound") {
    CHECK(column_greedy_bound(3, 5) == 12);
    CHECK(column_greedy_bound(3, 4) == 8);
    CHECK(column_greedy_bound(4, 4) == 6);
    for (int d = 1; d <= 5; ++d) CHECK(column_greedy_bound(2, d) == (1 << d));
}

TEST_CASE("good partitions") {
    Rng rng(42);
    for (int it = 0; it < 300; ++it) {
        int y = 1 + int(rng.below(4)), z = 1 + int(rng.below(8)), r = 2 + int(rng.below(2));
        auto m = random_multipartite({y, z}, r, rng);
        auto res = good_partition(m.g, m.parts[0], m.parts[1], r);
        bool want = brute_good(m.g, m.parts[0], m.parts[1], r);
        CHECK((res.status == Status::Optimal) == want);
        if (z == 1) CHECK(want);
        if (res.status == Status::Optimal)
            for (int zz : m.parts[1]) {
                bool seen = false;
                for (int i = 0; i < r; ++i)
                    for (int yy : res.parts[i]) seen = seen || m.g.has(zz, yy, i + 1);
                CHECK(seen);
            }
    }
    // |Z| < 2^|Y| always has one for r = 2
    for (int it = 0; it < 50; ++it) {
        auto m = random_multipartite({3, 7}, 2, rng);
        CHECK(good_partition(m.g, m.parts[0], m.parts[1], 2).status == Status::Optimal);
    }
}

TEST_CASE("bad bipartite colorings") {
    auto b = bad_bipartite_coloring(2, 4);
    CHECK(b.blocks.size() == 4);
    for (auto& blk : b.blocks) CHECK(blk.size() == 1);
    CHECK(good_partition(b.g, b.Y, b.Z, 2).status == Status::Infeasible);
    auto s = bad_bipartite_coloring(1, 2);
    CHECK(s.blocks == std::vector<VertexSet>{{1}, {2}});
    CHECK(good_partition(s.g, s.Y, s.Z, 2).status == Status::Infeasible);
    auto e = bad_bipartite_coloring(2, 8);
    for (auto& blk : e.blocks) CHECK(blk.size() == 2);
}

TEST_CASE("badmulti lower bounds") {
    auto a = badmulti_graph(2, 1, 2);
    CHECK(a.tp_lower == 2);
    CHECK(tp_exact(a.g).size >= 2);
    auto b = badmulti_graph(2, 2, 2);
    CHECK(b.g.n() == 14);
    CHECK(b.tp_lower == 3);
    CHECK(tp_exact(b.g).size >= 3);
    auto c = badmulti_graph(3, 1, 2);
    CHECK(tp_exact(c.g).size >= c.tp_lower);
    CHECK(c.tp_lower >= 2);
}
