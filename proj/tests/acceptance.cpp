// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers as arguments
// to run a subset; no arguments runs all eight.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ryserlab/combinatorics.hpp"
#include "ryserlab/constructions.hpp"
#include "ryserlab/constructive.hpp"
#include "ryserlab/exact.hpp"
#include "ryserlab/generators.hpp"
#include "ryserlab/goodpart.hpp"
#include "ryserlab/hypercover.hpp"
#include "ryserlab/signatures.hpp"

using namespace ryser;

namespace {

// Pinned parameters.
constexpr int kSuiteInstances = 1000;     // per constructive setting
constexpr int kDualityInstances = 500;
constexpr int kWordSetInstances = 10000;
constexpr int kTightRandom = 10000;
constexpr int kFurediInstances = 1000;
constexpr double kOpenCellSeconds = 300;  // budget for Z(3,5) and Z(4,4)

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Tally {
    bool pass = true;
    std::ostringstream notes;
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) notes << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

std::set<std::string> strs(const std::vector<SignatureSet>& v) {
    std::set<std::string> s;
    for (auto& x : v) s.insert(x.str());
    return s;
}

Outcome criterion1() {
    Tally t;
    auto a = signature_census(5, 3);
    t.expect(a.candidates == 84, "enumerate(5,3) = " + std::to_string(a.candidates));
    t.expect(a.valid.size() == 37, "valid(5,3) = " + std::to_string(a.valid.size()));
    t.expect(strs(a.residual) == std::set<std::string>{"(3,2),(3,2),(3,2)", "(4,1),(3,2),(3,2)"}, "residual(5,3)");
    auto b = signature_census(6, 4);
    t.expect(b.candidates == 1001, "enumerate(6,4) = " + std::to_string(b.candidates));
    t.expect(b.valid.size() == 560, "valid(6,4) = " + std::to_string(b.valid.size()));
    t.expect(b.residual.size() == 173, "residual(6,4) = " + std::to_string(b.residual.size()));
    std::ifstream f(RYSERLAB_DATA_DIR "/tab_r6.txt");
    std::set<std::string> table;
    for (std::string line; std::getline(f, line);)
        if (!line.empty()) table.insert(parse_signature(line).str());
    t.expect(table.size() == 173 && strs(b.residual) == table, "residual(6,4) differs from the table fixture");
    t.notes << "(5,3): 84/" << a.valid.size() << "/" << a.residual.size() << ", (6,4): " << b.candidates << "/"
            << b.valid.size() << "/" << b.residual.size();
    return {t.pass, t.notes.str()};
}

Outcome criterion2() {
    Tally t;
    struct Cell {
        int r, d, value;
    };
    std::vector<Cell> cells{{2, 1, 2}, {2, 2, 4}, {2, 3, 8}, {2, 4, 16}, {2, 5, 32}, {3, 2, 3}, {3, 3, 5},
                            {3, 4, 8}, {4, 2, 3}, {4, 3, 4}, {5, 1, 2}, {5, 2, 3}, {5, 3, 4}, {5, 4, 5}};
    for (int r = 2; r <= 6; ++r) cells.push_back({r, 1, 2});
    for (auto [r, d, v] : cells) {
        auto z = z_exact(r, d);
        t.expect(z.status == Status::Optimal && z.upper == v && covers_all(z.witness),
                 "Z(" + std::to_string(r) + "," + std::to_string(d) + ") = " + std::to_string(z.upper));
    }
    SolveBudget b;
    b.max_seconds = kOpenCellSeconds;
    auto a = z_exact(3, 5, b);
    auto c = z_exact(4, 4, b);
    t.expect(a.lower >= 11 && a.upper <= 12 && covers_all(a.witness), "Z(3,5) outside [11,12]");
    t.expect(c.lower >= 6 && c.upper <= 7 && covers_all(c.witness), "Z(4,4) outside [6,7]");
    t.notes << cells.size() << " exact cells; Z(3,5) in [" << a.lower << "," << a.upper << "], Z(4,4) in [" << c.lower
            << "," << c.upper << "]";
    return {t.pass, t.notes.str()};
}

Outcome criterion3() {
    Tally t;
    const int m = int(binom(5, 3));
    std::vector<int> colors(m, 1);
    long long checked = 0;
    while (true) {
        auto h = complete_hypergraph(5, 3, 3, colors);
        auto s = tight_spanning(h);
        t.expect(s && s->order() == 5 && verify_cl_cover(h, 1, 2, {*s}).ok, "K_5^3 coloring without spanning component");
        ++checked;
        int i = 0;
        while (i < m && colors[i] == 3) colors[i++] = 1;
        if (i == m) break;
        ++colors[i];
    }
    t.expect(checked == 59049, "checked " + std::to_string(checked));
    Rng rng(3003);
    for (int it = 0; it < kTightRandom; ++it) {
        auto h = random_complete_coloring(7, 3, 3, rng);
        auto s = tight_spanning(h);
        t.expect(s && s->order() == 7, "random K_7^3 coloring without spanning component");
    }
    t.notes << checked << " colorings of K_5^3, " << kTightRandom << " random colorings of K_7^3";
    return {t.pass, t.notes.str()};
}

struct SuiteCheck {
    int size;
    int diam;   // -1: unbounded
    bool trees;
};

void check_cert(Tally& t, const ColoredMultigraph& g, const CoverCertificate& c, SuiteCheck want, const char* tag) {
    auto rep = verify(g, c);
    bool ok = rep.ok && int(c.size()) <= want.size;
    for (auto& p : c.pieces) {
        if (want.diam >= 0) {
            if (want.trees) ok = ok && (p.vertices.size() == 1 || (!p.tree.empty() && tree_diameter(g.n(), p.tree) <= want.diam));
            ok = ok && diameter(g, p.vertices, p.color) <= want.diam;
        } else {
            ok = ok && p.vertices == component_of(g, p.color, p.vertices.front());
        }
    }
    t.expect(ok, std::string(tag) + (rep.ok ? "" : ": " + rep.message));
}

Outcome criterion4() {
    Tally t;
    Rng rng(4004);
    const int N = kSuiteInstances;
    for (int it = 0; it < N; ++it) {
        int n = 3 + it % 58;  // 3..60
        auto g = random_complete(n, 3, rng);
        check_cert(t, g, cover_complete(g, 3), {2, 4, true}, "3-colored K_n");
    }
    for (int it = 0; it < N; ++it) {
        auto g = random_complete(4 + it % 37, 4, rng);
        check_cert(t, g, cover_complete(g, 4), {3, 6, false}, "4-colored K_n");
    }
    for (int it = 0; it < N; ++it) {
        auto m = random_multipartite({1 + it % 15, 1 + (it / 15) % 15}, 2, rng);
        check_cert(t, m.g, classify_bipartite2(m.g, m.parts[0], m.parts[1]).cert, {2, 4, true}, "2-colored bipartite");
    }
    for (int it = 0; it < N; ++it) {
        auto m = random_multipartite({1 + it % 20, 1 + (it / 20) % 20}, 3, rng);
        check_cert(t, m.g, cover_bipartite3(m.g, m.parts[0], m.parts[1]), {4, 6, false}, "3-colored bipartite");
    }
    for (int it = 0; it < N; ++it) {
        auto g = it % 4 == 0 ? matching_complement(2 * (2 + it % 12), 2, rng)
                             : random_alpha2(3 + it % 25, 2, 0.1 + 0.1 * (it % 5), rng);
        check_cert(t, g, cover_alpha2(g), {2, 6, false}, "alpha 2");
    }
    for (int it = 0; it < N; ++it) {
        std::vector<int> sizes(2 + it % 4);
        for (auto& s : sizes) s = 1 + int(rng.below(6));
        auto m = random_multipartite(sizes, 2, rng);
        check_cert(t, m.g, cover_multipartite(m.g, m.parts, 2), {2, -1, false}, "2-colored multipartite");
    }
    for (int it = 0; it < N; ++it) {
        auto m = random_multipartite({1 + int(rng.below(6)), 1 + int(rng.below(6)), 1 + int(rng.below(6))}, 3, rng);
        check_cert(t, m.g, cover_multipartite(m.g, m.parts, 3), {3, -1, false}, "3-colored 3-partite");
    }
    for (int r = 3; r <= 5; ++r)
        for (int it = 0; it < N; ++it) {
            auto g = random_complete(r + it % 16, r, rng);
            int a = 1 + int(rng.below(r)), b = 1 + int(rng.below(r - 1));
            if (b >= a) ++b;
            auto c = restricted_cover(g, r, {std::min(a, b), std::max(a, b)});
            check_cert(t, g, c, {r - 1, -1, false}, "restricted");
            const ColorMask S = color_bit(a) | color_bit(b);
            t.expect((c.used_colors() & ~S) == 0 || (c.used_colors() & S) == 0, "restricted colors on both sides");
        }
    t.notes << N << " instances in each of 10 settings";
    return {t.pass, t.notes.str()};
}

Outcome criterion5() {
    Tally t;
    long long colorings = 0;
    for (int r = 2; r <= 3; ++r)
        for (int n = 1; n <= 5; ++n) {
            HuntOptions o;
            o.n = n, o.r = r, o.alpha_factor = r - 1;
            auto res = hunt(o);
            colorings += res.colorings;
            t.expect(res.status == Status::Optimal, "hunt did not finish");
            t.expect(!res.counterexample, "counterexample at n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
    t.notes << "no counterexample among " << colorings << " canonical colorings (r = 2, 3; n <= 5)";
    return {t.pass, t.notes.str()};
}

Outcome criterion6() {
    Tally t;
    for (int a = 1; a <= 2; ++a)
        t.expect(tc_exact(affine_tc_coloring(3, a)).size == 2 * a, "affine_tc_coloring(3," + std::to_string(a) + ")");
    t.expect(tc_exact(affine_tc_coloring(4, 1)).size == 3, "affine_tc_coloring(4,1)");
    {
        auto ex = half_r_example(4, 4);
        bool ok = tc_exact(ex.g).size <= 3;
        for (int c = 1; c <= 4; ++c) {
            TcConstraints one;
            one.allowed = color_bit(c);
            auto res = tc_exact(ex.g, one);
            ok = ok && (res.status == Status::Infeasible || res.size > 3);
        }
        t.expect(ok, "half_r_example(4) has a single-color 3-cover");
    }
    for (auto [k, r] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}})
        t.expect(tc_exact(multipartite_star_example(k, r).g).size == r,
                 "star example (" + std::to_string(k) + "," + std::to_string(r) + ")");
    for (auto [k, tt] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
        auto b = badmulti_graph(k, tt, 2);
        auto res = tp_exact(b.g);
        t.expect(res.status == Status::Optimal && res.size >= b.tp_lower,
                 "badmulti(" + std::to_string(k) + "," + std::to_string(tt) + ")");
    }
    t.notes << "affine (3,1),(3,2),(4,1); half-r r=4; three star examples; three badmulti instances";
    return {t.pass, t.notes.str()};
}

Outcome criterion7() {
    Tally t;
    Rng rng(7007);
    for (int it = 0; it < kDualityInstances; ++it) {
        int r = 2 + it % 3;
        int part = 1 + int(rng.below(10 / r));
        auto h = random_partite_hypergraph(part, r, 1 + int(rng.below(8)), rng);
        auto g = hypergraph_to_graph(h);
        auto tn = tau_nu(h);
        t.expect(tn.nu == alpha(g).size, "nu != alpha");
        t.expect(tn.tau == tc_exact(g).size, "tau != minimum component cover");
    }
    int words = 0;
    for (int it = 0; it < kWordSetInstances; ++it) {
        int r = 2 + int(rng.below(2));
        int d = 1 + int(rng.below(r == 2 ? 5 : 5));
        WordSet w{r, d, {}};
        std::set<Word> seen;
        int m = 1 + int(rng.below(2 * d + 2));
        for (int j = 0; j < m; ++j) {
            Word x(d);
            for (auto& l : x) l = 1 + int(rng.below(r));
            if (seen.insert(x).second) w.words.push_back(x);
        }
        t.expect(covers_all(w) == gamma_t_check(r, d, w), "covers_all disagrees with gamma_t_check");
        ++words;
    }
    t.notes << kDualityInstances << " hypergraphs, " << words << " word sets";
    return {t.pass, t.notes.str()};
}

Outcome criterion8() {
    Tally t;
    Rng rng(8008);
    int smallest = 12;
    for (int it = 0; it < kFurediInstances; ++it) {
        auto g = random_complete(12, 3, rng);
        int s = mc_graph(g).size;
        smallest = std::min(smallest, s);
        t.expect(s >= 6, "component smaller than 6");
    }
    t.notes << "smallest largest component " << smallest;
    return {t.pass, t.notes.str()};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"signature census", criterion1},   {"Z(r,d) table", criterion2},
        {"tight spanning (1,2)-component", criterion3}, {"constructive cover suites", criterion4},
        {"exhaustive hunt", criterion5},    {"extremal constructions", criterion6},
        {"duality and word-set oracles", criterion7},   {"largest component bound", criterion8}};
    std::set<int> pick;
    for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = int(i) + 1;
        if (!pick.empty() && !pick.count(id)) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d %s: %s (%s; %.1fs)\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
