#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ryserlab/bits.hpp"
#include "ryserlab/duality.hpp"
#include "ryserlab/graph.hpp"

namespace ryser {

struct SolveBudget {
    long long max_nodes = -1;   // -1: unlimited
    double max_seconds = -1;    // -1: unlimited
    int threads = 1;
};

enum class Status { Optimal, Infeasible, Inconclusive };
const char* to_string(Status s);

// Shared node/time accounting; cheap to poll from hot loops.
class BudgetClock {
public:
    explicit BudgetClock(const SolveBudget& b);
    // Returns false once the budget is exhausted (sticky).
    bool tick();
    bool exhausted() const { return stop_.load(std::memory_order_relaxed); }
    long long nodes() const { return nodes_.load(std::memory_order_relaxed); }

private:
    SolveBudget b_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<long long> nodes_{0};
    std::atomic<bool> stop_{false};
};

struct SetCoverResult {
    Status status = Status::Inconclusive;
    int size = -1;              // best cover found (-1 when none)
    int lower = 0;              // proven lower bound
    std::vector<int> chosen;    // indices into the input family
    int uncoverable = -1;       // element contained in no set (Infeasible)
    long long nodes = 0;
};

// Minimum set cover of {0..universe-1} by the given family. Deterministic for any thread count.
SetCoverResult solve_set_cover(int universe, const std::vector<Bits>& sets, const SolveBudget& budget = {});

struct TcConstraints {
    int max_diam = -1;       // -1: whole components
    ColorMask allowed = 0;   // 0: all colors
};

struct CoverResult {
    Status status = Status::Inconclusive;
    int size = -1;
    int lower = 0;
    CoverCertificate cert;
    int witness_vertex = -1;  // infeasibility witness
    long long nodes = 0;
};

// Candidate pieces used by tc_exact: whole components, or maximal diameter-bounded subsets of them.
std::vector<CoverCertificate::Piece> cover_candidates(const ColoredMultigraph& g, const TcConstraints& cons);

CoverResult tc_exact(const ColoredMultigraph& g, const TcConstraints& cons = {}, const SolveBudget& budget = {});
CoverResult tp_exact(const ColoredMultigraph& g, const SolveBudget& budget = {});

struct TauNu {
    int tau = 0;
    std::vector<int> cover;      // vertices
    int nu = 0;
    std::vector<int> matching;   // edge indices
};

TauNu tau_nu(const ColoredHypergraph& h);

struct McResult {
    int size = 0;
    int color = 0;
    VertexSet vertices;
};

McResult mc_graph(const ColoredMultigraph& g);

struct ClCoverResult {
    Status status = Status::Inconclusive;
    int size = -1;
    std::vector<std::pair<int, std::size_t>> pieces;  // (color, index into cl_components output)
};

ClCoverResult tc_cl_exact(const ColoredHypergraph& h, int c, int ell, const SolveBudget& budget = {});

struct HuntOptions {
    int n = 0;
    int r = 2;
    int bound = -1;            // fixed bound; ignored when alpha_factor > 0
    int alpha_factor = 0;      // bound = alpha_factor * alpha(G) when > 0
    bool use_filters = true;
    bool complete_only = true;  // colorings of K_n; otherwise any closed graph on n vertices
    SolveBudget budget;
};

struct HuntResult {
    Status status = Status::Inconclusive;  // Optimal: search completed
    std::optional<ColoredMultigraph> counterexample;
    int counterexample_tc = -1;
    long long colorings = 0;        // canonical colorings examined
    long long filtered = 0;         // pruned by necessary-property filters
    long long nodes = 0;
};

// Searches closed r-colorings of K_n (up to vertex and color permutation) for tc_r > bound.
HuntResult hunt(const HuntOptions& opt);

}  // namespace ryser
