#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ryser {

// Seeded generator with a fully specified stream: std::mt19937_64 output, bounded
// integers by rejection. Recorded in run manifests as kRngAlgorithm.
inline constexpr const char* kRngAlgorithm = "mt19937_64+rejection";

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do x = eng_();
        while (x >= limit);
        return x % n;
    }
    int uniform(int lo, int hi) { return lo + int(below(std::uint64_t(hi - lo + 1))); }
    bool coin() { return (eng_() >> 63) != 0; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace ryser
