#include "ryserlab/combinatorics.hpp"

#include <stdexcept>

namespace ryser {

std::int64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t rank_subset(const std::vector<int>& s) {
    std::int64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += binom(s[i], int(i) + 1);
    return r;
}

std::vector<int> unrank_subset(std::int64_t rank, int k) {
    std::vector<int> s(k);
    for (int i = k; i >= 1; --i) {
        int x = i - 1;
        while (binom(x + 1, i) <= rank) ++x;
        s[i - 1] = x;
        rank -= binom(x, i);
    }
    return s;
}

std::vector<std::vector<int>> all_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::int64_t total = binom(n, k);
    out.reserve(std::size_t(total));
    for (std::int64_t i = 0; i < total; ++i) out.push_back(unrank_subset(i, k));
    return out;
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& s, int k) {
    std::vector<std::vector<int>> out;
    const int n = int(s.size());
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<int> cur(k);
        for (int i = 0; i < k; ++i) cur[i] = s[idx[i]];
        out.push_back(std::move(cur));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace ryser
