#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ryser {

// Small dynamic bitset used by the search routines.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    bool any() const { return !none(); }

    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        std::size_t k = std::size_t(i) >> 6;
        std::uint64_t x = w_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (x) return int(k * 64) + std::countr_zero(x);
            if (++k >= w_.size()) return -1;
            x = w_[k];
        }
    }

    int and_count(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& minus(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const Bits& o) const { return w_ < o.w_; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

inline Bits full_bits(int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
}

inline Bits operator-(Bits a, const Bits& b) {
    a.minus(b);
    return a;
}

}  // namespace ryser
