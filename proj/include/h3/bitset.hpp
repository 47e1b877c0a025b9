#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "h3/error.hpp"

namespace h3 {

// Fixed-universe bitset packed in 64-bit words, LSB = element 0.
// Trailing bits beyond the universe are always zero.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static Bitset full(int nbits)
    {
        Bitset b(nbits);
        for (auto& w : b.w_)
            w = ~0ULL;
        b.clamp();
        return b;
    }

    int universe() const { return nbits_; }

    void set(int i)
    {
        check(i);
        w_[i >> 6] |= 1ULL << (i & 63);
    }

    void reset(int i)
    {
        check(i);
        w_[i >> 6] &= ~(1ULL << (i & 63));
    }

    bool test(int i) const
    {
        check(i);
        return (w_[i >> 6] >> (i & 63)) & 1ULL;
    }

    int count() const
    {
        int c = 0;
        for (std::uint64_t w : w_)
            c += std::popcount(w);
        return c;
    }

    bool any() const
    {
        for (std::uint64_t w : w_)
            if (w)
                return true;
        return false;
    }

    bool empty_set() const { return !any(); }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }

    // this \ o
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    friend bool operator==(const Bitset& a, const Bitset& b)
    {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }

    bool is_subset_of(const Bitset& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }

    // Visits members in increasing order.
    template <class F>
    void for_each(F f) const
    {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(wi * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> elements() const
    {
        std::vector<int> out;
        out.reserve(16);
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    void check(int i) const
    {
        if (i < 0 || i >= nbits_)
            fail_index(i);
    }

    [[gnu::noinline]] void fail_index(int i) const
    {
        fail(Err::OUT_OF_RANGE, "bitset index " + std::to_string(i) + " outside universe " +
                                    std::to_string(nbits_));
    }

    void clamp()
    {
        int rem = nbits_ & 63;
        if (rem && !w_.empty())
            w_.back() &= (1ULL << rem) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

inline int and_count(const Bitset& a, const Bitset& b)
{
    const auto& wa = a.words();
    const auto& wb = b.words();
    int c = 0;
    for (std::size_t i = 0; i < wa.size(); ++i)
        c += std::popcount(wa[i] & wb[i]);
    return c;
}

inline int and3_count(const Bitset& a, const Bitset& b, const Bitset& c)
{
    const auto& wa = a.words();
    const auto& wb = b.words();
    const auto& wc = c.words();
    int r = 0;
    for (std::size_t i = 0; i < wa.size(); ++i)
        r += std::popcount(wa[i] & wb[i] & wc[i]);
    return r;
}

// |a & ~b|
inline int andnot_count(const Bitset& a, const Bitset& b)
{
    const auto& wa = a.words();
    const auto& wb = b.words();
    int c = 0;
    for (std::size_t i = 0; i < wa.size(); ++i)
        c += std::popcount(wa[i] & ~wb[i]);
    return c;
}

// Subsets of V (columns, Y-side arguments).
using VertexSet = Bitset;
// Subsets of (V choose 2) indexed by PairIndex (rows, X-side arguments).
using PairSet = Bitset;

} // namespace h3
