#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

#include "h3/error.hpp"

namespace h3 {

using Triple = std::array<int, 3>;

inline std::uint64_t binom2(std::uint64_t n) { return n * (n - 1) / 2; }

inline std::uint64_t binom3(std::uint64_t n)
{
    if (n < 3)
        return 0;
    return n * (n - 1) / 2 * (n - 2) / 3;
}

inline std::uint64_t pair_count(int n) { return n < 2 ? 0 : binom2(static_cast<std::uint64_t>(n)); }

// Canonical index of the unordered pair {u, v}: colex order,
// index(u, v) = C(max, 2) + min. Independent of the vertex count, so the
// same pair has the same index in every hypergraph where it exists.
inline int pair_index(int u, int v)
{
    if (u > v)
        std::swap(u, v);
    return static_cast<int>(binom2(static_cast<std::uint64_t>(v))) + u;
}

inline std::pair<int, int> pair_from_index(int idx)
{
    // Largest v with C(v, 2) <= idx.
    int v = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * idx)) / 2.0);
    while (binom2(static_cast<std::uint64_t>(v)) > static_cast<std::uint64_t>(idx))
        --v;
    while (binom2(static_cast<std::uint64_t>(v + 1)) <= static_cast<std::uint64_t>(idx))
        ++v;
    int u = idx - static_cast<int>(binom2(static_cast<std::uint64_t>(v)));
    return {u, v};
}

// Canonical rank of the triple {a, b, c} in the combinatorial number system
// (colex): rank = C(c, 3) + C(b, 2) + a for a < b < c.
inline std::uint64_t triple_rank(int a, int b, int c)
{
    return binom3(static_cast<std::uint64_t>(c)) + binom2(static_cast<std::uint64_t>(b)) +
           static_cast<std::uint64_t>(a);
}

inline std::uint64_t triple_rank(const Triple& t) { return triple_rank(t[0], t[1], t[2]); }

// Sorts a triple and validates it against the vertex range.
inline Triple normalize_triple(Triple t, int n, const char* what)
{
    if (t[0] > t[1])
        std::swap(t[0], t[1]);
    if (t[1] > t[2])
        std::swap(t[1], t[2]);
    if (t[0] > t[1])
        std::swap(t[0], t[1]);
    require(t[0] >= 0 && t[2] < n, Err::OUT_OF_RANGE,
            std::string(what) + ": vertex outside [0, " + std::to_string(n) + ")");
    require(t[0] != t[1] && t[1] != t[2], Err::DEGENERATE_EDGE,
            std::string(what) + ": repeated vertex in {" + std::to_string(t[0]) + "," +
                std::to_string(t[1]) + "," + std::to_string(t[2]) + "}");
    return t;
}

} // namespace h3
