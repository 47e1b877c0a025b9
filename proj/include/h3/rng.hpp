#pragma once

#include <cstdint>

namespace h3 {

// Counter-based keyed RNG. Every draw is a pure function of
// (seed, stream, counter), so generation order and thread count cannot
// change the output.

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
{
    std::uint64_t h = splitmix64(seed ^ 0xD1B54A32D192ED03ULL);
    h = splitmix64(h ^ stream);
    return splitmix64(h ^ counter);
}

// Uniform in [0, 1), 53 mantissa bits.
inline double uniform01(std::uint64_t h)
{
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Bernoulli(p) draw keyed on (seed, stream, counter).
inline bool coin(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter, double p)
{
    if (p >= 1.0)
        return true;
    if (p <= 0.0)
        return false;
    return uniform01(counter_hash(seed, stream, counter)) < p;
}

// Small sequential engine for search restarts; the stream id fixes the
// restart schedule independently of evaluation order.
class RestartRng {
public:
    RestartRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() { return counter_hash(seed_, stream_, counter_++); }

    double next_double() { return uniform01(next_u64()); }

    // Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound)
    {
        return bound == 0 ? 0 : next_u64() % bound;
    }

    bool next_bool() { return (next_u64() & 1) != 0; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

} // namespace h3
