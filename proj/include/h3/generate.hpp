#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "h3/error.hpp"
#include "h3/hypergraph.hpp"
#include "h3/indexing.hpp"
#include "h3/rng.hpp"

#include "json.hpp"

namespace h3 {

enum class GenKind { RANDOM, COMPLETE, SUBSAMPLE, PLANTED_DENSE, PLANTED_STAR };

inline const char* gen_kind_name(GenKind k)
{
    switch (k) {
        case GenKind::RANDOM:        return "random";
        case GenKind::COMPLETE:      return "complete";
        case GenKind::SUBSAMPLE:     return "subsample";
        case GenKind::PLANTED_DENSE: return "planted_dense";
        case GenKind::PLANTED_STAR:  return "planted_star";
    }
    return "unknown";
}

inline GenKind gen_kind_from_name(const std::string& s)
{
    if (s == "random")
        return GenKind::RANDOM;
    if (s == "complete")
        return GenKind::COMPLETE;
    if (s == "subsample")
        return GenKind::SUBSAMPLE;
    if (s == "planted_dense" || s == "planted-dense")
        return GenKind::PLANTED_DENSE;
    if (s == "planted_star" || s == "planted-star")
        return GenKind::PLANTED_STAR;
    fail(Err::CONFIG_INVALID, "unknown generator kind '" + s + "'");
}

struct GenSpec {
    GenKind kind = GenKind::RANDOM;
    int n = 0;
    double p = 0.0;    // edge probability (background probability for planted kinds)
    double p_in = 0.0; // planted-dense: probability inside the planted set
    int s = 0;         // planted-dense: planted set is {0..s-1}
    double keep = 1.0; // subsample: per-edge keep probability
    std::uint64_t seed = 0;
};

namespace detail {
// Streams keep draws for different construction steps independent.
inline constexpr std::uint64_t kStreamEdges = 1;
inline constexpr std::uint64_t kStreamKeep = 2;
} // namespace detail

// Each triple is included independently with probability p; the draw is keyed
// on the triple's canonical rank, so the result is independent of iteration
// order and identical across platforms and thread counts.
inline Hypergraph3 gen_random(int n, double p, std::uint64_t seed)
{
    require(p >= 0.0 && p <= 1.0, Err::INVALID_ARGUMENT, "edge probability outside [0, 1]");
    std::vector<Triple> edges;
    if (p > 0.0) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (coin(seed, detail::kStreamEdges, triple_rank(a, b, c), p))
                        edges.push_back({a, b, c});
    }
    return Hypergraph3::build(n, std::move(edges));
}

inline Hypergraph3 gen_complete(int n)
{
    require(n >= 3, Err::INVALID_ARGUMENT, "complete hypergraph needs n >= 3");
    std::vector<Triple> edges;
    edges.reserve(binom3(static_cast<std::uint64_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                edges.push_back({a, b, c});
    return Hypergraph3::build(n, std::move(edges));
}

// Spanning subhypergraph: same vertex set, each host edge kept independently.
inline Hypergraph3 subsample(const Hypergraph3& host, double keep, std::uint64_t seed)
{
    require(keep >= 0.0 && keep <= 1.0, Err::INVALID_ARGUMENT, "keep outside [0, 1]");
    std::vector<Triple> edges;
    for (const Triple& e : host.edges())
        if (coin(seed, detail::kStreamKeep, triple_rank(e), keep))
            edges.push_back(e);
    return Hypergraph3::build(host.n(), std::move(edges));
}

// Negative control for uniform-density properties: triples inside {0..s-1}
// appear with probability p_in, all others with probability p.
inline Hypergraph3 gen_planted_dense(int n, double p, int s, double p_in, std::uint64_t seed)
{
    require(p >= 0.0 && p <= 1.0 && p_in >= 0.0 && p_in <= 1.0, Err::INVALID_ARGUMENT,
            "probability outside [0, 1]");
    require(s >= 0 && s <= n, Err::INVALID_ARGUMENT, "planted set larger than vertex set");
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                double prob = (c < s) ? p_in : p;
                if (coin(seed, detail::kStreamEdges, triple_rank(a, b, c), prob))
                    edges.push_back({a, b, c});
            }
    return Hypergraph3::build(n, std::move(edges));
}

// Negative control for bounded codegrees: every triple through vertex 0,
// plus background density p.
inline Hypergraph3 gen_planted_star(int n, double p, std::uint64_t seed)
{
    require(p >= 0.0 && p <= 1.0, Err::INVALID_ARGUMENT, "edge probability outside [0, 1]");
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (a == 0 || coin(seed, detail::kStreamEdges, triple_rank(a, b, c), p))
                    edges.push_back({a, b, c});
            }
    return Hypergraph3::build(n, std::move(edges));
}

inline Hypergraph3 generate(const GenSpec& spec)
{
    switch (spec.kind) {
        case GenKind::RANDOM:
            return gen_random(spec.n, spec.p, spec.seed);
        case GenKind::COMPLETE:
            return gen_complete(spec.n);
        case GenKind::SUBSAMPLE:
            return subsample(gen_random(spec.n, spec.p, spec.seed), spec.keep, spec.seed);
        case GenKind::PLANTED_DENSE:
            return gen_planted_dense(spec.n, spec.p, spec.s, spec.p_in, spec.seed);
        case GenKind::PLANTED_STAR:
            return gen_planted_star(spec.n, spec.p, spec.seed);
    }
    fail(Err::CONFIG_INVALID, "unknown generator kind");
}

inline nlohmann::ordered_json gen_sidecar(const GenSpec& spec, const Hypergraph3& g)
{
    nlohmann::ordered_json j;
    j["kind"] = gen_kind_name(spec.kind);
    j["n"] = spec.n;
    j["p"] = spec.p;
    if (spec.kind == GenKind::PLANTED_DENSE) {
        j["p_in"] = spec.p_in;
        j["s"] = spec.s;
    }
    if (spec.kind == GenKind::SUBSAMPLE)
        j["keep"] = spec.keep;
    j["seed"] = spec.seed;
    j["m"] = g.m();
    return j;
}

} // namespace h3
