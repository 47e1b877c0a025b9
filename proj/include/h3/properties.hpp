#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "h3/bitset.hpp"
#include "h3/error.hpp"
#include "h3/hypergraph.hpp"
#include "h3/parallel.hpp"
#include "h3/rational.hpp"
#include "h3/rng.hpp"

#include "json.hpp"

namespace h3 {

enum class Mode { EXACT, SEARCH, SPECTRAL };
enum class Status { VERIFIED_EXACT, NO_VIOLATION_FOUND, VIOLATED };

inline const char* mode_name(Mode m)
{
    switch (m) {
        case Mode::EXACT:    return "EXACT";
        case Mode::SEARCH:   return "SEARCH";
        case Mode::SPECTRAL: return "SPECTRAL";
    }
    return "?";
}

inline const char* status_name(Status s)
{
    switch (s) {
        case Status::VERIFIED_EXACT:     return "VERIFIED_EXACT";
        case Status::NO_VIOLATION_FOUND: return "NO_VIOLATION_FOUND";
        case Status::VIOLATED:           return "VIOLATED";
    }
    return "?";
}

inline Mode mode_from_name(const std::string& s)
{
    if (s == "exact" || s == "EXACT")
        return Mode::EXACT;
    if (s == "search" || s == "SEARCH")
        return Mode::SEARCH;
    if (s == "spectral" || s == "SPECTRAL")
        return Mode::SPECTRAL;
    fail(Err::CONFIG_INVALID, "unknown mode '" + s + "'");
}

// Property parameters as exact rationals; all inequality checks are decided
// in integer arithmetic (128-bit cross products, long-double fallback only on
// overflow).
struct PropertyParams {
    Rational eta{1, 2};   // size threshold fraction for Q'
    Rational delta{1, 10};
    Rational q{1, 1};     // subhypergraph density
    Rational p{1, 1};     // host density
    Rational eps{1, 10};  // DISC tolerance
    Rational C{2, 1};     // BDD constant
    Rational alpha{1, 1}; // lower density ratio, alpha p <= q <= p
    int k = 2;            // BDD depth

    void validate() const
    {
        require(eta.num > 0 && cmp_frac(eta.num, eta.den, 1, 1) < 0, Err::CONFIG_INVALID,
                "eta must lie in (0,1)");
        require(delta.num >= 0, Err::CONFIG_INVALID, "delta must be >= 0");
        require(q.num > 0 && cmp_frac(q.num, q.den, 1, 1) <= 0, Err::NONPOSITIVE_Q,
                "q must lie in (0,1]");
        require(p.num > 0 && cmp_frac(p.num, p.den, 1, 1) <= 0, Err::CONFIG_INVALID,
                "p must lie in (0,1]");
        require(cmp_frac(q.num, q.den, p.num, p.den) <= 0, Err::CONFIG_INVALID, "q must be <= p");
        Rational ap = alpha * p;
        require(cmp_frac(ap.num, ap.den, q.num, q.den) <= 0, Err::CONFIG_INVALID,
                "alpha*p must be <= q");
        require(cmp_frac(C.num, C.den, 1, 1) > 0, Err::CONFIG_INVALID, "C must be > 1");
        require(k >= 1, Err::CONFIG_INVALID, "k must be >= 1");
    }
};

struct Witness {
    std::vector<int> pair_indices; // X side (or the BDD tuple)
    std::vector<int> verts;        // Y side
    double value = 0.0;
    double bound = 0.0;
    std::string side; // "upper" or "lower"
};

struct WorkCounters {
    std::uint64_t candidates_examined = 0;
    std::uint64_t restarts = 0;
    std::uint64_t iterations = 0;
};

struct PropertyReport {
    std::string property;
    Mode mode = Mode::EXACT;
    Status status = Status::NO_VIOLATION_FOUND;
    nlohmann::ordered_json params;
    std::optional<Witness> witness;
    nlohmann::ordered_json margins;
    WorkCounters work;

    bool violated() const { return status == Status::VIOLATED; }

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j;
        j["property"] = property;
        j["mode"] = mode_name(mode);
        j["params"] = params;
        j["status"] = status_name(status);
        if (witness) {
            nlohmann::ordered_json w;
            nlohmann::ordered_json xs = nlohmann::ordered_json::array();
            for (int s : witness->pair_indices) {
                auto [u, v] = pair_from_index(s);
                xs.push_back({u, v});
            }
            w["X"] = xs;
            w["Y"] = witness->verts;
            w["value"] = witness->value;
            w["bound"] = witness->bound;
            w["side"] = witness->side;
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        j["margins"] = margins;
        nlohmann::ordered_json wk;
        wk["candidates"] = work.candidates_examined;
        wk["restarts"] = work.restarts;
        wk["iterations"] = work.iterations;
        j["work"] = wk;
        return j;
    }
};

namespace detail {

inline std::uint64_t ceil_mul(const Rational& f, std::uint64_t x)
{
    // ceil(f * x) for f >= 0
    i128 num = static_cast<i128>(f.num) * x;
    return static_cast<std::uint64_t>((num + f.den - 1) / f.den);
}

// Random subset of fixed size via partial Fisher-Yates, deterministic in rng.
inline std::vector<int> random_subset(RestartRng& rng, int universe, int size)
{
    std::vector<int> ids(universe);
    for (int i = 0; i < universe; ++i)
        ids[i] = i;
    size = std::min(size, universe);
    for (int i = 0; i < size; ++i) {
        int j = i + static_cast<int>(rng.next_below(universe - i));
        std::swap(ids[i], ids[j]);
    }
    ids.resize(size);
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Q'(eta, delta, q): (1-delta) q |X||Y| <= e(X,Y) <= (1+delta) q |X||Y| for
// all X over pairs, Y over vertices with |X| >= eta C(n,2), |Y| >= eta n.
//
// For a fixed Y and a fixed size x, e(X,Y) is extremized exactly by taking
// the pairs with the largest (resp. smallest) |N(S) ∩ Y|, so the exact mode
// enumerates only Y and sweeps sizes; the search mode runs the same extremal
// step inside an alternating maximization at probe sizes.
// ---------------------------------------------------------------------------
inline PropertyReport check_qprime(const Hypergraph3& G, const PropertyParams& params, Mode mode,
                                   int restarts = 6, std::uint64_t seed = 1)
{
    require(mode != Mode::SPECTRAL, Err::CONFIG_INVALID, "qprime supports EXACT or SEARCH");
    const int n = G.n();
    const int np = G.num_pairs();
    const Rational& eta = params.eta;
    const Rational& delta = params.delta;
    const Rational& q = params.q;

    PropertyReport rep;
    rep.property = "qprime";
    rep.mode = mode;
    rep.params["eta"] = eta.value();
    rep.params["delta"] = delta.value();
    rep.params["q"] = q.value();

    const std::uint64_t x_min = std::max<std::uint64_t>(1, detail::ceil_mul(eta, np));
    const std::uint64_t y_min = std::max<std::uint64_t>(1, detail::ceil_mul(eta, n));

    // e vs (1 +/- delta) q x y, exact: e * bd * bq  vs  (bd +/- ad) aq x y
    auto upper_violated = [&](std::uint64_t e, std::uint64_t x, std::uint64_t y) {
        i128 lhs = static_cast<i128>(e) * delta.den * q.den;
        i128 rhs = static_cast<i128>(delta.den + delta.num) * q.num * x * y;
        return lhs > rhs;
    };
    auto lower_violated = [&](std::uint64_t e, std::uint64_t x, std::uint64_t y) {
        if (delta.num >= delta.den)
            return false; // (1-delta) <= 0
        i128 lhs = static_cast<i128>(e) * delta.den * q.den;
        i128 rhs = static_cast<i128>(delta.den - delta.num) * q.num * x * y;
        return lhs < rhs;
    };
    auto deviation = [&](std::uint64_t e, std::uint64_t x, std::uint64_t y) {
        double base = q.value() * static_cast<double>(x) * static_cast<double>(y);
        return base > 0.0 ? std::abs(static_cast<double>(e) / base - 1.0) : 0.0;
    };

    double worst_dev = 0.0;
    auto record_witness = [&](const std::vector<std::pair<int, int>>& sorted_ts, std::uint64_t x,
                              const VertexSet& Y, std::uint64_t e, bool upper, bool from_top) {
        Witness w;
        for (std::uint64_t i = 0; i < x; ++i)
            w.pair_indices.push_back(from_top ? sorted_ts[i].second
                                              : sorted_ts[sorted_ts.size() - 1 - i].second);
        std::sort(w.pair_indices.begin(), w.pair_indices.end());
        w.verts = Y.elements();
        w.value = static_cast<double>(e);
        double base = q.value() * static_cast<double>(x) * static_cast<double>(w.verts.size());
        w.bound = upper ? (1.0 + delta.value()) * base : (1.0 - delta.value()) * base;
        w.side = upper ? "upper" : "lower";
        rep.witness = w;
        rep.status = Status::VIOLATED;
    };

    if (mode == Mode::EXACT) {
        require(n <= 6, Err::MODE_TOO_LARGE,
                "exact Q' enumeration allowed only for n <= 6, got n = " + std::to_string(n));
        // For each qualifying Y, the extremal X of every size is a threshold
        // set on |N(S) ∩ Y|; sweeping all sizes covers every qualifying X.
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            std::uint64_t y = static_cast<std::uint64_t>(__builtin_popcountll(mask));
            if (y < y_min)
                continue;
            VertexSet Y(n);
            for (int v = 0; v < n; ++v)
                if (mask & (1ULL << v))
                    Y.set(v);
            std::vector<std::pair<int, int>> ts(np);
            for (int s = 0; s < np; ++s)
                ts[s] = {and_count(G.pair_nbhd(s), Y), s};
            std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first)
                    return a.first > b.first;
                return a.second < b.second;
            });
            std::uint64_t top = 0, bot = 0;
            std::vector<std::uint64_t> top_pref(np + 1, 0), bot_pref(np + 1, 0);
            for (int i = 0; i < np; ++i) {
                top += ts[i].first;
                bot += ts[np - 1 - i].first;
                top_pref[i + 1] = top;
                bot_pref[i + 1] = bot;
            }
            for (std::uint64_t x = x_min; x <= static_cast<std::uint64_t>(np); ++x) {
                ++rep.work.candidates_examined;
                worst_dev = std::max({worst_dev, deviation(top_pref[x], x, y),
                                      deviation(bot_pref[x], x, y)});
                if (upper_violated(top_pref[x], x, y)) {
                    record_witness(ts, x, Y, top_pref[x], true, true);
                    rep.margins["worst_relative_deviation"] = worst_dev;
                    return rep;
                }
                if (lower_violated(bot_pref[x], x, y)) {
                    record_witness(ts, x, Y, bot_pref[x], false, false);
                    rep.margins["worst_relative_deviation"] = worst_dev;
                    return rep;
                }
            }
        }
        rep.status = Status::VERIFIED_EXACT;
        rep.margins["worst_relative_deviation"] = worst_dev;
        return rep;
    }

    // SEARCH: probe threshold sizes and 2x/4x safety-net sizes (all sizes for
    // tiny n), alternating the exact extremal X step with a column-count Y
    // step for each side separately.
    std::vector<std::uint64_t> xs_sizes, ys_sizes;
    if (n <= 8) {
        for (std::uint64_t x = x_min; x <= static_cast<std::uint64_t>(np); ++x)
            xs_sizes.push_back(x);
        for (std::uint64_t y = y_min; y <= static_cast<std::uint64_t>(n); ++y)
            ys_sizes.push_back(y);
    } else {
        for (std::uint64_t f : {1, 2, 4}) {
            xs_sizes.push_back(std::min<std::uint64_t>(np, x_min * f));
            ys_sizes.push_back(std::min<std::uint64_t>(n, y_min * f));
        }
    }
    std::sort(xs_sizes.begin(), xs_sizes.end());
    xs_sizes.erase(std::unique(xs_sizes.begin(), xs_sizes.end()), xs_sizes.end());
    std::sort(ys_sizes.begin(), ys_sizes.end());
    ys_sizes.erase(std::unique(ys_sizes.begin(), ys_sizes.end()), ys_sizes.end());

    std::vector<std::pair<int, int>> ts(np);
    std::vector<int> col(n);

    for (std::uint64_t x : xs_sizes) {
        for (std::uint64_t y : ys_sizes) {
            for (int side = 0; side < 2; ++side) { // 0 = upper (maximize e), 1 = lower
                const bool upper = side == 0;
                for (int r = 0; r < restarts; ++r) {
                    ++rep.work.restarts;
                    // Initial Y: degree-extremal for restart 0, random otherwise.
                    VertexSet Y(n);
                    if (r == 0) {
                        std::vector<std::pair<int, int>> dv(n);
                        for (int v = 0; v < n; ++v)
                            dv[v] = {G.degree(v), v};
                        std::sort(dv.begin(), dv.end(), [&](const auto& a, const auto& b) {
                            return upper ? a.first > b.first : a.first < b.first;
                        });
                        for (std::uint64_t i = 0; i < y; ++i)
                            Y.set(dv[i].second);
                    } else {
                        RestartRng rng(seed, (static_cast<std::uint64_t>(r) << 20) ^ (x * 131 + y));
                        for (int v : detail::random_subset(rng, n, static_cast<int>(y)))
                            Y.set(v);
                    }
                    std::uint64_t prev_e = upper ? 0 : UINT64_MAX;
                    PairSet X(np);
                    for (int iter = 0; iter < 20; ++iter) {
                        ++rep.work.iterations;
                        // Extremal X for this Y.
                        for (int s = 0; s < np; ++s)
                            ts[s] = {and_count(G.pair_nbhd(s), Y), s};
                        std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
                            if (a.first != b.first)
                                return upper ? a.first > b.first : a.first < b.first;
                            return a.second < b.second;
                        });
                        X = PairSet(np);
                        for (std::uint64_t i = 0; i < x; ++i)
                            X.set(ts[i].second);
                        // Extremal Y for this X.
                        std::fill(col.begin(), col.end(), 0);
                        X.for_each([&](int s) {
                            G.pair_nbhd(s).for_each([&](int v) { ++col[v]; });
                        });
                        std::vector<std::pair<int, int>> cv(n);
                        for (int v = 0; v < n; ++v)
                            cv[v] = {col[v], v};
                        std::sort(cv.begin(), cv.end(), [&](const auto& a, const auto& b) {
                            if (a.first != b.first)
                                return upper ? a.first > b.first : a.first < b.first;
                            return a.second < b.second;
                        });
                        Y = VertexSet(n);
                        for (std::uint64_t i = 0; i < y; ++i)
                            Y.set(cv[i].second);
                        std::uint64_t e = G.incidence_count(X, Y);
                        if (upper ? e <= prev_e : e >= prev_e)
                            break;
                        prev_e = e;
                    }
                    std::uint64_t e = G.incidence_count(X, Y);
                    ++rep.work.candidates_examined;
                    worst_dev = std::max(worst_dev, deviation(e, x, y));
                    if (upper && upper_violated(e, x, y)) {
                        Witness w;
                        w.pair_indices = X.elements();
                        w.verts = Y.elements();
                        w.value = static_cast<double>(e);
                        w.bound = (1.0 + delta.value()) * q.value() * x * y;
                        w.side = "upper";
                        rep.witness = w;
                        rep.status = Status::VIOLATED;
                        rep.margins["worst_relative_deviation"] = worst_dev;
                        return rep;
                    }
                    if (!upper && lower_violated(e, x, y)) {
                        Witness w;
                        w.pair_indices = X.elements();
                        w.verts = Y.elements();
                        w.value = static_cast<double>(e);
                        w.bound = (1.0 - delta.value()) * q.value() * x * y;
                        w.side = "lower";
                        rep.witness = w;
                        rep.status = Status::VIOLATED;
                        rep.margins["worst_relative_deviation"] = worst_dev;
                        return rep;
                    }
                }
            }
        }
    }
    rep.status = Status::NO_VIOLATION_FOUND;
    rep.margins["worst_relative_deviation"] = worst_dev;
    return rep;
}

// ---------------------------------------------------------------------------
// DISC(q, p, eps) for a vertex pair (X, Y): for all X' subsets of the pairs
// inside X and Y' subsets of Y,
//   |e(X', Y') - q |X'||Y'|| <= eps p C(|X|,2) |Y|.
// For a fixed Y' the extremal X' is exact (all pairs with positive resp.
// negative residual), so only Y' is enumerated (EXACT, |Y| <= 20) or locally
// searched by single-vertex flips (SEARCH).
// ---------------------------------------------------------------------------
inline PropertyReport check_disc(const Hypergraph3& G, const VertexSet& X, const VertexSet& Y,
                                 const PropertyParams& params, Mode mode, int restarts = 4,
                                 std::uint64_t seed = 1)
{
    require(mode != Mode::SPECTRAL, Err::CONFIG_INVALID, "disc supports EXACT or SEARCH");
    const int n = G.n();
    const Rational& q = params.q;
    const Rational& p = params.p;
    const Rational& eps = params.eps;

    PropertyReport rep;
    rep.property = "disc";
    rep.mode = mode;
    rep.params["q"] = q.value();
    rep.params["p"] = p.value();
    rep.params["eps"] = eps.value();

    std::vector<int> xv = X.elements();
    std::vector<int> xpairs;
    xpairs.reserve(xv.size() * (xv.size() - 1) / 2);
    for (std::size_t i = 0; i < xv.size(); ++i)
        for (std::size_t j = i + 1; j < xv.size(); ++j)
            xpairs.push_back(pair_index(xv[i], xv[j]));

    const std::uint64_t c2x = xpairs.size();
    const std::uint64_t ny = Y.count();
    // bound = eps p C(|X|,2) |Y|, as bound_num / bound_den
    const i128 bound_num = static_cast<i128>(eps.num) * p.num * c2x * ny;
    const i128 bound_den = static_cast<i128>(eps.den) * p.den;
    const double bound_val = eps.value() * p.value() * static_cast<double>(c2x) *
                             static_cast<double>(ny);

    // For a fixed Y', returns the extremal one-sided sums scaled by q.den:
    //   pos = sum over S of max(q.den * t_S - q.num * |Y'|, 0)
    //   neg = sum over S of max(q.num * |Y'| - q.den * t_S, 0)
    struct SideSums {
        i128 pos = 0, neg = 0;
    };
    auto side_sums = [&](const VertexSet& Yp) {
        SideSums ss;
        const i128 qy = static_cast<i128>(q.num) * Yp.count();
        for (int s : xpairs) {
            i128 lhs = static_cast<i128>(q.den) * and_count(G.pair_nbhd(s), Yp);
            if (lhs > qy)
                ss.pos += lhs - qy;
            else
                ss.neg += qy - lhs;
        }
        return ss;
    };
    // violation iff sum / q.den > bound_num / bound_den
    auto violates = [&](i128 scaled_sum) {
        return cmp_frac(scaled_sum, q.den, bound_num, bound_den) > 0;
    };

    i128 best_pos = 0, best_neg = 0;
    VertexSet best_pos_Y(n), best_neg_Y(n);

    auto consider = [&](const VertexSet& Yp) {
        ++rep.work.candidates_examined;
        SideSums ss = side_sums(Yp);
        if (ss.pos > best_pos) {
            best_pos = ss.pos;
            best_pos_Y = Yp;
        }
        if (ss.neg > best_neg) {
            best_neg = ss.neg;
            best_neg_Y = Yp;
        }
        return ss;
    };

    if (mode == Mode::EXACT) {
        require(ny <= 20, Err::MODE_TOO_LARGE,
                "exact DISC enumeration allowed only for |Y| <= 20, got " + std::to_string(ny));
        std::vector<int> yv = Y.elements();
        for (std::uint64_t mask = 0; mask < (1ULL << yv.size()); ++mask) {
            VertexSet Yp(n);
            for (std::size_t i = 0; i < yv.size(); ++i)
                if (mask & (1ULL << i))
                    Yp.set(yv[i]);
            consider(Yp);
        }
    } else {
        for (int r = 0; r < restarts; ++r) {
            ++rep.work.restarts;
            VertexSet Yp(n);
            if (r == 0) {
                Yp = Y;
            } else {
                RestartRng rng(seed, 0xD15C + static_cast<std::uint64_t>(r));
                Y.for_each([&](int v) {
                    if (rng.next_bool())
                        Yp.set(v);
                });
            }
            SideSums cur = consider(Yp);
            for (int sweep = 0; sweep < 30; ++sweep) {
                ++rep.work.iterations;
                bool improved = false;
                int flip_v = -1;
                i128 flip_gain = 0;
                SideSums flip_sums;
                std::vector<int> yv = Y.elements();
                for (int v : yv) {
                    VertexSet cand = Yp;
                    if (cand.test(v))
                        cand.reset(v);
                    else
                        cand.set(v);
                    SideSums ss = consider(cand);
                    i128 gain = std::max(ss.pos, ss.neg) - std::max(cur.pos, cur.neg);
                    if (gain > flip_gain) {
                        flip_gain = gain;
                        flip_v = v;
                        flip_sums = ss;
                    }
                }
                if (flip_v >= 0) {
                    if (Yp.test(flip_v))
                        Yp.reset(flip_v);
                    else
                        Yp.set(flip_v);
                    cur = flip_sums;
                    improved = true;
                }
                if (!improved)
                    break;
            }
        }
    }

    rep.margins["max_upper_excess"] = static_cast<double>(best_pos) / q.den;
    rep.margins["max_lower_excess"] = static_cast<double>(best_neg) / q.den;
    rep.margins["bound"] = bound_val;

    bool pos_bad = violates(best_pos);
    bool neg_bad = violates(best_neg);
    if (pos_bad || neg_bad) {
        bool upper = pos_bad && (!neg_bad || best_pos >= best_neg);
        const VertexSet& Yp = upper ? best_pos_Y : best_neg_Y;
        Witness w;
        const i128 qy = static_cast<i128>(q.num) * Yp.count();
        for (int s : xpairs) {
            i128 lhs = static_cast<i128>(q.den) * and_count(G.pair_nbhd(s), Yp);
            if (upper ? lhs > qy : lhs < qy)
                w.pair_indices.push_back(s);
        }
        w.verts = Yp.elements();
        PairSet Xp(G.num_pairs());
        for (int s : w.pair_indices)
            Xp.set(s);
        w.value = static_cast<double>(G.incidence_count(Xp, Yp));
        w.bound = bound_val;
        w.side = upper ? "upper" : "lower";
        rep.witness = w;
        rep.status = Status::VIOLATED;
    } else {
        rep.status = mode == Mode::EXACT ? Status::VERIFIED_EXACT : Status::NO_VIOLATION_FOUND;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// PAIR(q, p, delta) for vertex sets (X, Y): two exact polynomial sums,
//   sum over pairs S in (X choose 2) of ||N(S;Y)| - q|Y||        vs delta p C(|X|,2) |Y|
//   sum over ordered pairs (S1,S2), diagonal included, of
//       ||N(S1,S2;Y)| - q^2 |Y||                                 vs delta p^2 C(|X|,2)^2 |Y|
// Sums are reported exactly (scaled to integers by q.den resp. q.den^2).
// ---------------------------------------------------------------------------
inline PropertyReport check_pair(const Hypergraph3& G, const VertexSet& X, const VertexSet& Y,
                                 const PropertyParams& params, unsigned threads = 1)
{
    const Rational& q = params.q;
    const Rational& p = params.p;
    const Rational& delta = params.delta;

    PropertyReport rep;
    rep.property = "pair";
    rep.mode = Mode::EXACT;
    rep.params["q"] = q.value();
    rep.params["p"] = p.value();
    rep.params["delta"] = delta.value();

    std::vector<int> xv = X.elements();
    std::vector<int> xpairs;
    for (std::size_t i = 0; i < xv.size(); ++i)
        for (std::size_t j = i + 1; j < xv.size(); ++j)
            xpairs.push_back(pair_index(xv[i], xv[j]));
    const std::uint64_t c2x = xpairs.size();
    const std::uint64_t ny = Y.count();

    // First sum, scaled by q.den.
    const i128 qy = static_cast<i128>(q.num) * ny;
    std::vector<int> tS(xpairs.size());
    i128 sum1 = 0;
    for (std::size_t i = 0; i < xpairs.size(); ++i) {
        tS[i] = and_count(G.pair_nbhd(xpairs[i]), Y);
        sum1 += iabs128(static_cast<i128>(q.den) * tS[i] - qy);
    }

    // Second sum over ordered pairs including the diagonal, scaled by q.den^2.
    const i128 q2den = static_cast<i128>(q.den) * q.den;
    const i128 q2y = static_cast<i128>(q.num) * q.num * ny;
    struct Acc {
        i128 off = 0;
        i128 diag = 0;
        Acc& operator+=(const Acc& o)
        {
            off += o.off;
            diag += o.diag;
            return *this;
        }
    };
    Acc acc = parallel_reduce<Acc>(
        xpairs.size(), 64, threads, [&](std::size_t b, std::size_t e) {
            Acc a;
            for (std::size_t i = b; i < e; ++i) {
                const VertexSet& ni = G.pair_nbhd(xpairs[i]);
                a.diag += iabs128(q2den * tS[i] - q2y);
                for (std::size_t j = i + 1; j < xpairs.size(); ++j) {
                    int t = and3_count(ni, G.pair_nbhd(xpairs[j]), Y);
                    a.off += iabs128(q2den * t - q2y);
                }
            }
            return a;
        });
    i128 sum2 = 2 * acc.off + acc.diag;

    // Bounds: delta p C(|X|,2) |Y| and delta p^2 C(|X|,2)^2 |Y|.
    const i128 b1_num = static_cast<i128>(delta.num) * p.num * c2x * ny;
    const i128 b1_den = static_cast<i128>(delta.den) * p.den;
    const i128 b2_num = static_cast<i128>(delta.num) * p.num * p.num * c2x * c2x * ny;
    const i128 b2_den = static_cast<i128>(delta.den) * p.den * p.den;

    bool ok1 = cmp_frac(sum1, q.den, b1_num, b1_den) <= 0;
    bool ok2 = cmp_frac(sum2, q2den, b2_num, b2_den) <= 0;

    rep.margins["sum_degree_scaled"] = i128_to_string(sum1);
    rep.margins["sum_degree_scale"] = std::to_string(q.den);
    rep.margins["sum_codegree_scaled"] = i128_to_string(sum2);
    rep.margins["sum_codegree_offdiag_scaled"] = i128_to_string(acc.off);
    rep.margins["sum_codegree_diag_scaled"] = i128_to_string(acc.diag);
    rep.margins["sum_codegree_scale"] = i128_to_string(q2den);
    rep.margins["bound_degree"] = static_cast<double>(b1_num) / static_cast<double>(b1_den);
    rep.margins["bound_codegree"] = static_cast<double>(b2_num) / static_cast<double>(b2_den);
    rep.margins["degree_ok"] = ok1;
    rep.margins["codegree_ok"] = ok2;
    rep.work.candidates_examined = c2x * c2x;

    if (ok1 && ok2) {
        rep.status = Status::VERIFIED_EXACT;
    } else {
        rep.status = Status::VIOLATED;
        Witness w;
        w.pair_indices = xpairs;
        w.verts = Y.elements();
        w.value = !ok1 ? static_cast<double>(sum1) / q.den
                       : static_cast<double>(sum2) / static_cast<double>(q2den);
        w.bound = !ok1 ? static_cast<double>(b1_num) / static_cast<double>(b1_den)
                       : static_cast<double>(b2_num) / static_cast<double>(b2_den);
        w.side = !ok1 ? "degree-sum" : "codegree-sum";
        rep.witness = w;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// TUPLE(delta, q): pointwise degree and codegree control,
//   ||N(S)| - nq| < delta n q        for all but at most delta C(n,2) pairs
//   ||N(S1) ∩ N(S2)| - n q^2| < delta n q^2
//                                    for all but at most delta C(C(n,2),2)
//                                    unordered pairs of distinct S's.
// Strict inequalities exactly as stated; always exact.
// ---------------------------------------------------------------------------
inline PropertyReport check_tuple(const Hypergraph3& G, const Rational& delta, const Rational& q,
                                  unsigned threads = 1)
{
    require(q.num > 0, Err::NONPOSITIVE_Q, "tuple requires q > 0");
    const int n = G.n();
    const int np = G.num_pairs();

    PropertyReport rep;
    rep.property = "tuple";
    rep.mode = Mode::EXACT;
    rep.params["delta"] = delta.value();
    rep.params["q"] = q.value();

    // Degree condition: |t b - a n| bd < ad a n  (q = a/b, delta = ad/bd).
    const i128 deg_rhs = static_cast<i128>(delta.num) * q.num * n;
    std::uint64_t exceptional_deg = 0;
    for (int s = 0; s < np; ++s) {
        i128 dev = iabs128(static_cast<i128>(q.den) * G.pair_degree(s) -
                           static_cast<i128>(q.num) * n);
        if (!(dev * delta.den < deg_rhs))
            ++exceptional_deg;
    }

    // Codegree condition over unordered pairs of distinct S's.
    const i128 q2den = static_cast<i128>(q.den) * q.den;
    const i128 q2n = static_cast<i128>(q.num) * q.num * n;
    const i128 co_rhs = static_cast<i128>(delta.num) * q.num * q.num * n;
    std::uint64_t exceptional_co = parallel_reduce<std::uint64_t>(
        static_cast<std::size_t>(np), 32, threads, [&](std::size_t b, std::size_t e) {
            std::uint64_t bad = 0;
            for (std::size_t i = b; i < e; ++i) {
                const VertexSet& ni = G.pair_nbhd(static_cast<int>(i));
                for (std::size_t j = i + 1; j < static_cast<std::size_t>(np); ++j) {
                    int t = and_count(ni, G.pair_nbhd(static_cast<int>(j)));
                    i128 dev = iabs128(q2den * t - q2n);
                    if (!(dev * delta.den < co_rhs))
                        ++bad;
                }
            }
            return bad;
        });

    const std::uint64_t pairs_total = np;
    const std::uint64_t copairs_total = binom2(static_cast<std::uint64_t>(np));
    bool ok1 = static_cast<i128>(exceptional_deg) * delta.den <=
               static_cast<i128>(delta.num) * pairs_total;
    bool ok2 = static_cast<i128>(exceptional_co) * delta.den <=
               static_cast<i128>(delta.num) * copairs_total;

    rep.margins["exceptional_degree"] = exceptional_deg;
    rep.margins["exceptional_codegree"] = exceptional_co;
    rep.margins["budget_degree"] = delta.value() * static_cast<double>(pairs_total);
    rep.margins["budget_codegree"] = delta.value() * static_cast<double>(copairs_total);
    rep.margins["fraction_degree"] =
        pairs_total ? static_cast<double>(exceptional_deg) / pairs_total : 0.0;
    rep.margins["fraction_codegree"] =
        copairs_total ? static_cast<double>(exceptional_co) / copairs_total : 0.0;
    rep.margins["degree_ok"] = ok1;
    rep.margins["codegree_ok"] = ok2;
    rep.work.candidates_examined = pairs_total + copairs_total;

    if (ok1 && ok2) {
        rep.status = Status::VERIFIED_EXACT;
    } else {
        rep.status = Status::VIOLATED;
        Witness w;
        w.value = static_cast<double>(!ok1 ? exceptional_deg : exceptional_co);
        w.bound = !ok1 ? delta.value() * static_cast<double>(pairs_total)
                       : delta.value() * static_cast<double>(copairs_total);
        w.side = !ok1 ? "degree-exceptions" : "codegree-exceptions";
        rep.witness = w;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// BDD(k, C, q): |N(S1) ∩ ... ∩ N(Sr)| <= C n q^r for every 1 <= r <= k and
// all unordered r-subsets of distinct pairs. r = 1, 2 are always exact;
// deeper levels are exact while C(C(n,2), r) stays within the budget and fall
// back to greedy extension with restarts beyond it.
// ---------------------------------------------------------------------------
inline PropertyReport check_bdd(const Hypergraph3& G, const PropertyParams& params,
                                Mode mode = Mode::EXACT, std::uint64_t budget = 20000000,
                                int restarts = 8, std::uint64_t seed = 1, unsigned threads = 1)
{
    const int n = G.n();
    const int np = G.num_pairs();
    const Rational& C = params.C;
    const Rational& q = params.q;
    const int kmax = params.k;

    PropertyReport rep;
    rep.property = "bdd";
    rep.mode = Mode::EXACT;
    rep.params["k"] = kmax;
    rep.params["C"] = C.value();
    rep.params["q"] = q.value();

    // threshold(r) = C n q^r as num/den with overflow-checked comparison
    auto exceeds = [&](std::uint64_t cnt, int r) {
        i128 num = static_cast<i128>(C.num) * n;
        i128 den = C.den;
        for (int i = 0; i < r; ++i) {
            num *= q.num; // q <= 1 so num shrinks relative to den
            den *= q.den;
        }
        return cmp_frac(static_cast<i128>(cnt), 1, num, den) > 0;
    };
    auto threshold_val = [&](int r) {
        return C.value() * n * std::pow(q.value(), r);
    };

    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    bool all_exact = true;
    std::optional<Witness> witness;

    for (int r = 1; r <= kmax; ++r) {
        std::uint64_t max_cnt = 0;
        std::vector<int> max_tuple;
        bool exact_level = true;

        if (np < r) {
            nlohmann::ordered_json lj;
            lj["r"] = r;
            lj["max_intersection"] = nullptr;
            lj["bound"] = threshold_val(r);
            lj["mode"] = "EXACT";
            lj["violated"] = false;
            levels.push_back(lj);
            continue;
        }

        if (r == 1) {
            for (int s = 0; s < np; ++s)
                if (static_cast<std::uint64_t>(G.pair_degree(s)) > max_cnt ||
                    max_tuple.empty()) {
                    max_cnt = G.pair_degree(s);
                    max_tuple = {s};
                }
            rep.work.candidates_examined += np;
        } else if (r == 2) {
            struct Best {
                std::uint64_t cnt = 0;
                int i = -1, j = -1;
            };
            std::vector<Best> partial((np + 63) / 64);
            parallel_chunks(static_cast<std::size_t>(np), 64, threads,
                            [&](std::size_t c, std::size_t b, std::size_t e) {
                                Best best;
                                for (std::size_t i = b; i < e; ++i) {
                                    const VertexSet& ni = G.pair_nbhd(static_cast<int>(i));
                                    for (std::size_t j = i + 1;
                                         j < static_cast<std::size_t>(np); ++j) {
                                        std::uint64_t t = and_count(
                                            ni, G.pair_nbhd(static_cast<int>(j)));
                                        if (t > best.cnt || best.i < 0) {
                                            best = {t, static_cast<int>(i),
                                                    static_cast<int>(j)};
                                        }
                                    }
                                }
                                partial[c] = best;
                            });
            Best best;
            for (const Best& b : partial)
                if (b.i >= 0 && (best.i < 0 || b.cnt > best.cnt))
                    best = b;
            if (best.i >= 0) {
                max_cnt = best.cnt;
                max_tuple = {best.i, best.j};
            }
            rep.work.candidates_examined += binom2(static_cast<std::uint64_t>(np));
        } else {
            // Feasibility of exhaustive enumeration at this depth.
            long double combos = 1.0L;
            for (int i = 0; i < r; ++i)
                combos = combos * static_cast<long double>(np - i) / (i + 1);
            bool feasible = combos <= static_cast<long double>(budget);
            if (mode == Mode::SEARCH)
                feasible = false;
            if (feasible) {
                // DFS with monotone pruning: intersections only shrink.
                std::vector<int> stack;
                std::vector<VertexSet> inter(r + 1, VertexSet(n));
                inter[0] = VertexSet::full(n);
                auto dfs = [&](auto&& self, int depth, int start) -> void {
                    if (depth == r)
                        return;
                    for (int s = start; s < np; ++s) {
                        VertexSet next = inter[depth] & G.pair_nbhd(s);
                        std::uint64_t cnt = next.count();
                        ++rep.work.candidates_examined;
                        if (depth + 1 == r) {
                            if (cnt > max_cnt || max_tuple.empty()) {
                                max_cnt = cnt;
                                max_tuple = stack;
                                max_tuple.push_back(s);
                            }
                        } else if (cnt > max_cnt || max_tuple.empty()) {
                            inter[depth + 1] = next;
                            stack.push_back(s);
                            self(self, depth + 1, s + 1);
                            stack.pop_back();
                        }
                    }
                };
                dfs(dfs, 0, 0);
            } else {
                exact_level = false;
                all_exact = false;
                // Greedy extension from the strongest and from random pairs.
                std::vector<int> starts;
                {
                    std::vector<std::pair<int, int>> by_deg(np);
                    for (int s = 0; s < np; ++s)
                        by_deg[s] = {G.pair_degree(s), s};
                    std::sort(by_deg.begin(), by_deg.end(),
                              [](const auto& a, const auto& b) { return a.first > b.first; });
                    for (int i = 0; i < std::min(np, 4); ++i)
                        starts.push_back(by_deg[i].second);
                }
                RestartRng rng(seed, 0xBDD);
                for (int i = 0; i < restarts; ++i)
                    starts.push_back(static_cast<int>(rng.next_below(np)));
                for (int s0 : starts) {
                    ++rep.work.restarts;
                    std::vector<int> chosen{s0};
                    VertexSet inter = G.pair_nbhd(s0);
                    for (int depth = 1; depth < r; ++depth) {
                        int best_s = -1;
                        std::uint64_t best_cnt = 0;
                        for (int s = 0; s < np; ++s) {
                            if (std::find(chosen.begin(), chosen.end(), s) != chosen.end())
                                continue;
                            std::uint64_t cnt = and_count(inter, G.pair_nbhd(s));
                            ++rep.work.candidates_examined;
                            if (best_s < 0 || cnt > best_cnt) {
                                best_s = s;
                                best_cnt = cnt;
                            }
                        }
                        chosen.push_back(best_s);
                        inter &= G.pair_nbhd(best_s);
                    }
                    std::uint64_t cnt = inter.count();
                    if (cnt > max_cnt || max_tuple.empty()) {
                        max_cnt = cnt;
                        max_tuple = chosen;
                    }
                }
            }
        }

        bool level_violated = !max_tuple.empty() && exceeds(max_cnt, r);
        nlohmann::ordered_json lj;
        lj["r"] = r;
        lj["max_intersection"] = max_cnt;
        lj["bound"] = threshold_val(r);
        lj["mode"] = exact_level ? "EXACT" : "SEARCH";
        lj["violated"] = level_violated;
        levels.push_back(lj);

        if (level_violated && !witness) {
            Witness w;
            w.pair_indices = max_tuple;
            std::sort(w.pair_indices.begin(), w.pair_indices.end());
            w.value = static_cast<double>(max_cnt);
            w.bound = threshold_val(r);
            w.side = "r=" + std::to_string(r);
            witness = w;
        }
    }

    rep.mode = all_exact ? Mode::EXACT : Mode::SEARCH;
    rep.margins["levels"] = levels;
    if (witness) {
        rep.witness = witness;
        rep.status = Status::VIOLATED;
    } else {
        rep.status = all_exact ? Status::VERIFIED_EXACT : Status::NO_VIOLATION_FOUND;
    }
    return rep;
}

} // namespace h3
