#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "h3/bitset.hpp"
#include "h3/error.hpp"
#include "h3/hypergraph.hpp"
#include "h3/rng.hpp"

namespace h3 {

struct SpectralStats {
    std::uint64_t iterations = 0;
    int starts = 0;
};

namespace detail {

// Dense Gram matrix M = (B - pJ)^T (B - pJ) over vertex columns, where B is
// the pair-vertex incidence matrix and J the all-ones matrix:
//   M[u][v] = |{S : S+u and S+v both edges}| - p (deg u + deg v) + p^2 C(n,2).
inline std::vector<double> centered_gram(const Hypergraph3& G, double p)
{
    const int n = G.n();
    std::vector<std::uint64_t> btb(static_cast<std::size_t>(n) * n, 0);
    const int np = G.num_pairs();
    std::vector<int> members;
    for (int s = 0; s < np; ++s) {
        members = G.pair_nbhd(s).elements();
        for (int u : members)
            for (int v : members)
                ++btb[static_cast<std::size_t>(u) * n + v];
    }
    const double rows = static_cast<double>(pair_count(n));
    std::vector<double> M(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            M[static_cast<std::size_t>(u) * n + v] =
                static_cast<double>(btb[static_cast<std::size_t>(u) * n + v]) -
                p * (G.degree(u) + G.degree(v)) + p * p * rows;
    return M;
}

inline void matvec(const std::vector<double>& M, int n, const std::vector<double>& x,
                   std::vector<double>& y)
{
    for (int u = 0; u < n; ++u) {
        double acc = 0.0;
        const double* row = &M[static_cast<std::size_t>(u) * n];
        for (int v = 0; v < n; ++v)
            acc += row[v] * x[v];
        y[u] = acc;
    }
}

} // namespace detail

// Certified upper bound on the jumbledness coefficient: the spectral norm
// sigma of B - pJ satisfies |e(X,Y) - p|X||Y|| <= sigma sqrt(|X||Y|) for all
// X, Y (Cauchy-Schwarz on indicator vectors). Power iteration on the Gram
// operator with deterministic starts; throws NO_CONVERGENCE at the iteration
// cap. The all-ones, alternating-sign and hashed starts cover top eigenvectors
// that any single fixed pattern would be orthogonal to.
inline double certify_beta_spectral(const Hypergraph3& G, double p, double tol = 1e-6,
                                    std::uint64_t max_iters = 200000,
                                    SpectralStats* stats = nullptr)
{
    require(p >= 0.0 && p <= 1.0, Err::INVALID_ARGUMENT, "p outside [0, 1]");
    require(tol > 0.0, Err::INVALID_ARGUMENT, "tolerance must be positive");
    const int n = G.n();
    if (n < 2 || pair_count(n) == 0)
        return 0.0;

    const std::vector<double> M = detail::centered_gram(G, p);

    double best_lambda = 0.0;
    std::uint64_t iters_total = 0;
    const int n_starts = 3;
    for (int s = 0; s < n_starts; ++s) {
        std::vector<double> x(n), y(n);
        for (int i = 0; i < n; ++i) {
            switch (s) {
                case 0: x[i] = 1.0; break;
                case 1: x[i] = (i % 2 == 0) ? 1.0 : -1.0; break;
                default: x[i] = uniform01(counter_hash(0x5EED, 7, i)) - 0.5; break;
            }
        }
        double nx = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
        if (nx == 0.0)
            continue;
        for (double& v : x)
            v /= nx;

        double lambda = 0.0;
        double prev = 0.0;
        double prev_delta = 0.0;
        bool converged = false;
        for (std::uint64_t it = 0; it < max_iters; ++it) {
            detail::matvec(M, n, x, y);
            lambda = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
            double ny = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
            ++iters_total;
            if (ny == 0.0 || lambda <= 0.0) {
                lambda = std::max(lambda, 0.0);
                converged = true;
                break;
            }
            for (int i = 0; i < n; ++i)
                x[i] = y[i] / ny;
            double delta = std::abs(lambda - prev);
            if (it > 4) {
                // Error extrapolation from the contraction ratio of deltas.
                double rho = prev_delta > 0.0 ? std::min(delta / prev_delta, 0.9999) : 0.0;
                double err_est = delta * rho / (1.0 - rho);
                if (delta <= tol * 0.25 * lambda && err_est <= tol * 0.25 * lambda) {
                    converged = true;
                    break;
                }
            }
            prev = lambda;
            prev_delta = delta;
        }
        require(converged, Err::NO_CONVERGENCE,
                "power iteration hit the cap of " + std::to_string(max_iters) + " iterations");
        best_lambda = std::max(best_lambda, lambda);
    }
    if (stats) {
        stats->iterations = iters_total;
        stats->starts = n_starts;
    }
    return std::sqrt(std::max(best_lambda, 0.0));
}

struct BetaSearchResult {
    double beta = 0.0;
    PairSet X;
    VertexSet Y;
};

// Adversarial lower bound: alternating maximization of
// |e(X,Y) - p|X||Y|| / sqrt(|X||Y|). For fixed Y the optimal X of each size
// is a threshold set on the residuals |N(S) ∩ Y| - p|Y|, found exactly by a
// prefix sweep over the sorted residuals; symmetrically for fixed X.
inline BetaSearchResult search_beta_lower(const Hypergraph3& G, double p, int restarts = 8,
                                          std::uint64_t seed = 1)
{
    require(restarts >= 1, Err::INVALID_ARGUMENT, "restarts must be >= 1");
    const int n = G.n();
    const int np = G.num_pairs();
    BetaSearchResult best;
    best.X = PairSet(np);
    best.Y = VertexSet(n);
    if (n == 0 || np == 0)
        return best;

    auto objective = [&](const PairSet& X, const VertexSet& Y) -> double {
        std::uint64_t cx = X.count(), cy = Y.count();
        if (cx == 0 || cy == 0)
            return 0.0;
        double e = static_cast<double>(G.incidence_count(X, Y));
        return std::abs(e - p * static_cast<double>(cx) * static_cast<double>(cy)) /
               std::sqrt(static_cast<double>(cx) * static_cast<double>(cy));
    };

    // Best threshold set for residuals: maximizes |prefix_j| / sqrt(j) over
    // both sort directions. Returns chosen indices.
    auto threshold_pick = [](std::vector<std::pair<double, int>>& residuals,
                             double denom) -> std::pair<std::vector<int>, double> {
        std::sort(residuals.begin(), residuals.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first > b.first;
            return a.second < b.second;
        });
        std::size_t best_j = 0;
        bool best_tail = false;
        double best_val = -1.0;
        double pref = 0.0;
        for (std::size_t j = 1; j <= residuals.size(); ++j) {
            pref += residuals[j - 1].first;
            double val = pref / std::sqrt(static_cast<double>(j) * denom);
            if (val > best_val) {
                best_val = val;
                best_j = j;
                best_tail = false;
            }
        }
        double suff = 0.0;
        for (std::size_t j = 1; j <= residuals.size(); ++j) {
            suff += residuals[residuals.size() - j].first;
            double val = -suff / std::sqrt(static_cast<double>(j) * denom);
            if (val > best_val) {
                best_val = val;
                best_j = j;
                best_tail = true;
            }
        }
        std::vector<int> chosen;
        chosen.reserve(best_j);
        for (std::size_t i = 0; i < best_j; ++i)
            chosen.push_back(best_tail ? residuals[residuals.size() - 1 - i].second
                                       : residuals[i].second);
        return {chosen, best_val};
    };

    for (int r = 0; r < restarts; ++r) {
        VertexSet Y(n);
        if (r == 0) {
            Y = VertexSet::full(n);
        } else {
            RestartRng rng(seed, static_cast<std::uint64_t>(r));
            for (int v = 0; v < n; ++v)
                if (rng.next_bool())
                    Y.set(v);
            if (!Y.any())
                Y = VertexSet::full(n);
        }
        PairSet X(np);
        double cur = 0.0;
        for (int iter = 0; iter < 60; ++iter) {
            // X step.
            int cy = Y.count();
            std::vector<std::pair<double, int>> res(np);
            for (int s = 0; s < np; ++s)
                res[s] = {static_cast<double>(and_count(G.pair_nbhd(s), Y)) - p * cy, s};
            auto [xs, xval] = threshold_pick(res, static_cast<double>(cy));
            X = PairSet(np);
            for (int s : xs)
                X.set(s);

            // Y step.
            int cx = X.count();
            std::vector<double> col(n, 0.0);
            X.for_each([&](int s) {
                G.pair_nbhd(s).for_each([&](int v) { col[v] += 1.0; });
            });
            std::vector<std::pair<double, int>> vres(n);
            for (int v = 0; v < n; ++v)
                vres[v] = {col[v] - p * cx, v};
            auto [ys, yval] = threshold_pick(vres, static_cast<double>(cx));
            Y = VertexSet(n);
            for (int v : ys)
                Y.set(v);

            double val = std::max(xval, yval);
            if (val <= cur + 1e-12) {
                cur = std::max(cur, val);
                break;
            }
            cur = val;
        }
        double val = objective(X, Y);
        if (val > best.beta) {
            best.beta = val;
            best.X = X;
            best.Y = Y;
        }
    }
    return best;
}

struct JumbledEstimate {
    double p = 0.0;
    double beta_lower = 0.0;
    double beta_upper = 0.0;
    double gamma_ratio = 0.0; // beta_upper / (p^2 n^{3/2})
    std::vector<int> witness_X; // pair indices
    std::vector<int> witness_Y; // vertices
};

inline JumbledEstimate estimate_jumbledness(const Hypergraph3& G, double p, int restarts = 8,
                                            std::uint64_t seed = 1, double tol = 1e-6)
{
    JumbledEstimate est;
    est.p = p;
    BetaSearchResult lower = search_beta_lower(G, p, restarts, seed);
    est.beta_lower = lower.beta;
    est.witness_X = lower.X.elements();
    est.witness_Y = lower.Y.elements();
    est.beta_upper = certify_beta_spectral(G, p, tol);
    double denom = p * p * std::pow(static_cast<double>(G.n()), 1.5);
    est.gamma_ratio = denom > 0.0 ? est.beta_upper / denom : 0.0;
    return est;
}

} // namespace h3
