#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "h3/error.hpp"
#include "h3/hypergraph.hpp"
#include "h3/parallel.hpp"
#include "h3/pattern.hpp"
#include "h3/rational.hpp"

namespace h3 {

struct EmbeddingCount {
    std::uint64_t count = 0;
    double expected = 0.0;       // n^k q^{#edges}
    double relative_error = 0.0; // (count - expected) / expected
};

namespace detail {

// ---------------------------------------------------------------------------
// Homomorphism counting for small (quotient) patterns.
//
// Vertices of degree >= 2 are enumerated by DFS; each edge with unplaced
// degree-1 vertices collapses to a closed-form factor once its placed part is
// known: |N(a,b)| for one open slot, 2 deg(a) for two, 6m for a fully open
// edge. Degree-0 vertices contribute a factor n each. Repeated images are
// legal for homomorphisms; an edge whose placed images collide contributes 0
// because triples have distinct vertices.
// ---------------------------------------------------------------------------

struct HomPlan {
    int k = 0;
    int n_core = 0;
    std::vector<int> order;                                // core vertices, DFS order
    std::vector<std::vector<std::pair<int, int>>> closers; // per position: other-two positions
    std::vector<std::pair<int, int>> pair_factors;         // positions (a,b): |N(img_a, img_b)|
    std::vector<int> deg_factors;                          // position a: 2 * deg(img_a)
    int free_edges = 0;                                    // factor 6m each
    int isolated = 0;                                      // factor n each
    bool last_collapses = false; // final level reduces to a popcount
};

// Estimated DFS node cost of a given core order, used to choose among
// permutations. davg models the typical pair-neighborhood size n*q.
inline double hom_order_cost(const std::vector<int>& order, const std::vector<Triple>& constraints,
                             const std::pair<int, int>* factor_vertices, std::size_t n_factors,
                             double n_est, double davg)
{
    const int nc = static_cast<int>(order.size());
    std::vector<int> pos(64, -1);
    for (int i = 0; i < nc; ++i)
        pos[order[i]] = i;
    std::vector<int> closer_count(nc, 0);
    for (const Triple& e : constraints) {
        int last = std::max({pos[e[0]], pos[e[1]], pos[e[2]]});
        ++closer_count[last];
    }
    bool collapse = nc > 0 && closer_count[nc - 1] > 0;
    if (collapse && factor_vertices) {
        for (std::size_t i = 0; i < n_factors; ++i) {
            const auto& fv = factor_vertices[i];
            if (pos[fv.first] == nc - 1 || (fv.second >= 0 && pos[fv.second] == nc - 1))
                collapse = false;
        }
    }
    double shrink = n_est > 0 ? std::min(1.0, davg / n_est) : 1.0;
    double nodes = 1.0;
    double cost = 0.0;
    for (int i = 0; i < nc; ++i) {
        double width;
        if (closer_count[i] == 0)
            width = n_est;
        else
            width = std::max(1.0, davg * std::pow(shrink, closer_count[i] - 1));
        if (i == nc - 1 && collapse) {
            cost += nodes * 4.0; // one intersection + popcount per parent
            nodes *= 1.0;
        } else {
            cost += nodes * width;
            nodes *= width;
        }
    }
    cost += nodes * (1.0 + static_cast<double>(n_factors));
    return cost;
}

inline HomPlan make_hom_plan(int k, const std::vector<Triple>& edges, double n_est = 100.0,
                             double davg = 25.0)
{
    HomPlan plan;
    plan.k = k;
    std::vector<int> deg(k, 0);
    for (const Triple& e : edges)
        for (int v : e)
            ++deg[v];

    std::vector<int> core;
    for (int v = 0; v < k; ++v) {
        if (deg[v] >= 2)
            core.push_back(v);
        else if (deg[v] == 0)
            ++plan.isolated;
    }
    plan.n_core = static_cast<int>(core.size());

    std::vector<bool> in_core(k, false);
    for (int v : core)
        in_core[v] = true;

    std::vector<Triple> constraint_edges; // all three vertices in the core
    std::vector<std::pair<int, int>> factor_verts; // core vertices of 2-core and 1-core edges
    for (const Triple& e : edges) {
        int placed_v[3];
        int c = 0;
        for (int v : e)
            if (in_core[v])
                placed_v[c++] = v;
        if (c == 3)
            constraint_edges.push_back(e);
        else if (c == 2)
            factor_verts.push_back({placed_v[0], placed_v[1]});
        else if (c == 1)
            factor_verts.push_back({placed_v[0], -1});
        else
            ++plan.free_edges;
    }

    // Order selection: exhaustive for small cores, greedy edge-closure first
    // otherwise.
    std::vector<int> best_order = core;
    if (plan.n_core >= 2 && plan.n_core <= 7) {
        std::vector<int> perm = core;
        std::sort(perm.begin(), perm.end());
        double best_cost = -1.0;
        do {
            double cost = hom_order_cost(perm, constraint_edges, factor_verts.data(),
                                         factor_verts.size(), n_est, davg);
            if (best_cost < 0.0 || cost < best_cost) {
                best_cost = cost;
                best_order = perm;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else if (plan.n_core > 7) {
        std::vector<int> pos(k, -1);
        std::vector<bool> placed(k, false);
        best_order.clear();
        for (int step = 0; step < plan.n_core; ++step) {
            int best = -1;
            int best_closed = -1;
            for (int v : core) {
                if (placed[v])
                    continue;
                int closed = 0;
                for (const Triple& e : constraint_edges) {
                    if (e[0] != v && e[1] != v && e[2] != v)
                        continue;
                    bool others = true;
                    for (int u : e)
                        if (u != v && !placed[u])
                            others = false;
                    if (others)
                        ++closed;
                }
                if (best == -1 || closed > best_closed ||
                    (closed == best_closed && deg[v] > deg[best])) {
                    best = v;
                    best_closed = closed;
                }
            }
            placed[best] = true;
            best_order.push_back(best);
        }
    }
    plan.order = best_order;

    std::vector<int> pos(k, -1);
    for (int i = 0; i < plan.n_core; ++i)
        pos[plan.order[i]] = i;

    plan.closers.assign(plan.n_core, {});
    for (const Triple& e : constraint_edges) {
        int p0 = pos[e[0]], p1 = pos[e[1]], p2 = pos[e[2]];
        int last = std::max({p0, p1, p2});
        std::pair<int, int> others;
        if (last == p0)
            others = {p1, p2};
        else if (last == p1)
            others = {p0, p2};
        else
            others = {p0, p1};
        plan.closers[last].push_back(others);
    }

    for (const auto& fv : factor_verts) {
        if (fv.second >= 0)
            plan.pair_factors.push_back({pos[fv.first], pos[fv.second]});
        else
            plan.deg_factors.push_back(pos[fv.first]);
    }

    plan.last_collapses = plan.n_core > 0 && !plan.closers[plan.n_core - 1].empty();
    for (const auto& pf : plan.pair_factors)
        if (pf.first == plan.n_core - 1 || pf.second == plan.n_core - 1)
            plan.last_collapses = false;
    for (int df : plan.deg_factors)
        if (df == plan.n_core - 1)
            plan.last_collapses = false;
    return plan;
}

inline i128 hom_count(const Hypergraph3& G, const HomPlan& plan)
{
    const int n = G.n();
    if (plan.k > 0 && n == 0)
        return 0;

    // Image-independent factors.
    i128 outer = 1;
    for (int i = 0; i < plan.isolated; ++i)
        outer *= n;
    for (int i = 0; i < plan.free_edges; ++i)
        outer *= static_cast<i128>(6) * G.m();
    if (outer == 0)
        return 0;

    if (plan.n_core == 0)
        return outer;
    if (n < 2)
        return 0; // a core vertex lies in an edge, which needs 3 distinct images

    std::vector<int> img(plan.n_core, -1);
    std::vector<VertexSet> scratch(plan.n_core, VertexSet(n));

    i128 total = 0;

    auto leaf_value = [&]() -> i128 {
        i128 prod = 1;
        for (const auto& pf : plan.pair_factors) {
            int a = img[pf.first], b = img[pf.second];
            if (a == b)
                return 0;
            prod *= G.pair_degree(pair_index(a, b));
            if (prod == 0)
                return 0;
        }
        for (int df : plan.deg_factors)
            prod *= static_cast<i128>(2) * G.degree(img[df]);
        return prod;
    };

    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == plan.n_core) {
            total += leaf_value();
            return;
        }
        const auto& cl = plan.closers[depth];
        if (cl.empty()) {
            for (int v = 0; v < n; ++v) {
                img[depth] = v;
                self(self, depth + 1);
            }
            return;
        }
        // Intersect the neighborhoods of all closing edges.
        int a0 = img[cl[0].first], b0 = img[cl[0].second];
        if (a0 == b0)
            return;
        if (cl.size() == 1 && depth + 1 == plan.n_core && plan.last_collapses) {
            total += leaf_value() * G.pair_degree(pair_index(a0, b0));
            return;
        }
        const VertexSet* cand = &G.pair_nbhd(pair_index(a0, b0));
        if (cl.size() > 1) {
            VertexSet& s = scratch[depth];
            s = *cand;
            for (std::size_t i = 1; i < cl.size(); ++i) {
                int a = img[cl[i].first], b = img[cl[i].second];
                if (a == b)
                    return;
                s &= G.pair_nbhd(pair_index(a, b));
            }
            cand = &s;
        }
        if (depth + 1 == plan.n_core && plan.last_collapses) {
            total += leaf_value() * cand->count();
            return;
        }
        // cand points either at an immutable pair neighborhood or at this
        // depth's scratch buffer, so deeper levels cannot clobber it.
        cand->for_each([&](int v) {
            img[depth] = v;
            self(self, depth + 1);
        });
    };
    dfs(dfs, 0);
    return outer * total;
}

inline i128 hom_count(const Hypergraph3& G, int k, const std::vector<Triple>& edges)
{
    double davg = G.num_pairs() > 0
                      ? 3.0 * static_cast<double>(G.m()) / static_cast<double>(G.num_pairs())
                      : 1.0;
    return hom_count(G, make_hom_plan(k, edges, G.n(), std::max(1.0, davg)));
}

// ---------------------------------------------------------------------------
// Injective counting by plain backtracking over all non-isolated vertices.
// Candidate sets come from intersecting pair neighborhoods of closed edges;
// isolated pattern vertices contribute a falling-factorial multiplier.
// ---------------------------------------------------------------------------

inline i128 inj_count_backtrack(const Hypergraph3& G, int k, const std::vector<Triple>& edges)
{
    const int n = G.n();
    if (k > n)
        return 0;

    std::vector<int> deg(k, 0);
    for (const Triple& e : edges)
        for (int v : e)
            ++deg[v];

    std::vector<int> active; // vertices lying in at least one edge
    for (int v = 0; v < k; ++v)
        if (deg[v] > 0)
            active.push_back(v);
    int na = static_cast<int>(active.size());
    int isolated = k - na;

    i128 iso_factor = 1;
    for (int i = 0; i < isolated; ++i)
        iso_factor *= n - na - i;
    if (iso_factor == 0)
        return 0;
    if (na == 0)
        return iso_factor;

    // Static order: max degree first, then maximize closed edges.
    std::vector<int> pos(k, -1);
    std::vector<bool> placed(k, false);
    std::vector<int> order;
    for (int step = 0; step < na; ++step) {
        int best = -1, best_closed = -1;
        for (int v : active) {
            if (placed[v])
                continue;
            int closed = 0;
            for (const Triple& e : edges) {
                if (e[0] != v && e[1] != v && e[2] != v)
                    continue;
                bool others = true;
                for (int u : e)
                    if (u != v && !placed[u])
                        others = false;
                if (others)
                    ++closed;
            }
            if (best == -1 || closed > best_closed ||
                (closed == best_closed && deg[v] > deg[best])) {
                best = v;
                best_closed = closed;
            }
        }
        placed[best] = true;
        pos[best] = step;
        order.push_back(best);
    }

    std::vector<std::vector<std::pair<int, int>>> closers(na);
    for (const Triple& e : edges) {
        int p0 = pos[e[0]], p1 = pos[e[1]], p2 = pos[e[2]];
        int last = std::max({p0, p1, p2});
        if (last == p0)
            closers[last].push_back({p1, p2});
        else if (last == p1)
            closers[last].push_back({p0, p2});
        else
            closers[last].push_back({p0, p1});
    }

    std::vector<int> img(na, -1);
    VertexSet used(n);
    i128 total = 0;

    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == na) {
            total += 1;
            return;
        }
        const auto& cl = closers[depth];
        if (cl.empty()) {
            for (int v = 0; v < n; ++v) {
                if (used.test(v))
                    continue;
                img[depth] = v;
                used.set(v);
                self(self, depth + 1);
                used.reset(v);
            }
            return;
        }
        VertexSet cand = G.pair_nbhd(pair_index(img[cl[0].first], img[cl[0].second]));
        for (std::size_t i = 1; i < cl.size(); ++i)
            cand &= G.pair_nbhd(pair_index(img[cl[i].first], img[cl[i].second]));
        cand.subtract(used);
        if (depth + 1 == na) {
            total += cand.count();
            return;
        }
        cand.for_each([&](int v) {
            img[depth] = v;
            used.set(v);
            self(self, depth + 1);
            used.reset(v);
        });
    };
    dfs(dfs, 0);
    return total * iso_factor;
}

// ---------------------------------------------------------------------------
// Exact injective counting via Moebius inversion over the partition lattice:
//   inj(H, G) = sum over partitions P of V(H) of mu(P) * hom(H/P, G),
//   mu(P) = prod over blocks B of (-1)^{|B|-1} (|B|-1)!.
// Quotients that squeeze two vertices of an edge together contribute 0 and
// are dropped. For k <= 7 the surviving quotients are deduplicated up to
// isomorphism so each distinct hom value is evaluated once.
// ---------------------------------------------------------------------------

struct QuotientTerm {
    int k = 0;
    std::vector<Triple> edges;
    i128 weight = 0;
    HomPlan plan;
};

inline std::vector<i128> block_weight_table(int k)
{
    // (-1)^{s-1} (s-1)! for block size s.
    std::vector<i128> w(k + 1, 0);
    i128 f = 1;
    for (int s = 1; s <= k; ++s) {
        if (s > 1)
            f *= (s - 1);
        w[s] = (s % 2 == 1) ? f : -f;
    }
    return w;
}

inline std::vector<QuotientTerm> mobius_plan(int k, const std::vector<Triple>& edges,
                                             double n_est = 100.0, double davg = 25.0)
{
    const auto wtab = block_weight_table(std::max(k, 1));
    const bool dedup = k <= 7;

    std::map<std::pair<int, std::vector<Triple>>, QuotientTerm> classes;

    // Restricted growth strings enumerate set partitions of {0..k-1}.
    std::vector<int> rgs(std::max(k, 1), 0);
    std::vector<int> maxv(std::max(k, 1) + 1, 0);
    auto emit = [&]() {
        int blocks = 0;
        for (int i = 0; i < k; ++i)
            blocks = std::max(blocks, rgs[i] + 1);
        std::vector<int> bsize(blocks, 0);
        for (int i = 0; i < k; ++i)
            ++bsize[rgs[i]];

        std::vector<Triple> qedges;
        qedges.reserve(edges.size());
        for (const Triple& e : edges) {
            Triple q{rgs[e[0]], rgs[e[1]], rgs[e[2]]};
            std::sort(q.begin(), q.end());
            if (q[0] == q[1] || q[1] == q[2])
                return; // merged inside an edge: hom is 0
            qedges.push_back(q);
        }
        std::sort(qedges.begin(), qedges.end());
        qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());

        i128 w = 1;
        for (int b = 0; b < blocks; ++b)
            w *= wtab[bsize[b]];

        std::pair<int, std::vector<Triple>> key;
        if (dedup) {
            // Lex-least edge list over all relabelings of the quotient.
            std::vector<int> perm(blocks);
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<Triple> best;
            bool first = true;
            do {
                std::vector<Triple> mapped;
                mapped.reserve(qedges.size());
                for (const Triple& e : qedges) {
                    Triple t{perm[e[0]], perm[e[1]], perm[e[2]]};
                    std::sort(t.begin(), t.end());
                    mapped.push_back(t);
                }
                std::sort(mapped.begin(), mapped.end());
                if (first || mapped < best) {
                    best = std::move(mapped);
                    first = false;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            key = {blocks, std::move(best)};
        } else {
            key = {blocks, qedges};
        }

        auto it = classes.find(key);
        if (it == classes.end()) {
            QuotientTerm term;
            term.k = blocks;
            term.edges = key.second;
            term.weight = w;
            classes.emplace(std::move(key), std::move(term));
        } else {
            it->second.weight += w;
        }
    };

    if (k == 0) {
        QuotientTerm term;
        term.k = 0;
        term.weight = 1;
        std::vector<QuotientTerm> out{term};
        out[0].plan = make_hom_plan(0, {});
        return out;
    }

    // Iterative RGS enumeration.
    int i = k - 1;
    for (;;) {
        emit();
        i = k - 1;
        while (i > 0 && rgs[i] == maxv[i] + 1)
            --i;
        if (i == 0)
            break;
        ++rgs[i];
        maxv[i + 1] = std::max(maxv[i], rgs[i]);
        for (int j = i + 1; j < k; ++j) {
            rgs[j] = 0;
            maxv[j + 1] = maxv[j];
        }
    }

    std::vector<QuotientTerm> out;
    out.reserve(classes.size());
    for (auto& [key, term] : classes) {
        if (term.weight == 0)
            continue;
        term.plan = make_hom_plan(term.k, term.edges, n_est, davg);
        out.push_back(std::move(term));
    }
    return out;
}

inline i128 inj_count_mobius(const Hypergraph3& G, int k, const std::vector<Triple>& edges,
                             unsigned threads = 1)
{
    if (k > G.n())
        return 0;
    double davg = G.num_pairs() > 0
                      ? 3.0 * static_cast<double>(G.m()) / static_cast<double>(G.num_pairs())
                      : 1.0;
    auto terms = mobius_plan(k, edges, G.n(), std::max(1.0, davg));
    std::vector<i128> partial(terms.size(), 0);
    parallel_chunks(terms.size(), 1, threads, [&](std::size_t c, std::size_t b, std::size_t) {
        (void)c;
        partial[b] = terms[b].weight * hom_count(G, terms[b].plan);
    });
    i128 total = 0;
    for (i128 p : partial)
        total += p;
    return total;
}

} // namespace detail

// Exact number of labeled embeddings (injections preserving every pattern
// edge, not necessarily induced). q defaults to the host edge density and
// only feeds the expected-count baseline n^k q^{#edges}.
inline EmbeddingCount count_embeddings(const Hypergraph3& G, const Pattern& H,
                                       std::optional<double> q = std::nullopt,
                                       unsigned threads = 1)
{
    const int k = H.k();
    require(k <= kMaxPatternVertices, Err::PATTERN_TOO_LARGE, "pattern too large");

    i128 raw;
    if (k <= 8)
        raw = detail::inj_count_mobius(G, k, H.edges(), threads);
    else
        raw = detail::inj_count_backtrack(G, k, H.edges());

    require(raw >= 0, Err::COUNT_OVERFLOW, "negative embedding count (internal)");
    require(raw <= static_cast<i128>(UINT64_MAX), Err::COUNT_OVERFLOW,
            "embedding count exceeds 64 bits");

    EmbeddingCount out;
    out.count = static_cast<std::uint64_t>(raw);
    double qq = q.value_or(G.density());
    double expected = std::pow(static_cast<double>(G.n()), k) *
                      std::pow(qq, static_cast<double>(H.m()));
    out.expected = expected;
    out.relative_error =
        expected > 0.0 ? (static_cast<double>(out.count) - expected) / expected : 0.0;
    return out;
}

// Reference implementation: enumerate every injection and test every edge.
inline EmbeddingCount count_embeddings_oracle(const Hypergraph3& G, const Pattern& H,
                                              std::optional<double> q = std::nullopt)
{
    const int k = H.k();
    const int n = G.n();
    require(n <= 12 && k <= 6, Err::ORACLE_TOO_LARGE,
            "oracle limited to n <= 12 and k <= 6");

    std::uint64_t count = 0;
    std::vector<int> img(k, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            for (const Triple& e : H.edges())
                if (!G.has_edge(img[e[0]], img[e[1]], img[e[2]]))
                    return;
            ++count;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v])
                continue;
            used[v] = true;
            img[depth] = v;
            self(self, depth + 1);
            used[v] = false;
        }
    };
    if (k <= n)
        rec(rec, 0);

    EmbeddingCount out;
    out.count = count;
    double qq = q.value_or(G.density());
    double expected =
        std::pow(static_cast<double>(n), k) * std::pow(qq, static_cast<double>(H.m()));
    out.expected = expected;
    out.relative_error =
        expected > 0.0 ? (static_cast<double>(out.count) - expected) / expected : 0.0;
    return out;
}

} // namespace h3
