#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "h3/generate.hpp"
#include "h3/pattern.hpp"
#include "h3/rng.hpp"

using namespace h3;

namespace {

const std::string kData = std::string(H3_DATA_DIR) + "/patterns/";

// Definitional re-implementations, kept deliberately naive.

bool oracle_linear(int /*k*/, const std::vector<Triple>& edges)
{
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            int shared = 0;
            for (int x : edges[i])
                for (int y : edges[j])
                    if (x == y)
                        ++shared;
            if (shared > 1)
                return false;
        }
    return true;
}

std::vector<Triple> oracle_connectors(int k, const std::vector<Triple>& edges)
{
    auto contains = [](const Triple& t, int v) { return t[0] == v || t[1] == v || t[2] == v; };
    std::vector<Triple> out;
    for (const Triple& e : edges) {
        bool conn = false;
        for (int v = 0; v < k && !conn; ++v) {
            if (contains(e, v))
                continue;
            int cnt = 0;
            for (const Triple& f : edges) {
                if (!contains(f, v))
                    continue;
                int shared = 0;
                for (int x : e)
                    if (contains(f, x))
                        ++shared;
                if (shared == 1)
                    ++cnt;
            }
            if (cnt >= 3)
                conn = true;
        }
        if (conn)
            out.push_back(e);
    }
    return out;
}

// Max over induced vertex subsets of the minimum degree.
int oracle_degeneracy(int k, const std::vector<Triple>& edges)
{
    int best = 0;
    for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<int> deg(k, 0);
        for (const Triple& e : edges) {
            bool inside = true;
            for (int v : e)
                if (!(mask & (1 << v)))
                    inside = false;
            if (inside)
                for (int v : e)
                    ++deg[v];
        }
        int mn = INT_MAX;
        for (int v = 0; v < k; ++v)
            if (mask & (1 << v))
                mn = std::min(mn, deg[v]);
        best = std::max(best, mn);
    }
    return best;
}

std::uint64_t oracle_aut(int k, std::vector<Triple> edges)
{
    std::sort(edges.begin(), edges.end());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (const Triple& e : edges) {
            Triple m{perm[e[0]], perm[e[1]], perm[e[2]]};
            std::sort(m.begin(), m.end());
            if (!std::binary_search(edges.begin(), edges.end(), m)) {
                ok = false;
                break;
            }
        }
        if (ok)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

struct Fixture {
    const char* file;
    int k;
    std::uint64_t m;
    bool linear;
    std::size_t connectors;
    int d_H;
    int D_H;
    int max_degree;
    std::uint64_t aut;
};

} // namespace

TEST_CASE("fixture corpus matches hand-derived classification")
{
    // Values derived by hand and cross-checked below against the
    // definitional oracles.
    const Fixture table[] = {
        {"loose_path.h3", 5, 2, true, 0, 1, 2, 2, 8},
        {"loose_3path.h3", 7, 3, true, 0, 1, 2, 2, 8},
        {"loose_cycle.h3", 6, 3, true, 0, 1, 2, 2, 6},
        {"connector_star.h3", 7, 4, true, 1, 1, 3, 3, 6},
        {"k4.h3", 4, 4, false, 0, 3, 3, 3, 24},
        {"single_edge.h3", 3, 1, true, 0, 1, 1, 1, 6},
        {"edgeless.h3", 4, 0, true, 0, 0, 0, 0, 24},
        {"disjoint_edges.h3", 6, 2, true, 0, 1, 1, 1, 72},
        {"near_connector_a.h3", 8, 4, true, 0, 1, 3, 3, 4},
        // aut group: identity, (0 2)(3 6)(4 5), (0 4)(2 5) and their product.
        {"near_connector_b.h3", 7, 4, true, 0, 1, 2, 2, 4},
    };

    for (const Fixture& f : table) {
        CAPTURE(f.file);
        Pattern pat = Pattern::load(kData + f.file);
        CHECK(pat.k() == f.k);
        CHECK(pat.m() == f.m);
        CHECK(pat.is_linear() == f.linear);
        if (f.linear)
            CHECK(pat.connector_edges().size() == f.connectors);
        CHECK(pat.degeneracy() == f.d_H);
        CHECK(pat.big_D() == f.D_H);
        CHECK(pat.max_degree() == f.max_degree);
        CHECK(pat.automorphism_count() == f.aut);

        // Exhaustive definition checks.
        CHECK(pat.is_linear() == oracle_linear(pat.k(), pat.edges()));
        if (pat.is_linear())
            CHECK(pat.connector_edges() == oracle_connectors(pat.k(), pat.edges()));
        CHECK(pat.degeneracy() == oracle_degeneracy(pat.k(), pat.edges()));
        CHECK(pat.automorphism_count() == oracle_aut(pat.k(), pat.edges()));
        CHECK(pat.big_D() == std::min(3 * pat.degeneracy(), pat.max_degree()));
    }
}

TEST_CASE("connector example: the star certificate names the base edge")
{
    Pattern star = Pattern::load(kData + "connector_star.h3");
    REQUIRE(star.connector_edges().size() == 1);
    CHECK(star.connector_edges()[0] == Triple{0, 1, 2});
    // The base edge plus a loose path keeps the junction but loses the
    // certificate: only two spokes remain once {2,3,6} is dropped.
    Pattern weakened = Pattern::build(7, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}});
    CHECK(weakened.connector_free());
}

TEST_CASE("connector query on a non-linear pattern refuses")
{
    Pattern k4 = Pattern::load(kData + "k4.h3");
    CHECK_FALSE(k4.is_linear());
    CHECK_THROWS_AS(k4.connector_edges(), H3Error);
    try {
        k4.connector_edges();
    } catch (const H3Error& e) {
        CHECK(e.code() == Err::NOT_LINEAR);
    }
}

TEST_CASE("classification agrees with oracles on random small patterns")
{
    int tested = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        int k = 4 + static_cast<int>(seed % 4); // 4..7
        double p = 0.1 + 0.08 * static_cast<double>(seed % 5);
        Hypergraph3 g = gen_random(k, p, seed);
        Pattern pat = Pattern::from_hypergraph(g);
        CAPTURE(seed);
        CHECK(pat.is_linear() == oracle_linear(k, pat.edges()));
        if (pat.is_linear())
            CHECK(pat.connector_edges() == oracle_connectors(k, pat.edges()));
        CHECK(pat.degeneracy() == oracle_degeneracy(k, pat.edges()));
        CHECK(pat.automorphism_count() == oracle_aut(k, pat.edges()));
        ++tested;
    }
    CHECK(tested == 60);
}

TEST_CASE("size limits")
{
    CHECK_THROWS_AS(Pattern::build(17, {}), H3Error);
    // Max degree within limits is fine.
    Pattern big = Pattern::build(16, {{0, 1, 2}, {3, 4, 5}});
    CHECK(big.k() == 16);
    CHECK_THROWS_AS(Pattern::build(11, {{0, 1, 2}}).automorphism_count(), H3Error);
}

TEST_CASE("degeneracy of the complete pattern and spec examples")
{
    Pattern k4 = Pattern::load(kData + "k4.h3");
    CHECK(k4.degeneracy() == 3);
    CHECK(k4.big_D() == 3); // min(9, 3)
    Pattern path = Pattern::load(kData + "loose_path.h3");
    CHECK(path.degeneracy() == 1);
    CHECK(path.big_D() == 2); // min(3, 2)
    Pattern edge = Pattern::load(kData + "single_edge.h3");
    CHECK(edge.big_D() == 1); // min(3, 1)
    Pattern none = Pattern::load(kData + "edgeless.h3");
    CHECK(none.degeneracy() == 0);
}

TEST_CASE("connector intuition: the 2-uniform analog is an edge in a triangle")
{
    // In the 2-uniform world a connector is an edge {a, b} with an outside
    // vertex v adjacent to both ends, i.e. an edge lying in a triangle. The
    // 3-uniform certificate is the same picture one dimension up: H_C joins
    // every vertex of the base edge to the apex 3 by a once-intersecting
    // edge, and removing any one spoke destroys the certificate.
    Pattern star = Pattern::load(kData + "connector_star.h3");
    REQUIRE_FALSE(star.connector_free());
    std::vector<Triple> edges = star.edges();
    for (std::size_t drop = 1; drop < edges.size(); ++drop) {
        std::vector<Triple> fewer;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (i != drop)
                fewer.push_back(edges[i]);
        CHECK(Pattern::build(7, fewer).connector_free());
    }
}
