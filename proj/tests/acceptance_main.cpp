// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with the measured numbers. Checks are non-fatal so every criterion
// reports even when one fails.

#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "h3/h3.hpp"
#include "oracles.hpp"

using namespace h3;

namespace {

const std::string kData = std::string(H3_DATA_DIR) + "/patterns/";
const std::string kBin = H3_BIN_PATH;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool pass, const std::string& detail)
{
    std::printf("[criterion %d] %s - %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

std::vector<Pattern> small_pool()
{
    std::vector<Pattern> pool;
    pool.push_back(Pattern::load(kData + "single_edge.h3"));
    pool.push_back(Pattern::load(kData + "loose_path.h3"));
    pool.push_back(Pattern::load(kData + "k4.h3"));
    pool.push_back(Pattern::build(3, {}));
    pool.push_back(Pattern::build(4, {{0, 1, 2}}));
    pool.push_back(Pattern::build(4, {{0, 1, 2}, {0, 1, 3}}));
    pool.push_back(Pattern::build(5, {{0, 1, 2}, {0, 3, 4}}));
    pool.push_back(Pattern::build(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}));
    return pool;
}

} // namespace

TEST_CASE("c1 oracle equivalence for embedding counting")
{
    Timer timer;
    auto pool = small_pool();
    int agree = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        int n = 6 + static_cast<int>(seed % 7);
        double p = 0.15 + 0.05 * static_cast<double>(seed % 5);
        Hypergraph3 G = gen_random(n, p, seed);
        const Pattern& H = pool[seed % pool.size()];
        if (count_embeddings(G, H).count == count_embeddings_oracle(G, H).count)
            ++agree;
    }
    double secs = timer.seconds();
    bool pass = agree == 100 && secs < 10.0;
    report(1, pass, "count_embeddings == oracle on " + std::to_string(agree) +
                        "/100 seeded (G,H), " + std::to_string(secs) + " s (budget 10 s)");
    CHECK(agree == 100);
    CHECK(secs < 10.0);
}

TEST_CASE("c2 desk-scale counting against n^k q^e at n=150")
{
    Timer timer;
    Pattern path5 = Pattern::load(kData + "loose_path.h3");
    Pattern path7 = Pattern::load(kData + "loose_3path.h3");
    int ok5 = 0, ok7 = 0;
    double worst5 = 0.0, worst7 = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Hypergraph3 G = gen_random(150, 0.25, seed);
        EmbeddingCount e5 = count_embeddings(G, path5, 0.25);
        EmbeddingCount e7 = count_embeddings(G, path7, 0.25);
        worst5 = std::max(worst5, std::abs(e5.relative_error));
        worst7 = std::max(worst7, std::abs(e7.relative_error));
        if (std::abs(e5.relative_error) < 0.10)
            ++ok5;
        if (std::abs(e7.relative_error) < 0.15)
            ++ok7;
    }
    double secs = timer.seconds();
    bool pass = ok5 == 20 && ok7 == 20 && secs < 60.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "k=5: %d/20 within 0.10 (worst %.4f); k=7: %d/20 within 0.15 (worst %.4f); "
                  "%.1f s (budget 60 s)",
                  ok5, worst5, ok7, worst7, secs);
    report(2, pass, buf);
    CHECK(ok5 == 20);
    CHECK(ok7 == 20);
    CHECK(secs < 60.0);
}

TEST_CASE("c3 jumbledness ratio decreases with n at fixed p")
{
    Timer timer;
    int seeds_ok = 0;
    std::ostringstream detail;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        double prev = 1e100;
        bool decreasing = true;
        for (int n : {30, 60, 120}) {
            Hypergraph3 g = gen_random(n, 0.5, seed);
            double sigma = certify_beta_spectral(g, 0.5, 1e-6);
            double ratio = sigma / (0.25 * std::pow(static_cast<double>(n), 1.5));
            if (seed == 1)
                detail << "n=" << n << ": " << ratio << " ";
            if (ratio >= prev)
                decreasing = false;
            prev = ratio;
        }
        if (decreasing)
            ++seeds_ok;
    }
    double secs = timer.seconds();
    bool pass = seeds_ok == 5 && secs < 120.0;
    report(3, pass, "strictly decreasing on " + std::to_string(seeds_ok) + "/5 seeds (" +
                        detail.str() + "), " + std::to_string(secs) + " s (budget 120 s)");
    CHECK(seeds_ok == 5);
    CHECK(secs < 120.0);
}

TEST_CASE("c4 exact checker statuses and recount equality at n=100")
{
    Timer timer;
    int tuple_verified = 0, pair_verified = 0;
    int tuple_recount_ok = 0, pair_recount_ok = 0;
    double frac_deg_acc = 0.0, frac_co_acc = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Hypergraph3 g = gen_random(100, 0.3, seed);
        const VertexSet V = g.all_vertices();

        PropertyReport rt = check_tuple(g, Rational::parse("0.15"), Rational::parse("0.3"));
        if (rt.status == Status::VERIFIED_EXACT)
            ++tuple_verified;
        frac_deg_acc += rt.margins.value("fraction_degree", 0.0);
        frac_co_acc += rt.margins.value("fraction_codegree", 0.0);

        PropertyParams pp;
        pp.q = Rational::parse("0.3");
        pp.p = Rational::parse("0.3");
        pp.delta = Rational::parse("0.05");
        PropertyReport rp = check_pair(g, V, V, pp);
        if (rp.status == Status::VERIFIED_EXACT)
            ++pair_verified;

        // Independent naive double-loop recomputation of every reported
        // quantity (exact integer comparison on the scaled sums).
        const int np = g.num_pairs();
        std::uint64_t bad_deg = 0, bad_co = 0;
        i128 sum1 = 0, sum2 = 0;
        const i128 qy = static_cast<i128>(3) * 100;
        const i128 q2y = static_cast<i128>(9) * 100;
        for (int s1 = 0; s1 < np; ++s1) {
            int t = g.pair_degree(s1);
            sum1 += iabs128(static_cast<i128>(10) * t - qy);
            i128 dev = iabs128(static_cast<i128>(10) * t - static_cast<i128>(3) * 100);
            if (!(dev * 20 < static_cast<i128>(3) * 3 * 100))
                ++bad_deg;
        }
        for (int s1 = 0; s1 < np; ++s1) {
            const VertexSet& n1 = g.pair_nbhd(s1);
            for (int s2 = 0; s2 < np; ++s2) {
                int t = and_count(n1, g.pair_nbhd(s2));
                if (s2 > s1) {
                    i128 dev = iabs128(static_cast<i128>(100) * t - static_cast<i128>(9) * 100);
                    if (!(dev * 20 < static_cast<i128>(3) * 9 * 100))
                        ++bad_co;
                }
                sum2 += iabs128(static_cast<i128>(100) * t - q2y);
            }
        }
        if (rt.margins.value("exceptional_degree", 0ULL) == bad_deg &&
            rt.margins.value("exceptional_codegree", 0ULL) == bad_co)
            ++tuple_recount_ok;
        if (rp.margins.value("sum_degree_scaled", std::string()) == i128_to_string(sum1) &&
            rp.margins.value("sum_codegree_scaled", std::string()) == i128_to_string(sum2))
            ++pair_recount_ok;
    }
    double secs = timer.seconds();
    bool status_pass = tuple_verified >= 18 && pair_verified >= 18;
    bool recount_pass = tuple_recount_ok == 20 && pair_recount_ok == 20;
    char buf[384];
    std::snprintf(buf, sizeof buf,
                  "TUPLE(0.15) VERIFIED %d/20, PAIR(0.05) VERIFIED %d/20 (criterion wants >= "
                  "18/20; mean exceptional fractions deg %.3f codeg %.3f vs budget 0.15); "
                  "recount equality %d+%d/40; %.1f s (budget 120 s)",
                  tuple_verified, pair_verified, frac_deg_acc / 20.0, frac_co_acc / 20.0,
                  tuple_recount_ok, pair_recount_ok, secs);
    report(4, status_pass && recount_pass && secs < 120.0, buf);
    // At n = 100, q = 0.3 the binomial degree scale nq = 30 fluctuates by
    // sigma ~ 4.5, so TUPLE(0.15) admits ~33% exceptional pairs against a 15%
    // budget and PAIR's L1 sums exceed the delta = 0.05 bounds by ~2.4x; the
    // status sub-criterion is not attainable for this generator scale and is
    // asserted as stated rather than weakened.
    CHECK(tuple_verified >= 18);
    CHECK(pair_verified >= 18);
    CHECK(tuple_recount_ok == 20);
    CHECK(pair_recount_ok == 20);
    CHECK(secs < 120.0);
}

TEST_CASE("c5 negative controls: planted structures are caught with sound witnesses")
{
    Timer timer;
    bool qprime_ok = false, bdd_ok = false;
    double dense_factor = 0.0, star_factor = 0.0;

    // Planted dense block (fixture seed 5).
    {
        Hypergraph3 g = gen_planted_dense(40, 0.05, 10, 0.9, 5);
        Rational qhat(static_cast<long long>(g.m()), static_cast<long long>(binom3(40)));
        PropertyParams params;
        params.q = qhat;
        params.p = qhat;
        params.eta = Rational::parse("0.25");
        params.delta = Rational::parse("0.2");
        PropertyReport rep = check_qprime(g, params, Mode::SEARCH, 6, 5);
        if (rep.status == Status::VIOLATED && rep.witness) {
            PairSet X(g.num_pairs());
            for (int s : rep.witness->pair_indices)
                X.set(s);
            VertexSet Y(g.n());
            for (int v : rep.witness->verts)
                Y.set(v);
            std::uint64_t e = g.incidence_count(X, Y);
            double base = qhat.value() * static_cast<double>(X.count()) *
                          static_cast<double>(Y.count());
            bool recount = static_cast<double>(e) == rep.witness->value &&
                           (rep.witness->side == "upper" ? e > 1.2 * base : e < 0.8 * base);
            qprime_ok = recount;
        }

        double p_pl = g.density();
        JumbledEstimate pl = estimate_jumbledness(g, p_pl, 8, 5);
        Hypergraph3 rnd = gen_random(40, p_pl, 5);
        JumbledEstimate rn = estimate_jumbledness(rnd, rnd.density(), 8, 5);
        double ratio_pl = pl.beta_lower / (p_pl * p_pl * std::pow(40.0, 1.5));
        double ratio_rn =
            rn.beta_lower / (rnd.density() * rnd.density() * std::pow(40.0, 1.5));
        dense_factor = ratio_pl / ratio_rn;
    }

    // Planted star (fixture seed 5; the p = 0 star itself is deterministic).
    {
        Hypergraph3 g = gen_planted_star(30, 0.0, 5);
        Rational qhat(static_cast<long long>(g.m()), static_cast<long long>(binom3(30)));
        PropertyParams params;
        params.q = qhat;
        params.p = qhat;
        params.C = Rational::parse("2");
        params.k = 2;
        PropertyReport rep = check_bdd(g, params, Mode::EXACT);
        if (rep.status == Status::VIOLATED && rep.witness) {
            const auto& tuple = rep.witness->pair_indices;
            VertexSet inter = g.all_vertices();
            for (int s : tuple)
                inter &= g.pair_nbhd(s);
            bool recount = static_cast<double>(inter.count()) == rep.witness->value &&
                           rep.witness->value > rep.witness->bound;
            bdd_ok = recount;
        }

        double p_st = g.density();
        JumbledEstimate pl = estimate_jumbledness(g, p_st, 8, 5);
        Hypergraph3 rnd = gen_random(30, p_st, 5);
        JumbledEstimate rn = estimate_jumbledness(rnd, rnd.density(), 8, 5);
        double ratio_pl = pl.beta_lower / (p_st * p_st * std::pow(30.0, 1.5));
        double ratio_rn =
            rn.beta_lower / (rnd.density() * rnd.density() * std::pow(30.0, 1.5));
        star_factor = ratio_pl / ratio_rn;
    }

    double secs = timer.seconds();
    bool pass = qprime_ok && bdd_ok && dense_factor >= 3.0 && star_factor >= 3.0 && secs < 60.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "Q' planted-dense VIOLATED+recount %s; BDD star VIOLATED+recount %s; beta "
                  "ratio factors: dense %.2f, star %.2f (>= 3); %.1f s (budget 60 s)",
                  qprime_ok ? "yes" : "no", bdd_ok ? "yes" : "no", dense_factor, star_factor,
                  secs);
    report(5, pass, buf);
    CHECK(qprime_ok);
    CHECK(bdd_ok);
    CHECK(dense_factor >= 3.0);
    CHECK(star_factor >= 3.0);
    CHECK(secs < 60.0);
}

TEST_CASE("c6 spectral certificate: sandwich, dense oracle, sampled soundness")
{
    Timer timer;
    int sandwich_ok = 0, oracle_ok = 0;
    std::uint64_t samples_total = 0, samples_ok = 0;
    int idx = 0;
    for (int n : {20, 30, 40, 50, 60}) {
        for (double p : {0.2, 0.3, 0.4, 0.5}) {
            std::uint64_t seed = 1000 + idx++;
            Hypergraph3 g = gen_random(n, p, seed);
            JumbledEstimate est = estimate_jumbledness(g, p, 6, seed);
            if (est.beta_lower <= est.beta_upper + 1e-6)
                ++sandwich_ok;
            double oracle = test_oracles::dense_sigma(g, p);
            if (std::abs(est.beta_upper - oracle) <= 1e-6 * std::max(1.0, oracle))
                ++oracle_ok;
            const double slack = 1e-6 * std::pow(static_cast<double>(n), 3);
            RestartRng rng(seed, 77);
            for (int rep = 0; rep < 500; ++rep) {
                PairSet X(g.num_pairs());
                VertexSet Y(g.n());
                for (int s = 0; s < g.num_pairs(); ++s)
                    if (rng.next_bool())
                        X.set(s);
                for (int v = 0; v < g.n(); ++v)
                    if (rng.next_bool())
                        Y.set(v);
                double e = static_cast<double>(g.incidence_count(X, Y));
                double dev = std::abs(e - p * X.count() * Y.count());
                ++samples_total;
                if (dev <= est.beta_upper *
                                   std::sqrt(static_cast<double>(X.count()) * Y.count()) +
                               slack)
                    ++samples_ok;
            }
        }
    }
    double secs = timer.seconds();
    bool pass = sandwich_ok == 20 && oracle_ok == 20 && samples_ok == samples_total &&
                secs < 120.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "sandwich %d/20, dense-SVD match %d/20 (1e-6 rel), soundness %llu/%llu "
                  "samples; %.1f s (budget 120 s)",
                  sandwich_ok, oracle_ok, static_cast<unsigned long long>(samples_ok),
                  static_cast<unsigned long long>(samples_total), secs);
    report(6, pass, buf);
    CHECK(sandwich_ok == 20);
    CHECK(oracle_ok == 20);
    CHECK(samples_ok == samples_total);
    CHECK(secs < 120.0);
}

TEST_CASE("c7 classifier fixtures match hand-derived ground truth")
{
    struct Row {
        const char* file;
        bool linear;
        std::size_t connectors;
        int d_H;
        int D_H;
        std::uint64_t aut;
    };
    const Row table[] = {
        {"loose_path.h3", true, 0, 1, 2, 8},
        {"loose_3path.h3", true, 0, 1, 2, 8},
        {"loose_cycle.h3", true, 0, 1, 2, 6},
        {"connector_star.h3", true, 1, 1, 3, 6},
        {"k4.h3", false, 0, 3, 3, 24},
        {"single_edge.h3", true, 0, 1, 1, 6},
        {"edgeless.h3", true, 0, 0, 0, 24},
        {"disjoint_edges.h3", true, 0, 1, 1, 72},
        {"near_connector_a.h3", true, 0, 1, 3, 4},
        {"near_connector_b.h3", true, 0, 1, 2, 4},
    };
    int rows_ok = 0;
    int oracle_rows_ok = 0;
    for (const Row& r : table) {
        Pattern pat = Pattern::load(kData + r.file);
        bool ok = pat.is_linear() == r.linear && pat.degeneracy() == r.d_H &&
                  pat.big_D() == r.D_H && pat.automorphism_count() == r.aut &&
                  (!r.linear || pat.connector_edges().size() == r.connectors);
        bool oracle_ok =
            pat.is_linear() == test_oracles::linear(pat.edges()) &&
            pat.degeneracy() == test_oracles::degeneracy(pat.k(), pat.edges()) &&
            pat.automorphism_count() == test_oracles::automorphisms(pat.k(), pat.edges()) &&
            (!pat.is_linear() ||
             pat.connector_edges() == test_oracles::connectors(pat.k(), pat.edges()));
        if (ok)
            ++rows_ok;
        if (oracle_ok)
            ++oracle_rows_ok;
        CHECK(ok);
        CHECK(oracle_ok);
    }
    bool pass = rows_ok == 10 && oracle_rows_ok == 10;
    report(7, pass, "hand table " + std::to_string(rows_ok) +
                        "/10 patterns, definition-check oracles " +
                        std::to_string(oracle_rows_ok) + "/10");
}

TEST_CASE("c8 implication chain: zero antecedent-pass/consequent-fail events")
{
    Timer timer;
    ImplicationConfig cfg;
    cfg.ns = {80};
    cfg.qs = {Rational::parse("0.2"), Rational::parse("0.3"), Rational::parse("0.4")};
    for (std::uint64_t s = 1; s <= 50; ++s)
        cfg.seeds.push_back(s);
    cfg.restarts = 4;
    cfg.threads = 1;
    ImplicationReport rep = implication_suite(cfg);
    std::uint64_t events = 0;
    for (const auto& e : rep.edges)
        events += e.events;
    double secs = timer.seconds();
    bool pass = rep.instances.size() == 150 && events == 0 && secs < 300.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%zu instances, %llu events across Q'->DISC->PAIR->TUPLE (antecedent "
                  "pass-throughs: %llu, %llu, %llu); %.1f s (budget 300 s)",
                  rep.instances.size(), static_cast<unsigned long long>(events),
                  static_cast<unsigned long long>(rep.edges[0].antecedent_passed),
                  static_cast<unsigned long long>(rep.edges[1].antecedent_passed),
                  static_cast<unsigned long long>(rep.edges[2].antecedent_passed), secs);
    report(8, pass, buf);
    CHECK(rep.instances.size() == 150);
    CHECK(events == 0);
    CHECK(secs < 300.0);
}

TEST_CASE("c9 determinism across thread counts")
{
    // Library level: counting, experiment rows and the implication report
    // must serialize identically for any worker count.
    bool counts_ok = true;
    Pattern path7 = Pattern::load(kData + "loose_3path.h3");
    for (std::uint64_t seed : {1, 2, 3}) {
        Hypergraph3 G = gen_random(60, 0.3, seed);
        if (count_embeddings(G, path7, 0.3, 1).count != count_embeddings(G, path7, 0.3, 4).count)
            counts_ok = false;
    }

    nlohmann::json cj;
    cj["generator"] = "random";
    cj["n"] = {24, 30};
    cj["q"] = {"0.3"};
    cj["seeds"] = nlohmann::json::array({1, 2, 3});
    cj["properties"] = nlohmann::json::array(
        {nlohmann::json{{"name", "tuple"}, {"delta", "0.5"}},
         nlohmann::json{{"name", "pair"}, {"delta", "0.5"}},
         nlohmann::json{{"name", "qprime"}, {"eta", "0.25"}, {"delta", "0.2"}}});
    cj["count"] = true;
    cj["patterns"] = {kData + "loose_path.h3"};
    cj["jumbled"] = nlohmann::json{{"restarts", 3}};
    ExperimentConfig cfg = ExperimentConfig::from_json(cj);
    cfg.threads = 1;
    std::string csv1 = rows_to_csv(run_experiment(cfg), false);
    cfg.threads = 4;
    std::string csv4 = rows_to_csv(run_experiment(cfg), false);
    bool experiment_ok = csv1 == csv4;

    ImplicationConfig icfg;
    icfg.ns = {20};
    icfg.qs = {Rational::parse("0.3")};
    icfg.seeds = {1, 2, 3, 4};
    icfg.restarts = 2;
    icfg.threads = 1;
    std::string imp1 = implication_suite(icfg).to_json().dump();
    icfg.threads = 4;
    std::string imp4 = implication_suite(icfg).to_json().dump();
    bool implication_ok = imp1 == imp4;

    // CLI level: the emitted artifact bytes agree across --threads.
    bool cli_ok = true;
    {
        std::string cfg_path = "/tmp/h3_acc_exp.json";
        {
            std::ofstream f(cfg_path);
            f << cj.dump();
        }
        std::string o1 = "/tmp/h3_acc_exp_t1.csv";
        std::string o2 = "/tmp/h3_acc_exp_t4.csv";
        std::string cmd1 = kBin + " experiment --config " + cfg_path + " --threads 1 --out " +
                           o1 + " > /dev/null 2>&1";
        std::string cmd2 = kBin + " experiment --config " + cfg_path + " --threads 4 --out " +
                           o2 + " > /dev/null 2>&1";
        int rc1 = std::system(cmd1.c_str());
        int rc2 = std::system(cmd2.c_str());
        cli_ok = rc1 != -1 && rc2 != -1;
        std::ifstream f1(o1), f2(o2);
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        cli_ok = cli_ok && !s1.str().empty() && s1.str() == s2.str();
    }

    bool pass = counts_ok && experiment_ok && implication_ok && cli_ok;
    std::string detail = std::string("counting ") + (counts_ok ? "ok" : "DIFFERS") +
                         ", experiment CSV " + (experiment_ok ? "byte-identical" : "DIFFERS") +
                         ", implication JSON " + (implication_ok ? "byte-identical" : "DIFFERS") +
                         ", CLI artifacts " + (cli_ok ? "byte-identical" : "DIFFERS");
    report(9, pass, detail);
    CHECK(counts_ok);
    CHECK(experiment_ok);
    CHECK(implication_ok);
    CHECK(cli_ok);
}
