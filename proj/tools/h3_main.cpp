// h3 - command line front end: generation, property checks, counting,
// classification and experiment sweeps over 3-uniform hypergraphs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "h3/h3.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

std::uint64_t effective_seed(std::uint64_t cli_seed)
{
    if (const char* env = std::getenv("H3_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw h3::H3Error(h3::Err::CONFIG_INVALID,
                              std::string("H3_SEED is not an integer: ") + env);
        }
    }
    return cli_seed;
}

h3::Rational density_rational(const h3::Hypergraph3& g)
{
    std::uint64_t total = h3::binom3(static_cast<std::uint64_t>(g.n()));
    if (total == 0)
        return h3::Rational(0, 1);
    return h3::Rational(static_cast<long long>(g.m()), static_cast<long long>(total));
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    h3::require(static_cast<bool>(f), h3::Err::IO_ERROR, "cannot open for writing: " + path);
    f << text;
    h3::require(static_cast<bool>(f), h3::Err::IO_ERROR, "write failed: " + path);
}

nlohmann::json load_json(const std::string& path)
{
    std::ifstream f(path);
    h3::require(static_cast<bool>(f), h3::Err::IO_ERROR, "cannot open: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        h3::fail(h3::Err::CONFIG_INVALID, std::string("bad JSON in ") + path + ": " + e.what());
    }
    return j;
}

struct GenArgs {
    std::string kind = "random";
    int n = 0;
    double p = 0.0;
    double p_in = 0.0;
    int s = 0;
    double keep = 1.0;
    std::string host;
    std::uint64_t seed = 1;
    std::string out;
};

int run_gen(const GenArgs& a)
{
    h3::GenSpec spec;
    spec.kind = h3::gen_kind_from_name(a.kind);
    spec.n = a.n;
    spec.p = a.p;
    spec.p_in = a.p_in;
    spec.s = a.s;
    spec.keep = a.keep;
    spec.seed = effective_seed(a.seed);

    h3::Hypergraph3 g;
    if (spec.kind == h3::GenKind::SUBSAMPLE && !a.host.empty()) {
        h3::Hypergraph3 host = h3::Hypergraph3::load(a.host);
        spec.n = host.n();
        g = h3::subsample(host, a.keep, spec.seed);
    } else {
        h3::require(spec.kind != h3::GenKind::SUBSAMPLE, h3::Err::CONFIG_INVALID,
                    "subsample needs --host FILE");
        g = h3::generate(spec);
    }

    if (a.out.empty()) {
        std::ostringstream os;
        g.write_h3(os);
        std::cout << os.str();
    } else {
        g.save(a.out);
        write_text(a.out + ".json", h3::gen_sidecar(spec, g).dump(2) + "\n");
        std::cout << h3::gen_sidecar(spec, g).dump() << "\n";
    }
    return kExitOk;
}

struct CheckArgs {
    std::string property;
    std::string in;
    std::string q, p, eta, delta, eps, C;
    int k = 2;
    std::string mode = "search";
    bool mode_given = false;
    int restarts = 6;
    std::uint64_t seed = 1;
    std::uint64_t budget = 20000000;
    double tol = 1e-6;
    unsigned threads = 1;
    std::string out;
};

int run_check(const CheckArgs& a)
{
    h3::Hypergraph3 g = h3::Hypergraph3::load(a.in);
    std::uint64_t seed = effective_seed(a.seed);

    if (a.property == "jumbled") {
        double p = a.p.empty() ? g.density() : h3::Rational::parse(a.p).value();
        h3::JumbledEstimate est = h3::estimate_jumbledness(g, p, a.restarts, seed, a.tol);
        nlohmann::ordered_json j;
        j["property"] = "jumbled";
        j["p"] = est.p;
        j["beta_lower"] = est.beta_lower;
        j["beta_upper"] = est.beta_upper;
        j["gamma_ratio"] = est.gamma_ratio;
        nlohmann::ordered_json xs = nlohmann::ordered_json::array();
        for (int s : est.witness_X) {
            auto [u, v] = h3::pair_from_index(s);
            xs.push_back({u, v});
        }
        j["witness"] = {{"X", xs}, {"Y", est.witness_Y}};
        std::string text = j.dump(2) + "\n";
        std::cout << text;
        if (!a.out.empty())
            write_text(a.out, text);
        return kExitOk;
    }

    h3::PropertyParams params;
    params.q = a.q.empty() ? density_rational(g) : h3::Rational::parse(a.q);
    params.p = a.p.empty() ? params.q : h3::Rational::parse(a.p);
    if (!a.eta.empty())
        params.eta = h3::Rational::parse(a.eta);
    if (!a.delta.empty())
        params.delta = h3::Rational::parse(a.delta);
    if (!a.eps.empty())
        params.eps = h3::Rational::parse(a.eps);
    if (!a.C.empty())
        params.C = h3::Rational::parse(a.C);
    params.k = a.k;
    // bdd picks exact levels automatically within its budget, so an
    // unspecified mode means "exact where feasible" there.
    h3::Mode mode = a.mode_given || a.property != "bdd" ? h3::mode_from_name(a.mode)
                                                        : h3::Mode::EXACT;

    const h3::VertexSet V = g.all_vertices();
    h3::PropertyReport rep;
    if (a.property == "qprime")
        rep = h3::check_qprime(g, params, mode, a.restarts, seed);
    else if (a.property == "disc")
        rep = h3::check_disc(g, V, V, params, mode, a.restarts, seed);
    else if (a.property == "pair")
        rep = h3::check_pair(g, V, V, params, a.threads);
    else if (a.property == "tuple")
        rep = h3::check_tuple(g, params.delta, params.q, a.threads);
    else if (a.property == "bdd")
        rep = h3::check_bdd(g, params, mode, a.budget, a.restarts, seed, a.threads);
    else
        h3::fail(h3::Err::CONFIG_INVALID, "unknown property '" + a.property + "'");

    std::string text = rep.to_json().dump(2) + "\n";
    std::cout << text;
    if (!a.out.empty())
        write_text(a.out, text);
    return rep.violated() ? kExitViolated : kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"3-uniform hypergraph pseudorandomness and motif-counting toolkit"};
    app.require_subcommand(1);

    GenArgs ga;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance (.h3 plus sidecar JSON)");
    gen->add_option("--kind", ga.kind,
                    "random | complete | subsample | planted-dense | planted-star")
        ->capture_default_str();
    gen->add_option("--n", ga.n, "vertex count");
    gen->add_option("--p", ga.p, "edge probability (background for planted kinds)");
    gen->add_option("--p-in", ga.p_in, "planted-dense: probability inside the planted set");
    gen->add_option("--s", ga.s, "planted-dense: planted set size");
    gen->add_option("--keep", ga.keep, "subsample: per-edge keep probability");
    gen->add_option("--host", ga.host, "subsample: host .h3 file");
    gen->add_option("--seed", ga.seed, "generator seed (H3_SEED overrides)");
    gen->add_option("--out", ga.out, "output .h3 path (stdout if omitted)");

    CheckArgs ca;
    CLI::App* check = app.add_subcommand("check", "run a property checker");
    check->add_option("property", ca.property, "qprime | disc | pair | tuple | bdd | jumbled")
        ->required();
    check->add_option("--in", ca.in, "input .h3 file")->required();
    check->add_option("--q", ca.q, "density q (decimal; defaults to the instance density)");
    check->add_option("--p", ca.p, "host density p (defaults to q)");
    check->add_option("--eta", ca.eta, "Q' size threshold fraction");
    check->add_option("--delta", ca.delta, "tolerance delta");
    check->add_option("--eps", ca.eps, "DISC tolerance epsilon");
    check->add_option("--C", ca.C, "BDD constant C");
    check->add_option("--k", ca.k, "BDD depth");
    check->add_option("--mode", ca.mode, "exact | search | spectral")
        ->capture_default_str()
        ->each([&ca](const std::string&) { ca.mode_given = true; });
    check->add_option("--restarts", ca.restarts, "search restarts")->capture_default_str();
    check->add_option("--seed", ca.seed, "search seed (H3_SEED overrides)");
    check->add_option("--budget", ca.budget, "BDD exact-enumeration budget");
    check->add_option("--tol", ca.tol, "spectral tolerance")->capture_default_str();
    check->add_option("--threads", ca.threads, "worker threads")->capture_default_str();
    check->add_option("--out", ca.out, "also write the report JSON here");

    struct {
        std::string host, pattern, q, format = "text";
        unsigned threads = 1;
    } cnt;
    CLI::App* count = app.add_subcommand("count", "count labeled embeddings of a pattern");
    count->add_option("--host", cnt.host, "host .h3 file")->required();
    count->add_option("--pattern", cnt.pattern, "pattern .h3 file")->required();
    count->add_option("--q", cnt.q, "baseline density q (defaults to the host density)");
    count->add_option("--threads", cnt.threads, "worker threads")->capture_default_str();
    count->add_option("--format", cnt.format, "text | json")->capture_default_str();

    struct {
        std::string pattern;
    } cls;
    CLI::App* classify = app.add_subcommand("classify", "classify a pattern hypergraph");
    classify->add_option("--pattern", cls.pattern, "pattern .h3 file")->required();

    struct {
        std::string config, out;
        unsigned threads = 0;
    } exp;
    CLI::App* experiment = app.add_subcommand("experiment", "run a sweep from a JSON config");
    experiment->add_option("--config", exp.config, "ExperimentConfig JSON file")->required();
    experiment->add_option("--threads", exp.threads, "override config threads");
    experiment->add_option("--out", exp.out, "override config output path");

    struct {
        std::string config, out;
        unsigned threads = 0;
    } imp;
    CLI::App* implication = app.add_subcommand("implication", "run the implication chain suite");
    implication->add_option("--config", imp.config, "ImplicationConfig JSON file")->required();
    implication->add_option("--threads", imp.threads, "override config threads");
    implication->add_option("--out", imp.out, "override config output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed())
            return run_gen(ga);
        if (check->parsed())
            return run_check(ca);
        if (count->parsed()) {
            h3::Hypergraph3 g = h3::Hypergraph3::load(cnt.host);
            h3::Pattern pat = h3::Pattern::load(cnt.pattern);
            std::optional<double> q;
            if (!cnt.q.empty())
                q = h3::Rational::parse(cnt.q).value();
            h3::EmbeddingCount ec = h3::count_embeddings(g, pat, q, cnt.threads);
            if (cnt.format == "json") {
                nlohmann::ordered_json j;
                j["count"] = ec.count;
                j["expected"] = ec.expected;
                j["relative_error"] = ec.relative_error;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "count=" << ec.count << " expected=" << ec.expected
                          << " relative_error=" << ec.relative_error << "\n";
            }
            return kExitOk;
        }
        if (classify->parsed()) {
            h3::Pattern pat = h3::Pattern::load(cls.pattern);
            nlohmann::ordered_json j;
            j["k"] = pat.k();
            j["m"] = pat.m();
            j["linear"] = pat.is_linear();
            nlohmann::ordered_json conns = nlohmann::ordered_json::array();
            if (pat.is_linear())
                for (const h3::Triple& e : pat.connector_edges())
                    conns.push_back({e[0], e[1], e[2]});
            j["connectors"] = conns;
            j["d_H"] = pat.degeneracy();
            j["D_H"] = pat.big_D();
            j["max_degree"] = pat.max_degree();
            if (pat.k() <= h3::kMaxAutVertices)
                j["aut"] = pat.automorphism_count();
            else
                j["aut"] = nullptr;
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }
        if (experiment->parsed()) {
            h3::ExperimentConfig config = h3::ExperimentConfig::from_json(load_json(exp.config));
            if (exp.threads > 0)
                config.threads = exp.threads;
            if (!exp.out.empty())
                config.out = exp.out;
            auto rows = h3::run_experiment(config);
            std::string text = config.format == "json"
                                   ? h3::rows_to_json(rows, config.timings).dump(2) + "\n"
                                   : h3::rows_to_csv(rows, config.timings);
            if (config.out.empty())
                std::cout << text;
            else
                write_text(config.out, text);
            bool any_violated = false;
            for (const auto& r : rows)
                if (r.status == "VIOLATED")
                    any_violated = true;
            return any_violated ? kExitViolated : kExitOk;
        }
        if (implication->parsed()) {
            h3::ImplicationConfig config = h3::ImplicationConfig::from_json(load_json(imp.config));
            if (imp.threads > 0)
                config.threads = imp.threads;
            if (!imp.out.empty())
                config.out = imp.out;
            h3::ImplicationReport report = h3::implication_suite(config);
            std::string text = report.to_json().dump(2) + "\n";
            if (config.out.empty())
                std::cout << text;
            else {
                write_text(config.out, text);
                std::uint64_t total = 0;
                for (const auto& e : report.edges)
                    total += e.events;
                std::cout << "instances=" << report.instances.size() << " events=" << total
                          << "\n";
            }
            return kExitOk;
        }
    } catch (const h3::H3Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
