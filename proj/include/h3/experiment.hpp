#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "h3/embedding.hpp"
#include "h3/error.hpp"
#include "h3/generate.hpp"
#include "h3/parallel.hpp"
#include "h3/pattern.hpp"
#include "h3/properties.hpp"
#include "h3/rational.hpp"
#include "h3/spectral.hpp"

#include "json.hpp"

namespace h3 {

inline Rational rational_from_json(const nlohmann::json& j, const char* what)
{
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Rational::of_int(j.get<long long>());
    if (j.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.9f", j.get<double>());
        return Rational::parse(buf);
    }
    fail(Err::CONFIG_INVALID, std::string(what) + ": expected number or decimal string");
}

struct PropertySpec {
    std::string name; // qprime | disc | pair | tuple | bdd
    PropertyParams params;
    bool has_q = false; // q explicitly set (otherwise instance density q is used)
    bool has_p = false;
    Mode mode = Mode::SEARCH;
    int restarts = 6;
    std::uint64_t budget = 20000000;
};

struct ExperimentConfig {
    GenKind generator = GenKind::RANDOM;
    std::vector<int> ns;
    std::vector<Rational> qs;              // densities of G
    std::optional<Rational> host_p;        // subsample: host density, >= q
    std::optional<Rational> alpha;         // validated as alpha p <= q when given
    int planted_s = 0;
    Rational planted_p_in{0, 1};
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> pattern_paths;
    bool count = false;
    bool jumbled = false;
    int jumbled_restarts = 8;
    double jumbled_tol = 1e-6;
    std::vector<PropertySpec> properties;
    unsigned threads = 1;
    bool timings = false;
    std::string out;
    std::string format = "csv"; // csv | json

    static ExperimentConfig from_json(const nlohmann::json& j);
};

struct ResultRow {
    std::uint64_t run_id = 0;
    std::string kind;
    int n = 0;
    double p = 0.0;
    double q = 0.0;
    std::uint64_t seed = 0;
    std::string pattern; // pattern path (counting rows)
    std::string item;    // count | jumbled | property name
    std::string mode;
    std::string status;  // OK | VERIFIED_EXACT | NO_VIOLATION_FOUND | VIOLATED | ERROR:<code>
    std::optional<std::uint64_t> count;
    std::optional<double> expected;
    std::optional<double> relative_error;
    std::optional<double> beta_lower;
    std::optional<double> beta_upper;
    std::optional<double> gamma_ratio;
    double wall_ms = 0.0;
};

namespace detail {

inline std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string opt_str(const std::optional<double>& v)
{
    return v ? fmt_double(*v) : std::string();
}

inline std::vector<std::uint64_t> seeds_from_json(const nlohmann::json& j)
{
    std::vector<std::uint64_t> out;
    if (j.is_array()) {
        for (const auto& s : j)
            out.push_back(s.get<std::uint64_t>());
    } else if (j.is_object()) {
        std::uint64_t from = j.value("from", 1ULL);
        std::uint64_t count = j.at("count").get<std::uint64_t>();
        for (std::uint64_t i = 0; i < count; ++i)
            out.push_back(from + i);
    } else if (j.is_number_integer()) {
        std::uint64_t count = j.get<std::uint64_t>();
        for (std::uint64_t i = 0; i < count; ++i)
            out.push_back(1 + i);
    } else {
        fail(Err::CONFIG_INVALID, "seeds: expected array, object or integer");
    }
    require(!out.empty(), Err::CONFIG_INVALID, "seeds: empty");
    return out;
}

} // namespace detail

inline ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j)
{
    ExperimentConfig c;
    c.generator = gen_kind_from_name(j.value("generator", std::string("random")));
    require(j.contains("n"), Err::CONFIG_INVALID, "config missing 'n'");
    for (const auto& v : j.at("n"))
        c.ns.push_back(v.get<int>());
    require(!c.ns.empty(), Err::CONFIG_INVALID, "'n' grid is empty");

    if (c.generator != GenKind::COMPLETE) {
        require(j.contains("q"), Err::CONFIG_INVALID, "config missing 'q'");
        for (const auto& v : j.at("q"))
            c.qs.push_back(rational_from_json(v, "q"));
    } else {
        c.qs.push_back(Rational::of_int(1));
    }
    require(!c.qs.empty(), Err::CONFIG_INVALID, "'q' grid is empty");

    if (j.contains("p"))
        c.host_p = rational_from_json(j.at("p"), "p");
    if (j.contains("alpha"))
        c.alpha = rational_from_json(j.at("alpha"), "alpha");
    if (j.contains("s"))
        c.planted_s = j.at("s").get<int>();
    if (j.contains("p_in"))
        c.planted_p_in = rational_from_json(j.at("p_in"), "p_in");

    c.seeds = j.contains("seeds") ? detail::seeds_from_json(j.at("seeds"))
                                  : std::vector<std::uint64_t>{1};

    if (j.contains("patterns"))
        for (const auto& v : j.at("patterns"))
            c.pattern_paths.push_back(v.get<std::string>());
    c.count = j.value("count", false);

    if (j.contains("jumbled")) {
        const auto& jj = j.at("jumbled");
        if (jj.is_boolean()) {
            c.jumbled = jj.get<bool>();
        } else {
            c.jumbled = true;
            c.jumbled_restarts = jj.value("restarts", 8);
            c.jumbled_tol = jj.value("tol", 1e-6);
        }
    }

    if (j.contains("properties")) {
        for (const auto& pj : j.at("properties")) {
            PropertySpec spec;
            spec.name = pj.at("name").get<std::string>();
            require(spec.name == "qprime" || spec.name == "disc" || spec.name == "pair" ||
                        spec.name == "tuple" || spec.name == "bdd",
                    Err::CONFIG_INVALID, "unknown property '" + spec.name + "'");
            if (pj.contains("eta"))
                spec.params.eta = rational_from_json(pj.at("eta"), "eta");
            if (pj.contains("delta"))
                spec.params.delta = rational_from_json(pj.at("delta"), "delta");
            if (pj.contains("eps"))
                spec.params.eps = rational_from_json(pj.at("eps"), "eps");
            if (pj.contains("C"))
                spec.params.C = rational_from_json(pj.at("C"), "C");
            if (pj.contains("k"))
                spec.params.k = pj.at("k").get<int>();
            if (pj.contains("q")) {
                spec.params.q = rational_from_json(pj.at("q"), "q");
                spec.has_q = true;
            }
            if (pj.contains("p")) {
                spec.params.p = rational_from_json(pj.at("p"), "p");
                spec.has_p = true;
            }
            if (pj.contains("mode"))
                spec.mode = mode_from_name(pj.at("mode").get<std::string>());
            spec.restarts = pj.value("restarts", 6);
            if (pj.contains("budget"))
                spec.budget = pj.at("budget").get<std::uint64_t>();
            c.properties.push_back(spec);
        }
    }

    c.threads = j.value("threads", 1u);
    c.timings = j.value("timings", false);
    c.out = j.value("out", std::string());
    c.format = j.value("format", std::string("csv"));
    require(c.format == "csv" || c.format == "json", Err::CONFIG_INVALID,
            "format must be csv or json");
    return c;
}

// Admissibility gate for count-vs-baseline comparison rows.
inline void require_counting_gate(const Pattern& pat, const std::string& name)
{
    require(pat.is_linear() && pat.connector_free() && pat.k() >= 4, Err::CONFIG_INVALID,
            "pattern '" + name +
                "' rejected for counting comparison: the gate requires a linear 3-uniform "
                "connector-free hypergraph on k >= 4 vertices");
}

inline std::string rows_to_csv(const std::vector<ResultRow>& rows, bool timings)
{
    std::string out = "run_id,kind,n,p,q,seed,pattern,item,mode,status,count,expected,"
                      "relative_error,beta_lower,beta_upper,gamma_ratio";
    if (timings)
        out += ",wall_ms";
    out += "\n";
    for (const ResultRow& r : rows) {
        out += std::to_string(r.run_id);
        out += ',';
        out += r.kind;
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += detail::fmt_double(r.p);
        out += ',';
        out += detail::fmt_double(r.q);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += r.pattern;
        out += ',';
        out += r.item;
        out += ',';
        out += r.mode;
        out += ',';
        out += r.status;
        out += ',';
        out += r.count ? std::to_string(*r.count) : std::string();
        out += ',';
        out += detail::opt_str(r.expected);
        out += ',';
        out += detail::opt_str(r.relative_error);
        out += ',';
        out += detail::opt_str(r.beta_lower);
        out += ',';
        out += detail::opt_str(r.beta_upper);
        out += ',';
        out += detail::opt_str(r.gamma_ratio);
        if (timings) {
            out += ',';
            out += detail::fmt_double(r.wall_ms);
        }
        out += '\n';
    }
    return out;
}

inline nlohmann::ordered_json rows_to_json(const std::vector<ResultRow>& rows, bool timings)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ResultRow& r : rows) {
        nlohmann::ordered_json j;
        j["run_id"] = r.run_id;
        j["kind"] = r.kind;
        j["n"] = r.n;
        j["p"] = r.p;
        j["q"] = r.q;
        j["seed"] = r.seed;
        j["pattern"] = r.pattern;
        j["item"] = r.item;
        j["mode"] = r.mode;
        j["status"] = r.status;
        j["count"] = r.count ? nlohmann::ordered_json(*r.count) : nlohmann::ordered_json(nullptr);
        j["expected"] =
            r.expected ? nlohmann::ordered_json(*r.expected) : nlohmann::ordered_json(nullptr);
        j["relative_error"] = r.relative_error ? nlohmann::ordered_json(*r.relative_error)
                                               : nlohmann::ordered_json(nullptr);
        j["beta_lower"] =
            r.beta_lower ? nlohmann::ordered_json(*r.beta_lower) : nlohmann::ordered_json(nullptr);
        j["beta_upper"] =
            r.beta_upper ? nlohmann::ordered_json(*r.beta_upper) : nlohmann::ordered_json(nullptr);
        j["gamma_ratio"] = r.gamma_ratio ? nlohmann::ordered_json(*r.gamma_ratio)
                                         : nlohmann::ordered_json(nullptr);
        if (timings)
            j["wall_ms"] = r.wall_ms;
        arr.push_back(j);
    }
    return arr;
}

// Runs the full grid: every (n, q, seed) x (property | pattern | jumbled)
// yields exactly one row or one recorded error row. Cells are independent;
// rows are emitted in grid order regardless of the worker count.
inline std::vector<ResultRow> run_experiment(const ExperimentConfig& config)
{
    // Validate grid constraints and the counting gate up front.
    for (const Rational& q : config.qs) {
        require(q.num > 0, Err::CONFIG_INVALID, "q must be positive");
        Rational p = config.host_p.value_or(q);
        require(cmp_frac(q.num, q.den, p.num, p.den) <= 0, Err::CONFIG_INVALID, "q must be <= p");
        if (config.alpha) {
            Rational ap = *config.alpha * p;
            require(cmp_frac(ap.num, ap.den, q.num, q.den) <= 0, Err::CONFIG_INVALID,
                    "alpha*p must be <= q");
        }
    }
    std::vector<Pattern> patterns;
    for (const std::string& path : config.pattern_paths) {
        Pattern pat = Pattern::load(path);
        if (config.count)
            require_counting_gate(pat, path);
        patterns.push_back(std::move(pat));
    }

    struct Cell {
        int n;
        Rational q;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (int n : config.ns)
        for (const Rational& q : config.qs)
            for (std::uint64_t seed : config.seeds)
                cells.push_back({n, q, seed});

    std::size_t items_per_cell =
        config.properties.size() + (config.count ? patterns.size() : 0) + (config.jumbled ? 1 : 0);
    std::vector<std::vector<ResultRow>> cell_rows(cells.size());

    parallel_chunks(cells.size(), 1, config.threads, [&](std::size_t ci, std::size_t, std::size_t) {
        const Cell& cell = cells[ci];
        const Rational p_host = config.host_p.value_or(cell.q);
        GenSpec spec;
        spec.kind = config.generator;
        spec.n = cell.n;
        spec.seed = cell.seed;
        spec.p = config.generator == GenKind::SUBSAMPLE ? p_host.value() : cell.q.value();
        if (config.generator == GenKind::SUBSAMPLE) {
            spec.keep = p_host.num == 0 ? 0.0 : cell.q.value() / p_host.value();
        }
        if (config.generator == GenKind::PLANTED_DENSE) {
            spec.s = config.planted_s;
            spec.p_in = config.planted_p_in.value();
        }

        auto& rows = cell_rows[ci];
        rows.reserve(items_per_cell);
        auto base_row = [&](const std::string& item) {
            ResultRow r;
            r.kind = gen_kind_name(config.generator);
            r.n = cell.n;
            r.p = p_host.value();
            r.q = cell.q.value();
            r.seed = cell.seed;
            r.item = item;
            return r;
        };

        Hypergraph3 G;
        try {
            G = generate(spec);
        } catch (const H3Error& e) {
            for (const PropertySpec& ps : config.properties) {
                ResultRow row = base_row(ps.name);
                row.status = std::string("ERROR:") + err_name(e.code());
                rows.push_back(std::move(row));
            }
            if (config.count)
                for (const std::string& pp : config.pattern_paths) {
                    ResultRow row = base_row("count");
                    row.pattern = pp;
                    row.status = std::string("ERROR:") + err_name(e.code());
                    rows.push_back(std::move(row));
                }
            if (config.jumbled) {
                ResultRow row = base_row("jumbled");
                row.status = std::string("ERROR:") + err_name(e.code());
                rows.push_back(std::move(row));
            }
            return;
        }
        const VertexSet V = G.all_vertices();

        for (const PropertySpec& ps : config.properties) {
            ResultRow row = base_row(ps.name);
            auto t0 = std::chrono::steady_clock::now();
            try {
                PropertyParams params = ps.params;
                if (!ps.has_q)
                    params.q = cell.q;
                if (!ps.has_p)
                    params.p = p_host;
                PropertyReport rep;
                if (ps.name == "qprime")
                    rep = check_qprime(G, params, ps.mode, ps.restarts, cell.seed);
                else if (ps.name == "disc")
                    rep = check_disc(G, V, V, params, ps.mode, ps.restarts, cell.seed);
                else if (ps.name == "pair")
                    rep = check_pair(G, V, V, params, 1);
                else if (ps.name == "tuple")
                    rep = check_tuple(G, params.delta, params.q, 1);
                else
                    rep = check_bdd(G, params, ps.mode, ps.budget, ps.restarts, cell.seed, 1);
                row.mode = mode_name(rep.mode);
                row.status = status_name(rep.status);
            } catch (const H3Error& e) {
                row.status = std::string("ERROR:") + err_name(e.code());
            }
            row.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
            rows.push_back(std::move(row));
        }

        if (config.count) {
            for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
                ResultRow row = base_row("count");
                row.pattern = config.pattern_paths[pi];
                auto t0 = std::chrono::steady_clock::now();
                try {
                    EmbeddingCount ec = count_embeddings(G, patterns[pi], cell.q.value(), 1);
                    row.count = ec.count;
                    row.expected = ec.expected;
                    row.relative_error = ec.relative_error;
                    row.status = "OK";
                } catch (const H3Error& e) {
                    row.status = std::string("ERROR:") + err_name(e.code());
                }
                row.wall_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
                rows.push_back(std::move(row));
            }
        }

        if (config.jumbled) {
            ResultRow row = base_row("jumbled");
            auto t0 = std::chrono::steady_clock::now();
            try {
                JumbledEstimate est = estimate_jumbledness(G, cell.q.value(),
                                                           config.jumbled_restarts, cell.seed,
                                                           config.jumbled_tol);
                row.beta_lower = est.beta_lower;
                row.beta_upper = est.beta_upper;
                row.gamma_ratio = est.gamma_ratio;
                row.status = "OK";
                row.mode = "SPECTRAL";
            } catch (const H3Error& e) {
                row.status = std::string("ERROR:") + err_name(e.code());
            }
            row.wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            rows.push_back(std::move(row));
        }
    });

    std::vector<ResultRow> rows;
    rows.reserve(cells.size() * items_per_cell);
    for (auto& cr : cell_rows)
        for (ResultRow& r : cr) {
            r.run_id = rows.size();
            rows.push_back(std::move(r));
        }
    return rows;
}

// ---------------------------------------------------------------------------
// Implication chain Q' -> DISC -> PAIR -> TUPLE at a fixed parameter ladder.
// An edge is assessed only on instances where every upstream antecedent
// passed (a failing antecedent leaves downstream implications unreported for
// that instance); all four checks still run so margins are observable.
// ---------------------------------------------------------------------------

struct ImplicationLadder {
    Rational eta{1, 4};
    Rational delta_qprime{1, 20};
    Rational eps_disc{1, 10};
    Rational delta_pair{1, 20};
    Rational delta_tuple{1, 5};
};

struct ImplicationConfig {
    std::vector<int> ns;
    std::vector<Rational> qs;
    std::vector<std::uint64_t> seeds;
    ImplicationLadder ladder;
    int restarts = 4;
    unsigned threads = 1;
    std::string out;

    static ImplicationConfig from_json(const nlohmann::json& j)
    {
        ImplicationConfig c;
        require(j.contains("n") && j.contains("q"), Err::CONFIG_INVALID,
                "implication config needs 'n' and 'q'");
        for (const auto& v : j.at("n"))
            c.ns.push_back(v.get<int>());
        for (const auto& v : j.at("q"))
            c.qs.push_back(rational_from_json(v, "q"));
        c.seeds = j.contains("seeds") ? detail::seeds_from_json(j.at("seeds"))
                                      : std::vector<std::uint64_t>{1};
        if (j.contains("ladder")) {
            const auto& L = j.at("ladder");
            if (L.contains("eta"))
                c.ladder.eta = rational_from_json(L.at("eta"), "eta");
            if (L.contains("delta_qprime"))
                c.ladder.delta_qprime = rational_from_json(L.at("delta_qprime"), "delta_qprime");
            if (L.contains("eps_disc"))
                c.ladder.eps_disc = rational_from_json(L.at("eps_disc"), "eps_disc");
            if (L.contains("delta_pair"))
                c.ladder.delta_pair = rational_from_json(L.at("delta_pair"), "delta_pair");
            if (L.contains("delta_tuple"))
                c.ladder.delta_tuple = rational_from_json(L.at("delta_tuple"), "delta_tuple");
        }
        c.restarts = j.value("restarts", 4);
        c.threads = j.value("threads", 1u);
        c.out = j.value("out", std::string());
        require(!c.ns.empty() && !c.qs.empty() && !c.seeds.empty(), Err::CONFIG_INVALID,
                "implication grid is empty");
        return c;
    }
};

struct ImplicationInstance {
    int n = 0;
    double q = 0.0;
    std::uint64_t seed = 0;
    Status qprime = Status::NO_VIOLATION_FOUND;
    Status disc = Status::NO_VIOLATION_FOUND;
    Status pair = Status::NO_VIOLATION_FOUND;
    Status tuple = Status::NO_VIOLATION_FOUND;
    double qprime_margin = 0.0; // worst relative deviation seen by the search
    double pair_degree_margin = 0.0;
    double tuple_degree_fraction = 0.0;
};

struct ImplicationEdge {
    std::string from;
    std::string to;
    std::uint64_t antecedent_passed = 0;
    std::uint64_t events = 0; // antecedent passed (chain-gated), consequent failed
    std::vector<std::size_t> event_instances;
};

struct ImplicationReport {
    std::vector<ImplicationInstance> instances;
    std::vector<ImplicationEdge> edges;

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j;
        nlohmann::ordered_json insts = nlohmann::ordered_json::array();
        for (const auto& r : instances) {
            nlohmann::ordered_json ij;
            ij["n"] = r.n;
            ij["q"] = r.q;
            ij["seed"] = r.seed;
            ij["qprime"] = status_name(r.qprime);
            ij["disc"] = status_name(r.disc);
            ij["pair"] = status_name(r.pair);
            ij["tuple"] = status_name(r.tuple);
            ij["qprime_worst_deviation"] = r.qprime_margin;
            ij["pair_degree_margin"] = r.pair_degree_margin;
            ij["tuple_degree_fraction"] = r.tuple_degree_fraction;
            insts.push_back(ij);
        }
        j["instances"] = insts;
        nlohmann::ordered_json ejs = nlohmann::ordered_json::array();
        for (const auto& e : edges) {
            nlohmann::ordered_json ej;
            ej["edge"] = e.from + "->" + e.to;
            ej["antecedent_passed"] = e.antecedent_passed;
            ej["events"] = e.events;
            ej["event_instances"] = e.event_instances;
            ejs.push_back(ej);
        }
        j["edges"] = ejs;
        std::uint64_t total = 0;
        for (const auto& e : edges)
            total += e.events;
        j["total_events"] = total;
        return j;
    }
};

inline ImplicationReport implication_suite(const ImplicationConfig& config)
{
    struct Cell {
        int n;
        Rational q;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (int n : config.ns)
        for (const Rational& q : config.qs)
            for (std::uint64_t seed : config.seeds)
                cells.push_back({n, q, seed});

    ImplicationReport report;
    report.instances.resize(cells.size());

    parallel_chunks(cells.size(), 1, config.threads, [&](std::size_t ci, std::size_t, std::size_t) {
        const Cell& cell = cells[ci];
        Hypergraph3 G = gen_random(cell.n, cell.q.value(), cell.seed);
        const VertexSet V = G.all_vertices();

        PropertyParams pq;
        pq.eta = config.ladder.eta;
        pq.delta = config.ladder.delta_qprime;
        pq.q = cell.q;
        pq.p = cell.q;
        PropertyReport rq = check_qprime(G, pq, Mode::SEARCH, config.restarts, cell.seed);

        PropertyParams pd;
        pd.q = cell.q;
        pd.p = cell.q;
        pd.eps = config.ladder.eps_disc;
        PropertyReport rd = check_disc(G, V, V, pd, Mode::SEARCH, config.restarts, cell.seed);

        PropertyParams pp;
        pp.q = cell.q;
        pp.p = cell.q;
        pp.delta = config.ladder.delta_pair;
        PropertyReport rp = check_pair(G, V, V, pp, 1);

        PropertyReport rt = check_tuple(G, config.ladder.delta_tuple, cell.q, 1);

        ImplicationInstance inst;
        inst.n = cell.n;
        inst.q = cell.q.value();
        inst.seed = cell.seed;
        inst.qprime = rq.status;
        inst.disc = rd.status;
        inst.pair = rp.status;
        inst.tuple = rt.status;
        inst.qprime_margin = rq.margins.value("worst_relative_deviation", 0.0);
        inst.pair_degree_margin = rp.margins.value("bound_degree", 0.0);
        inst.tuple_degree_fraction = rt.margins.value("fraction_degree", 0.0);
        report.instances[ci] = inst;
    });

    ImplicationEdge e1{"qprime", "disc", 0, 0, {}};
    ImplicationEdge e2{"disc", "pair", 0, 0, {}};
    ImplicationEdge e3{"pair", "tuple", 0, 0, {}};
    for (std::size_t i = 0; i < report.instances.size(); ++i) {
        const auto& r = report.instances[i];
        bool q_pass = r.qprime != Status::VIOLATED;
        bool d_pass = r.disc != Status::VIOLATED;
        bool p_pass = r.pair != Status::VIOLATED;
        bool t_pass = r.tuple != Status::VIOLATED;
        if (q_pass) {
            ++e1.antecedent_passed;
            if (!d_pass) {
                ++e1.events;
                e1.event_instances.push_back(i);
            } else {
                ++e2.antecedent_passed;
                if (!p_pass) {
                    ++e2.events;
                    e2.event_instances.push_back(i);
                } else {
                    ++e3.antecedent_passed;
                    if (!t_pass) {
                        ++e3.events;
                        e3.event_instances.push_back(i);
                    }
                }
            }
        }
    }
    report.edges = {e1, e2, e3};
    return report;
}

} // namespace h3
