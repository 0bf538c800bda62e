#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetaforge/bounds.hpp"
#include "thetaforge/construct.hpp"
#include "thetaforge/gf.hpp"
#include "thetaforge/linrep.hpp"
#include "thetaforge/oracle.hpp"
#include "thetaforge/verify.hpp"

namespace tf = thetaforge;

namespace {

constexpr const char* kVersion = "0.1.0";

struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
};

std::optional<PrimePower> factor_prime_power(std::uint64_t q) {
    if (q < 2 || q > 65536) return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) return std::nullopt;
    return PrimePower{static_cast<std::uint32_t>(p), e};
}

// base field modulus comes from the same seed that drives the extension search
tf::Field make_field(const PrimePower& pp, std::uint64_t seed) {
    if (pp.e == 1) return tf::Field::prime_field(pp.p);
    tf::Field zp = tf::Field::prime_field(pp.p);
    return tf::Field(pp.p, pp.e, tf::find_irreducible(zp, pp.e, seed));
}

std::uint64_t max_edges_cap() {
    const char* env = std::getenv("THETA_FORGE_MAX_EDGES");
    if (!env) return tf::kDefaultMaxEdges;
    std::string text(env);
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || value == 0)
        throw std::invalid_argument("THETA_FORGE_MAX_EDGES is not a positive integer");
    return value;
}

void write_manifest(const std::string& data_path, const std::string& subcommand,
                    const nlohmann::json& parameters, const std::vector<std::string>& inputs,
                    double wall_ms) {
    nlohmann::json m;
    m["tool"] = "theta-forge";
    m["version"] = kVersion;
    m["subcommand"] = subcommand;
    m["parameters"] = parameters;
    m["inputs"] = inputs;
    m["outputs"] = {data_path};
    m["wall-ms"] = wall_ms;
    const std::string path = data_path + ".manifest.json";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << m.dump(2) << '\n';
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

struct ConstructArgs {
    std::uint64_t q = 0;
    std::uint32_t t = 0;
    std::uint64_t seed = 0;
    std::string in;
    std::string out;
    bool oracle = false;
};

int run_construct(const ConstructArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    if (!a.in.empty() && (a.q != 0 || a.t != 0)) {
        std::cerr << "error: --in audits an existing file; it excludes --q and --t\n";
        return 2;
    }
    tf::PointSet set;
    std::optional<tf::NormSetProvenance> prov;
    nlohmann::json params;
    std::vector<std::string> inputs;
    if (!a.in.empty()) {
        auto f = open_input(a.in);
        set = tf::read_point_set(f, &prov);
        inputs.push_back(a.in);
        params["in"] = a.in;
    } else {
        auto pp = factor_prime_power(a.q);
        if (!pp) {
            std::cerr << "error: --q must be a prime power in [2, 65536]\n";
            return 2;
        }
        if (a.t < 2 || a.q <= a.t) {
            std::cerr << "error: construct requires q > t >= 2\n";
            return 2;
        }
        tf::Field gf = make_field(*pp, a.seed);
        tf::NormSet ns = tf::build_norm_set(gf, a.t, a.seed);
        set = std::move(ns.set);
        prov = ns.provenance;
        params["q"] = a.q;
        params["p"] = pp->p;
        params["e"] = pp->e;
        params["t"] = a.t;
        params["seed"] = a.seed;
        params["base-modulus"] = gf.modulus();
        params["ext-modulus"] = prov->ext_modulus;
    }
    params["oracle"] = a.oracle;

    std::uint32_t max_secant = tf::audit_max_secant(set);
    if (a.oracle) {
        tf::PointSet copy = set;
        std::uint32_t check = tf::audit_max_secant(copy, tf::AuditStrategy::AllLines);
        if (check != max_secant)
            throw std::logic_error("construct: all-lines audit disagrees with pair-histogram");
    }
    std::cout << "points: " << set.points.size() << '\n'
              << "max-secant: " << max_secant << '\n';
    if (!a.out.empty()) {
        auto f = open_output(a.out);
        tf::write_point_set(f, set, prov ? &*prov : nullptr);
        write_manifest(a.out, "construct", params, inputs, ms_since(start));
    }
    return 0;
}

struct BuildArgs {
    std::string in;
    std::string out;
};

int run_build(const BuildArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    auto f = open_input(a.in);
    std::optional<tf::NormSetProvenance> prov;
    tf::PointSet set = tf::read_point_set(f, &prov);
    tf::IncidenceGraph g =
        tf::build_linear_representation(set, max_edges_cap(), prov ? prov->t : 0);
    std::cout << "point-vertices: " << g.graph.point_count() << '\n'
              << "line-vertices: " << g.graph.line_count() << '\n'
              << "edges: " << g.graph.edge_count() << '\n';
    auto out = open_output(a.out);
    tf::write_graph(out, g.graph, g.header);
    nlohmann::json params;
    params["in"] = a.in;
    params["max-edges"] = max_edges_cap();
    write_manifest(a.out, "build", params, {a.in}, ms_since(start));
    return 0;
}

struct VerifyArgs {
    std::string graph;
    std::string check;
    std::string report_path;
    std::uint32_t t = 0;
    std::uint32_t jobs = 1;
    bool oracle = false;
    bool exact_counts = false;
};

int run_verify(const VerifyArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    auto f = open_input(a.graph);
    tf::BipartiteGraph g = tf::read_graph(f);
    tf::VerificationReport report;
    if (a.check == "c4") {
        report = tf::find_c4(g);
        if (a.oracle && tf::brute_c4(g) == report.pass)
            throw std::logic_error("verify: c4 oracle disagrees");
    } else {
        if (a.t < 2) {
            std::cerr << "error: --check theta requires --t >= 2\n";
            return 2;
        }
        tf::VerifyOptions opts;
        opts.jobs = a.jobs;
        opts.exact_counts = a.exact_counts;
        report = tf::verify_theta_free(g, a.t, opts);
        if (a.oracle) {
            bool brute_fail = false;
            for (std::uint32_t u = 0; u < g.point_count() && !brute_fail; ++u)
                for (std::uint32_t v = 0; v < g.line_count() && !brute_fail; ++v)
                    brute_fail = tf::brute_theta_count(g, u, v) >= a.t;
            if (brute_fail == report.pass)
                throw std::logic_error("verify: theta oracle disagrees");
        }
    }
    if (!report.pass) {
        bool ok = report.check == tf::CheckKind::C4
                      ? tf::replay_witness(g, *report.c4_witness)
                      : tf::replay_witness(g, *report.theta_witness, a.t);
        if (!ok) throw std::logic_error("verify: witness failed its replay check");
    }
    tf::write_report(std::cout, report);
    if (!a.report_path.empty()) {
        auto out = open_output(a.report_path);
        tf::write_report(out, report);
        nlohmann::json params;
        params["graph"] = a.graph;
        params["check"] = a.check;
        params["t"] = a.t;
        params["jobs"] = a.jobs;
        params["oracle"] = a.oracle;
        params["exact-counts"] = a.exact_counts;
        write_manifest(a.report_path, "verify", params, {a.graph}, ms_since(start));
    }
    return report.pass ? 0 : 1;
}

struct StatsArgs {
    std::string graph;
    std::string out;
    std::uint32_t t = 0;
    bool girth = false;
};

int run_stats(const StatsArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    if (a.t < 2) {
        std::cerr << "error: stats requires --t >= 2\n";
        return 2;
    }
    auto f = open_input(a.graph);
    tf::BipartiteGraph g = tf::read_graph(f);
    const std::uint64_t p = g.point_count();
    const std::uint64_t l = g.line_count();
    tf::BoundReport report =
        tf::bound_report(std::min(p, l), std::max(p, l), g.edge_count(), a.t);
    std::ostringstream text;
    tf::write_bound_report(text, report);
    if (a.girth) {
        auto value = tf::girth(g);
        text << "girth: ";
        if (value)
            text << *value;
        else
            text << "infinity";
        text << '\n';
    }
    std::cout << text.str();
    if (!a.out.empty()) {
        auto out = open_output(a.out);
        out << text.str();
        nlohmann::json params;
        params["graph"] = a.graph;
        params["t"] = a.t;
        params["girth"] = a.girth;
        write_manifest(a.out, "stats", params, {a.graph}, ms_since(start));
    }
    return 0;
}

struct ExportArgs {
    std::string graph;
    std::string format;
    std::string out;
};

int run_export(const ExportArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    auto f = open_input(a.graph);
    tf::GraphHeader header;
    tf::BipartiteGraph g = tf::read_graph(f, &header);
    tf::GraphFormat format =
        a.format == "adjacency" ? tf::GraphFormat::Adjacency : tf::GraphFormat::EdgeList;
    if (a.out.empty()) {
        tf::write_graph(std::cout, g, header, format);
        return 0;
    }
    auto out = open_output(a.out);
    tf::write_graph(out, g, header, format);
    nlohmann::json params;
    params["graph"] = a.graph;
    params["format"] = a.format;
    write_manifest(a.out, "export", params, {a.graph}, ms_since(start));
    return 0;
}

struct SearchArgs {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t t = 0;
    std::uint64_t seed = 0;
    std::uint64_t cap = 50;
    std::string mode = "exhaustive";
    std::string out;
};

int run_search(const SearchArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    auto pp = factor_prime_power(a.q);
    if (!pp) {
        std::cerr << "error: --q must be a prime power in [2, 65536]\n";
        return 2;
    }
    if (a.n < 1 || a.t < 2) {
        std::cerr << "error: search requires --n >= 1 and --t >= 2\n";
        return 2;
    }
    tf::Field gf = make_field(*pp, a.seed);
    tf::SearchMode mode =
        a.mode == "greedy" ? tf::SearchMode::Greedy : tf::SearchMode::Exhaustive;
    tf::PointSet best = tf::search_max_bounded_secant(gf, a.n, a.t, mode, a.cap);
    std::cout << "points: " << best.points.size() << '\n'
              << "max-secant: " << *best.max_secant << '\n';
    if (!a.out.empty()) {
        auto out = open_output(a.out);
        tf::write_point_set(out, best);
        nlohmann::json params;
        params["q"] = a.q;
        params["n"] = a.n;
        params["t"] = a.t;
        params["seed"] = a.seed;
        params["mode"] = a.mode;
        params["cap"] = a.cap;
        write_manifest(a.out, "search", params, {}, ms_since(start));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"norm point sets, their incidence graphs, and forbidden-subgraph checks"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "build or audit a point set");
    construct->add_option("--q", construct_args.q, "field size, a prime power");
    construct->add_option("--t", construct_args.t, "extension degree / secant bound");
    construct->add_option("--seed", construct_args.seed, "seed for modulus selection");
    construct->add_option("--in", construct_args.in, "audit this point-set file instead");
    construct->add_option("--out", construct_args.out, "point-set file to write");
    construct->add_flag("--oracle", construct_args.oracle, "force the all-lines audit check");

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "materialize the incidence graph of a point set");
    build->add_option("--in", build_args.in, "point-set file")->required();
    build->add_option("--out", build_args.out, "graph file to write")->required();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "certify forbidden-subgraph freeness");
    verify->add_option("--graph", verify_args.graph, "graph file")->required();
    verify->add_option("--check", verify_args.check, "which check to run")
        ->required()
        ->check(CLI::IsMember({"c4", "theta"}));
    verify->add_option("--t", verify_args.t, "theta threshold");
    verify->add_option("--jobs", verify_args.jobs, "parallel workers");
    verify->add_option("--report", verify_args.report_path, "also write the report here");
    verify->add_flag("--oracle", verify_args.oracle, "cross-check with the brute-force oracle");
    verify->add_flag("--exact-counts", verify_args.exact_counts,
                     "report exact per-pair maxima instead of stopping at t");

    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "extremal-parameter diagnostics");
    stats->add_option("--graph", stats_args.graph, "graph file")->required();
    stats->add_option("--t", stats_args.t, "theta parameter")->required();
    stats->add_option("--out", stats_args.out, "also write the report here");
    stats->add_flag("--girth", stats_args.girth, "append the BFS girth");

    ExportArgs export_args;
    auto* exp = app.add_subcommand("export", "rewrite a graph file in another format");
    exp->add_option("--graph", export_args.graph, "graph file")->required();
    exp->add_option("--format", export_args.format, "output format")
        ->required()
        ->check(CLI::IsMember({"edgelist", "adjacency"}));
    exp->add_option("--out", export_args.out, "output file (stdout when absent)");

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "max point set with no t+1 collinear");
    search->add_option("--q", search_args.q, "field size, a prime power")->required();
    search->add_option("--n", search_args.n, "projective dimension")->required();
    search->add_option("--t", search_args.t, "secant bound")->required();
    search->add_option("--seed", search_args.seed, "seed for modulus selection");
    search->add_option("--cap", search_args.cap, "exhaustive-mode ambient point cap");
    search->add_option("--mode", search_args.mode, "search mode")
        ->check(CLI::IsMember({"exhaustive", "greedy"}));
    search->add_option("--out", search_args.out, "point-set file to write");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    int rc = 2;
    try {
        if (app.got_subcommand(construct)) rc = run_construct(construct_args);
        else if (app.got_subcommand(build)) rc = run_build(build_args);
        else if (app.got_subcommand(verify)) rc = run_verify(verify_args);
        else if (app.got_subcommand(stats)) rc = run_stats(stats_args);
        else if (app.got_subcommand(exp)) rc = run_export(export_args);
        else if (app.got_subcommand(search)) rc = run_search(search_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    std::cerr << "elapsed-ms: " << ms_since(start) << '\n';
    return rc;
}
