// Acceptance suite: one line per criterion, [PASS]/[FAIL], exit 1 on any
// failure. argv[1] is the theta-forge binary (used by the pipeline
// determinism criterion).

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "thetaforge/bounds.hpp"
#include "thetaforge/construct.hpp"
#include "thetaforge/gf.hpp"
#include "thetaforge/linrep.hpp"
#include "thetaforge/oracle.hpp"
#include "thetaforge/projgeom.hpp"
#include "thetaforge/verify.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace thetaforge;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Field field_for(std::uint32_t q) {
    if (q == 4) return Field(2, 2, {1, 1, 1});
    if (q == 9) return Field(3, 2, {1, 0, 1});
    return Field::prime_field(q);
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

NormSet audited_norm_set(std::uint32_t q, std::uint32_t t) {
    NormSet ns = build_norm_set(field_for(q), t, 0);
    audit_max_secant(ns.set, AuditStrategy::PairHistogram);
    return ns;
}

IncidenceGraph norm_graph(std::uint32_t q, std::uint32_t t) {
    NormSet ns = audited_norm_set(q, t);
    return build_linear_representation(ns.set, kDefaultMaxEdges, t);
}

struct Outcome {
    bool ok = true;
    std::string note;

    void fail(const std::string& why) {
        ok = false;
        if (!note.empty()) note += "; ";
        note += why;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

// 1. q^t distinct points, secant audit <= t, histogram == all-lines oracle
// where the oracle cap admits the ambient space; < 10 s
Outcome criterion_norm_sets() {
    Outcome out;
    const auto start = Clock::now();
    const std::pair<std::uint32_t, std::uint32_t> cases[] = {
        {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
    for (auto [t, q] : cases) {
        const std::string tag = "(t=" + std::to_string(t) + ",q=" + std::to_string(q) + ")";
        NormSet ns = audited_norm_set(q, t);
        out.expect(ns.set.points.size() == ipow(q, t), tag + " size != q^t");
        std::set<ProjectivePoint> distinct(ns.set.points.begin(), ns.set.points.end());
        out.expect(distinct.size() == ns.set.points.size(), tag + " duplicate points");
        out.expect(ns.set.max_secant && *ns.set.max_secant <= t, tag + " secant audit above t");
        OracleConfig cfg;
        if (projective_point_count(q, t + 1) <= cfg.max_ambient_points)
            out.expect(brute_secant_audit(ns.set, cfg) == *ns.set.max_secant,
                       tag + " all-lines oracle disagrees");
    }
    out.expect(secs(start) < 10.0, "over the 10 s budget");
    return out;
}

// 2. solution count of the blend equation: zero at t=2, at most one at t=3,
// exhaustively over all ordered pairs; < 60 s
Outcome criterion_maineq() {
    Outcome out;
    const auto start = Clock::now();
    const std::pair<std::uint32_t, std::uint32_t> cases[] = {
        {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
    for (auto [t, q] : cases) {
        Field base = field_for(q);
        ExtField ext(base, t, find_irreducible(base, t, 0));
        std::uint32_t worst = 0;
        for (std::uint64_t i = 0; i < ext.order(); ++i)
            for (std::uint64_t j = 0; j < ext.order(); ++j) {
                if (i == j) continue;
                worst = std::max(worst,
                                 count_maineq_solutions(ext, ext.element_at(i), ext.element_at(j)));
            }
        const std::string tag = "(t=" + std::to_string(t) + ",q=" + std::to_string(q) + ")";
        out.expect(worst <= t - 2, tag + " has " + std::to_string(worst) + " spare solutions");
    }
    out.expect(secs(start) < 60.0, "over the 60 s budget");
    return out;
}

// 3. exact vertex/degree/edge counts of the two reference graphs
Outcome criterion_graph_parameters() {
    Outcome out;
    struct Shape {
        std::uint32_t q, t;
        std::uint64_t points, lines, edges;
    } shapes[] = {{3, 2, 81, 243, 729}, {4, 3, 1024, 16384, 65536}};
    for (const auto& s : shapes) {
        IncidenceGraph g = norm_graph(s.q, s.t);
        const std::string tag = "(t=" + std::to_string(s.t) + ",q=" + std::to_string(s.q) + ")";
        out.expect(g.graph.point_count() == s.points, tag + " point count");
        out.expect(g.graph.line_count() == s.lines, tag + " line count");
        out.expect(g.graph.edge_count() == s.edges, tag + " edge count");
        const std::uint64_t set_size = s.edges / s.points;
        for (const auto& nbrs : g.graph.point_adj)
            if (nbrs.size() != set_size) {
                out.fail(tag + " point degree != |S|");
                break;
            }
        for (const auto& nbrs : g.graph.line_adj)
            if (nbrs.size() != s.q) {
                out.fail(tag + " line degree != q");
                break;
            }
    }
    return out;
}

// 4. both verifiers pass at the construction's t; t=2 cases < 5 s each,
// (3,4) under 10 minutes single-threaded
Outcome criterion_freeness() {
    Outcome out;
    const std::pair<std::uint32_t, std::uint32_t> cases[] = {{2, 3}, {2, 4}, {3, 4}};
    for (auto [t, q] : cases) {
        const std::string tag = "(t=" + std::to_string(t) + ",q=" + std::to_string(q) + ")";
        IncidenceGraph g = norm_graph(q, t);
        const auto start = Clock::now();
        out.expect(find_c4(g.graph).pass, tag + " c4 check failed");
        out.expect(verify_theta_free(g.graph, t).pass, tag + " theta check failed");
        const double budget = t == 2 ? 5.0 : 600.0;
        out.expect(secs(start) < budget, tag + " over the time budget");
    }
    return out;
}

// 5. girth of the t=2 graphs is at least 8
Outcome criterion_girth() {
    Outcome out;
    for (std::uint32_t q : {3u, 4u}) {
        auto value = girth(norm_graph(q, 2).graph);
        out.expect(value.has_value() && *value >= 8,
                   "girth of the (t=2,q=" + std::to_string(q) + ") graph below 8");
    }
    return out;
}

// 6. plants are detected: K_{2,2}, the theta graphs, one corrupting edge
Outcome criterion_negative_controls() {
    Outcome out;

    BipartiteGraph k22 = tftest::complete_bipartite(2, 2);
    VerificationReport square = find_c4(k22);
    out.expect(!square.pass, "K_{2,2} passed the c4 check");
    out.expect(square.c4_witness && replay_witness(k22, *square.c4_witness),
               "K_{2,2} witness replay failed");

    for (std::uint32_t t : {2u, 3u, 4u}) {
        BipartiteGraph g = tftest::theta_graph(t);
        VerificationReport r = verify_theta_free(g, t);
        out.expect(!r.pass, "theta graph passed at t=" + std::to_string(t));
        out.expect(r.theta_witness && replay_witness(g, *r.theta_witness, t),
                   "theta witness replay failed at t=" + std::to_string(t));
    }

    IncidenceGraph g = norm_graph(3, 2);
    std::uint32_t l0 = g.graph.point_adj[0][0];
    std::uint32_t mate =
        g.graph.line_adj[l0][0] == 0 ? g.graph.line_adj[l0][1] : g.graph.line_adj[l0][0];
    std::uint32_t planted = g.graph.line_count();
    for (std::uint32_t l : g.graph.point_adj[mate])
        if (!g.graph.adjacent(0, l)) {
            planted = l;
            break;
        }
    out.expect(planted < g.graph.line_count(), "no plantable edge found");
    if (planted < g.graph.line_count()) {
        auto& row = g.graph.point_adj[0];
        row.insert(std::lower_bound(row.begin(), row.end(), planted), planted);
        auto& col = g.graph.line_adj[planted];
        col.insert(std::lower_bound(col.begin(), col.end(), 0u), 0u);
        VerificationReport r = find_c4(g.graph);
        out.expect(!r.pass, "planted quadrilateral went unnoticed");
        out.expect(r.c4_witness && replay_witness(g.graph, *r.c4_witness),
                   "planted-edge witness replay failed");
    }
    return out;
}

// 7. matching == brute-force backtracking and fast c4 == brute c4 on a
// thousand seeded graphs, density swept 0.05..0.5; < 2 min
Outcome criterion_oracle_corpus() {
    Outcome out;
    const auto start = Clock::now();
    OracleConfig cfg;
    std::uint64_t graphs = 0, pairs = 0;
    for (std::uint64_t i = 0; i < 1000 && out.ok; ++i) {
        const std::uint32_t points = 4 + static_cast<std::uint32_t>((7 * i) % 27);
        const std::uint32_t lines = 4 + static_cast<std::uint32_t>((11 * i) % 27);
        const double density = 0.05 + 0.45 * static_cast<double>(i % 101) / 100.0;
        BipartiteGraph g = tftest::random_bipartite(points, lines, density, 90000 + i);
        ++graphs;
        if (find_c4(g).pass != !brute_c4(g, cfg)) {
            out.fail("c4 mismatch on corpus graph " + std::to_string(i));
            break;
        }
        for (std::uint32_t u = 0; u < points && out.ok; ++u)
            for (std::uint32_t v = 0; v < lines; ++v) {
                ++pairs;
                if (max_disjoint_3paths(g, u, v) != brute_theta_count(g, u, v, cfg)) {
                    out.fail("path-count mismatch on corpus graph " + std::to_string(i) +
                             " pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
                    break;
                }
            }
    }
    out.expect(graphs == 1000, "corpus not exhausted");
    out.expect(secs(start) < 120.0, "over the 2 min budget");
    out.note = out.ok ? std::to_string(pairs) + " pairs" : out.note;
    return out;
}

// 8. power-identity exponents hold exactly and the JLY ratio stays below 1
// on every norm-set graph
Outcome criterion_exponents() {
    Outcome out;
    const std::pair<std::uint32_t, std::uint32_t> cases[] = {
        {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
    for (auto [t, q] : cases) {
        const std::string tag = "(t=" + std::to_string(t) + ",q=" + std::to_string(q) + ")";
        NormSet ns = audited_norm_set(q, t);
        IncidenceGraph g = build_linear_representation(ns.set, kDefaultMaxEdges, t);
        BoundReport r = bound_report(g, t);
        out.expect(r.exponent_exact, tag + " edge exponent not an exact power identity");
        out.expect(r.part_exponent_exact, tag + " part exponent not an exact power identity");
        out.expect(r.jly_ratio <= 1.0, tag + " JLY ratio above 1");
        ExtremalInstance inst = extremal_instance(ns.set, t);
        out.expect(inst.edges == g.graph.edge_count() && inst.m == g.graph.point_count() &&
                       inst.n_part == g.graph.line_count(),
                   tag + " instance triple disagrees with the built graph");
    }
    return out;
}

// 9. exhaustive search maxima in the two tiny planes, re-audited; < 5 s
Outcome criterion_search() {
    Outcome out;
    const auto start = Clock::now();
    for (std::uint32_t q : {2u, 3u}) {
        PointSet best = search_max_bounded_secant(field_for(q), 2, 2, SearchMode::Exhaustive);
        const std::string tag = "PG(2," + std::to_string(q) + ")";
        out.expect(best.points.size() == 4, tag + " maximum is not 4");
        out.expect(best.max_secant && *best.max_secant <= 2, tag + " result fails its audit");
        out.expect(brute_secant_audit(best) <= 2, tag + " naive audit disagrees");
    }
    out.expect(secs(start) < 5.0, "over the 5 s budget");
    return out;
}

// 10. two same-seed pipeline runs produce byte-identical point-set, graph,
// and report files
Outcome criterion_determinism(const std::string& binary) {
    Outcome out;
    fs::path root = fs::temp_directory_path() /
                    ("theta-forge-acceptance-" + std::to_string(static_cast<long>(::getpid())));
    auto slurp = [](const fs::path& p) {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream s;
        s << f.rdbuf();
        return s.str();
    };
    auto shell = [&](const std::string& cmd) {
        int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
        return raw != -1 && WIFEXITED(raw) && WEXITSTATUS(raw) == 0;
    };
    for (const char* run : {"a", "b"}) {
        fs::path dir = root / run;
        fs::create_directories(dir);
        std::string ps = (dir / "points.txt").string();
        std::string graph = (dir / "graph.txt").string();
        std::string theta = (dir / "theta.txt").string();
        std::string c4 = (dir / "c4.txt").string();
        bool piped =
            shell(binary + " construct --q 3 --t 2 --seed 0 --out " + ps) &&
            shell(binary + " build --in " + ps + " --out " + graph) &&
            shell(binary + " verify --graph " + graph + " --check theta --t 2 --report " + theta) &&
            shell(binary + " verify --graph " + graph + " --check c4 --report " + c4);
        out.expect(piped, std::string("pipeline run ") + run + " did not complete");
    }
    for (const char* name : {"points.txt", "graph.txt", "theta.txt", "c4.txt"}) {
        std::string a = slurp(root / "a" / name);
        std::string b = slurp(root / "b" / name);
        out.expect(!a.empty() && a == b, std::string(name) + " differs between runs");
    }
    std::error_code ec;
    fs::remove_all(root, ec);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-theta-forge-binary>\n";
        return 1;
    }
    const std::string binary = argv[1];

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"norm sets: q^t distinct points, secant audit <= t, oracle agreement",
         [] { return criterion_norm_sets(); }},
        {"blend equation: 0 solutions at t=2, <= 1 at t=3, exhaustive",
         [] { return criterion_maineq(); }},
        {"graph parameters: 81/243/729 and 1024/16384/65536 with exact degrees",
         [] { return criterion_graph_parameters(); }},
        {"freeness: c4 and theta verifiers pass on (2,3), (2,4), (3,4)",
         [] { return criterion_freeness(); }},
        {"girth: t=2 graphs have girth >= 8", [] { return criterion_girth(); }},
        {"negative controls: K_{2,2}, theta graphs, planted edge",
         [] { return criterion_negative_controls(); }},
        {"oracle corpus: 1000 seeded graphs, matching == brute force",
         [] { return criterion_oracle_corpus(); }},
        {"exponents: exact power identities and JLY ratio <= 1",
         [] { return criterion_exponents(); }},
        {"arc search: exhaustive maxima in PG(2,2) and PG(2,3) are 4",
         [] { return criterion_search(); }},
        {"determinism: same-seed pipelines are byte-identical",
         [binary] { return criterion_determinism(binary); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.ok = false;
            out.note = std::string("exception: ") + e.what();
        }
        const double elapsed = secs(start);
        std::ostringstream line;
        line << (out.ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].first;
        if (!out.note.empty()) line << " [" << out.note << "]";
        line << " (" << std::fixed << std::setprecision(1) << elapsed << " s)";
        std::cout << line.str() << std::endl;
        if (!out.ok) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
