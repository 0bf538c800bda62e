#include "thetaforge/construct.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "thetaforge/oracle.hpp"

namespace thetaforge {

namespace {

constexpr std::uint64_t kMaxNormSetSize = 1ull << 26;

// Multiplicity k on a line from its unordered pair count c = C(k,2).
std::uint32_t multiplicity_from_pairs(std::uint64_t c) {
    auto k = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(c))) / 2.0);
    for (std::uint64_t cand = k > 1 ? k - 1 : 2; cand <= k + 1; ++cand)
        if (cand * (cand - 1) / 2 == c) return static_cast<std::uint32_t>(cand);
    throw std::logic_error("audit: line pair count is not a binomial C(k,2)");
}

std::uint32_t pair_histogram_audit(const PointSet& s) {
    std::map<ProjectiveLine, std::uint64_t> pair_counts;
    for (std::size_t i = 0; i < s.points.size(); ++i)
        for (std::size_t j = i + 1; j < s.points.size(); ++j)
            ++pair_counts[line_through(s.field, s.points[i], s.points[j])];
    std::uint64_t max_pairs = 0;
    for (const auto& [line, c] : pair_counts) max_pairs = std::max(max_pairs, c);
    return multiplicity_from_pairs(max_pairs);
}

}  // namespace

NormSet build_norm_set(const Field& gf_q, std::uint32_t t, std::uint64_t seed) {
    if (t < 2) throw std::invalid_argument("build_norm_set: t must be >= 2");
    if (gf_q.q() <= t) throw std::invalid_argument("build_norm_set: requires q > t");
    Poly ext_modulus = find_irreducible(gf_q, t, seed);
    ExtField ext(gf_q, t, ext_modulus);
    if (ext.order() > kMaxNormSetSize)
        throw std::invalid_argument("build_norm_set: q^t exceeds the size cap");

    NormSet result;
    result.set.field = gf_q;
    result.set.n = t + 1;
    result.set.points.reserve(ext.order());
    result.provenance = NormSetProvenance{t, seed, ext_modulus};
    for (std::uint64_t idx = 0; idx < ext.order(); ++idx) {
        ExtField::Elem x = ext.element_at(idx);
        std::vector<std::uint32_t> coords(t + 2);
        coords[0] = 1;
        for (std::uint32_t i = 0; i < t; ++i) coords[1 + i] = x[i];
        coords[t + 1] = ext.norm(x);
        result.set.points.push_back(ProjectivePoint{std::move(coords)});
    }
    return result;
}

std::uint32_t audit_max_secant(PointSet& s, AuditStrategy strategy,
                               std::uint64_t all_lines_point_cap) {
    if (s.points.size() < 2) {
        s.max_secant = static_cast<std::uint32_t>(s.points.size());
        return *s.max_secant;
    }
    std::uint64_t ambient = projective_point_count(s.field.q(), s.n);
    std::uint32_t result = 0;
    switch (strategy) {
        case AuditStrategy::PairHistogram:
            result = pair_histogram_audit(s);
            break;
        case AuditStrategy::AllLines: {
            OracleConfig cfg;
            cfg.max_ambient_points = all_lines_point_cap;
            result = brute_secant_audit(s, cfg);
            break;
        }
        case AuditStrategy::Auto: {
            result = pair_histogram_audit(s);
            if (ambient <= all_lines_point_cap) {
                OracleConfig cfg;
                cfg.max_ambient_points = all_lines_point_cap;
                std::uint32_t check = brute_secant_audit(s, cfg);
                if (check != result)
                    throw std::logic_error("audit: pair-histogram and all-lines audits disagree");
            }
            break;
        }
    }
    s.max_secant = result;
    return result;
}

std::uint32_t count_maineq_solutions(const ExtField& ext, const ExtField::Elem& x,
                                     const ExtField::Elem& y) {
    if (x == y) throw std::invalid_argument("count_maineq_solutions: x and y must be distinct");
    const Field& gf = ext.base();
    std::uint32_t nx = ext.norm(x);
    std::uint32_t ny = ext.norm(y);
    std::uint32_t count = 0;
    // codes 0 and 1 encode the field elements 0 and 1; those make ax+(1-a)y collapse to y or x
    for (std::uint32_t a = 2; a < gf.q(); ++a) {
        std::uint32_t b = gf.sub(1, a);
        std::uint32_t lhs = gf.add(gf.mul(a, nx), gf.mul(b, ny));
        ExtField::Elem z = ext.add(ext.scalar_mul(a, x), ext.scalar_mul(b, y));
        if (lhs == ext.norm(z)) ++count;
    }
    return count;
}

namespace {

// One line of the ambient space with the number of chosen points on it.
using LineCounts = std::map<ProjectiveLine, std::uint32_t>;

bool can_add(const Field& gf, const std::vector<ProjectivePoint>& chosen,
             const ProjectivePoint& candidate, std::uint32_t t) {
    LineCounts counts;
    for (const auto& p : chosen) {
        std::uint32_t& c = counts[line_through(gf, candidate, p)];
        if (++c >= t) return false;  // line would reach t+1 members
    }
    return true;
}

struct ArcSearch {
    const Field& gf;
    const std::vector<ProjectivePoint>& pts;
    std::uint32_t t;
    std::vector<ProjectivePoint> current;
    std::vector<ProjectivePoint> best;

    void run(std::size_t from) {
        if (current.size() > best.size()) best = current;
        if (current.size() + (pts.size() - from) <= best.size()) return;
        for (std::size_t i = from; i < pts.size(); ++i) {
            if (!can_add(gf, current, pts[i], t)) continue;
            current.push_back(pts[i]);
            run(i + 1);
            current.pop_back();
            if (current.size() + (pts.size() - i - 1) <= best.size()) return;
        }
    }
};

}  // namespace

PointSet search_max_bounded_secant(const Field& gf, std::uint32_t n, std::uint32_t t,
                                   SearchMode mode, std::uint64_t exhaustive_cap) {
    if (t < 2) throw std::invalid_argument("search_max_bounded_secant: t must be >= 2");
    std::uint64_t ambient = projective_point_count(gf.q(), n);
    if (mode == SearchMode::Exhaustive && ambient > exhaustive_cap)
        throw std::invalid_argument("search_max_bounded_secant: ambient space exceeds exhaustive cap");
    std::vector<ProjectivePoint> pts = enumerate_points(gf, n);

    PointSet out;
    out.field = gf;
    out.n = n;
    if (mode == SearchMode::Greedy) {
        for (const auto& p : pts)
            if (can_add(gf, out.points, p, t)) out.points.push_back(p);
    } else {
        ArcSearch search{gf, pts, t, {}, {}};
        search.run(0);
        out.points = std::move(search.best);
    }
    audit_max_secant(out);
    return out;
}

void write_point_set(std::ostream& out, const PointSet& s, const NormSetProvenance* provenance) {
    out << "PG " << s.n << ' ' << s.field.q() << ' ' << s.field.p() << ' ' << s.field.e() << '\n';
    out << "modulus";
    for (std::uint32_t c : s.field.modulus()) out << ' ' << c;
    out << '\n';
    if (provenance) {
        out << "# norm-set t=" << provenance->t << " seed=" << provenance->seed
            << " ext-modulus=";
        for (std::size_t i = 0; i < provenance->ext_modulus.size(); ++i) {
            if (i) out << ',';
            out << provenance->ext_modulus[i];
        }
        out << '\n';
    }
    for (const auto& p : s.points) {
        for (std::size_t i = 0; i < p.coords.size(); ++i) {
            if (i) out << ',';
            out << p.coords[i];
        }
        out << '\n';
    }
}

namespace {

std::vector<std::uint32_t> parse_csv_u32(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("point set: empty coordinate field");
        out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    return out;
}

}  // namespace

PointSet read_point_set(std::istream& in, std::optional<NormSetProvenance>* provenance) {
    std::string tag;
    std::uint32_t n = 0, q = 0, p = 0, e = 0;
    if (!(in >> tag) || tag != "PG" || !(in >> n >> q >> p >> e))
        throw std::invalid_argument("point set: bad header, expected 'PG n q p e'");
    if (!(in >> tag) || tag != "modulus")
        throw std::invalid_argument("point set: missing modulus line");
    Poly modulus(e + 1);
    for (auto& c : modulus)
        if (!(in >> c)) throw std::invalid_argument("point set: truncated modulus");
    Field gf(p, e, modulus);
    if (gf.q() != q) throw std::invalid_argument("point set: header q does not equal p^e");

    PointSet s;
    s.field = gf;
    s.n = n;
    std::set<ProjectivePoint> seen;
    std::string line;
    std::getline(in, line);  // rest of the modulus line
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (provenance && line.rfind("# norm-set ", 0) == 0) {
                NormSetProvenance prov;
                std::stringstream ss(line.substr(11));
                std::string kv;
                while (ss >> kv) {
                    auto eq = kv.find('=');
                    if (eq == std::string::npos) continue;
                    std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
                    if (key == "t") prov.t = static_cast<std::uint32_t>(std::stoul(value));
                    else if (key == "seed") prov.seed = std::stoull(value);
                    else if (key == "ext-modulus") prov.ext_modulus = parse_csv_u32(value);
                }
                *provenance = prov;
            }
            continue;
        }
        std::vector<std::uint32_t> coords = parse_csv_u32(line);
        if (coords.size() != n + 1)
            throw std::invalid_argument("point set: point has wrong coordinate count");
        for (std::uint32_t c : coords)
            if (c >= q) throw std::invalid_argument("point set: coordinate out of range");
        ProjectivePoint pt = normalize_point(gf, std::move(coords));
        if (!seen.insert(pt).second)
            throw std::invalid_argument("point set: duplicate point");
        s.points.push_back(std::move(pt));
    }
    if (s.points.empty()) throw std::invalid_argument("point set: no points");
    return s;
}

}  // namespace thetaforge
