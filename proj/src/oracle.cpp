#include "thetaforge/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "thetaforge/projgeom.hpp"

namespace thetaforge {

namespace {

void check_vertex_cap(const BipartiteGraph& g, const OracleConfig& config) {
    std::uint64_t total = static_cast<std::uint64_t>(g.point_count()) + g.line_count();
    if (total > config.max_vertices)
        throw std::invalid_argument("oracle: graph exceeds the vertex cap");
}

}  // namespace

std::uint32_t brute_theta_count(const BipartiteGraph& g, std::uint32_t u, std::uint32_t v,
                                const OracleConfig& config) {
    check_vertex_cap(g, config);
    if (u >= g.point_count() || v >= g.line_count())
        throw std::invalid_argument("oracle: vertex id out of range");

    // every u-v path with 3 edges is u, l, p, v with l != v and p != u
    std::vector<std::pair<std::uint32_t, std::uint32_t>> candidates;
    for (std::uint32_t l : g.point_adj[u]) {
        if (l == v) continue;
        for (std::uint32_t p : g.line_adj[l]) {
            if (p == u) continue;
            if (g.adjacent(p, v)) candidates.emplace_back(l, p);
        }
    }
    std::set<std::uint32_t> distinct_l, distinct_p;
    for (const auto& [l, p] : candidates) {
        distinct_l.insert(l);
        distinct_p.insert(p);
    }
    const std::uint32_t ceiling =
        static_cast<std::uint32_t>(std::min(distinct_l.size(), distinct_p.size()));

    std::vector<char> used_l(g.line_count(), 0), used_p(g.point_count(), 0);
    std::uint32_t best = 0;
    std::function<void(std::size_t, std::uint32_t)> extend = [&](std::size_t idx,
                                                                 std::uint32_t count) {
        best = std::max(best, count);
        if (best == ceiling) return;
        for (std::size_t i = idx; i < candidates.size(); ++i) {
            if (count + (candidates.size() - i) <= best) return;
            const auto& [l, p] = candidates[i];
            if (used_l[l] || used_p[p]) continue;
            used_l[l] = used_p[p] = 1;
            extend(i + 1, count + 1);
            used_l[l] = used_p[p] = 0;
            if (best == ceiling) return;
        }
    };
    extend(0, 0);
    return best;
}

bool brute_c4(const BipartiteGraph& g, const OracleConfig& config) {
    check_vertex_cap(g, config);
    for (std::uint32_t p1 = 0; p1 < g.point_count(); ++p1)
        for (std::uint32_t p2 = p1 + 1; p2 < g.point_count(); ++p2)
            for (std::uint32_t l1 = 0; l1 < g.line_count(); ++l1) {
                if (!g.adjacent(p1, l1) || !g.adjacent(p2, l1)) continue;
                for (std::uint32_t l2 = l1 + 1; l2 < g.line_count(); ++l2)
                    if (g.adjacent(p1, l2) && g.adjacent(p2, l2)) return true;
            }
    return false;
}

std::uint32_t brute_secant_audit(const PointSet& s, const OracleConfig& config) {
    std::uint64_t ambient = projective_point_count(s.field.q(), s.n);
    if (ambient > config.max_ambient_points)
        throw std::invalid_argument("oracle: ambient space exceeds the point cap");
    if (s.points.size() < 2) return static_cast<std::uint32_t>(s.points.size());
    std::uint32_t best = 0;
    for (const auto& line : enumerate_lines(s.field, s.n, config.max_ambient_points)) {
        std::uint32_t on_line = 0;
        for (const auto& p : s.points)
            if (line_contains(s.field, line, p)) ++on_line;
        best = std::max(best, on_line);
    }
    return best;
}

}  // namespace thetaforge
