#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "thetaforge/linrep.hpp"

namespace tftest {

/// Assemble a BipartiteGraph from an edge list. Sorts, deduplicates, and
/// fills both adjacency directions.
inline thetaforge::BipartiteGraph make_graph(
    std::uint32_t points, std::uint32_t lines,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    thetaforge::BipartiteGraph g;
    g.point_adj.resize(points);
    g.line_adj.resize(lines);
    for (const auto& [p, l] : edges) {
        g.point_adj.at(p).push_back(l);
        g.line_adj.at(l).push_back(p);
    }
    auto tidy = [](std::vector<std::vector<std::uint32_t>>& adj) {
        for (auto& row : adj) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
    };
    tidy(g.point_adj);
    tidy(g.line_adj);
    return g;
}

inline thetaforge::BipartiteGraph complete_bipartite(std::uint32_t a, std::uint32_t b) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t p = 0; p < a; ++p)
        for (std::uint32_t l = 0; l < b; ++l) edges.emplace_back(p, l);
    return make_graph(a, b, edges);
}

/// The cycle C_{2k}: k point vertices, k line vertices, line i joining
/// points i and i+1 (mod k). even_cycle(3) is C6, even_cycle(4) is C8.
inline thetaforge::BipartiteGraph even_cycle(std::uint32_t k) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < k; ++i) {
        edges.emplace_back(i, i);
        edges.emplace_back((i + 1) % k, i);
    }
    return make_graph(k, k, edges);
}

/// Two hubs joined by t internally disjoint 3-edge paths: point 0 and line 0
/// are the hubs, path i runs point 0 - line i - point i - line 0.
inline thetaforge::BipartiteGraph theta_graph(std::uint32_t t) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 1; i <= t; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i);
        edges.emplace_back(i, 0);
    }
    return make_graph(t + 1, t + 1, edges);
}

/// A single 3-edge path: point 0 - line 0 - point 1 - line 1.
inline thetaforge::BipartiteGraph three_edge_path() {
    return make_graph(2, 2, {{0, 0}, {1, 0}, {1, 1}});
}

/// Seeded Bernoulli bipartite graph; identical output for identical
/// arguments on every platform (mt19937_64 is fully specified, and the
/// density test avoids std distributions on purpose).
inline thetaforge::BipartiteGraph random_bipartite(std::uint32_t points, std::uint32_t lines,
                                                   double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto threshold = static_cast<std::uint64_t>(density * 9007199254740992.0);  // 2^53
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t p = 0; p < points; ++p)
        for (std::uint32_t l = 0; l < lines; ++l)
            if ((rng() >> 11) < threshold) edges.emplace_back(p, l);
    return make_graph(points, lines, edges);
}

}  // namespace tftest
