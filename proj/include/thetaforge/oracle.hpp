#pragma once

#include <cstdint>

#include "thetaforge/construct.hpp"
#include "thetaforge/linrep.hpp"

namespace thetaforge {

/// Size caps for the brute-force reference implementations. The oracles
/// refuse oversized inputs instead of degrading.
struct OracleConfig {
    std::uint32_t max_vertices = 60;
    std::uint64_t max_ambient_points = 50;
    std::uint32_t trial_count = 1000;
    std::uint64_t seed = 0;
};

/// Maximum number of internally vertex-disjoint 3-edge paths from point
/// vertex u to line vertex v, by exhaustive backtracking over path sets.
/// Reference for the matching-based computation in verify.
std::uint32_t brute_theta_count(const BipartiteGraph& g, std::uint32_t u, std::uint32_t v,
                                const OracleConfig& config = {});

/// Whether the graph contains a quadrilateral: two point vertices adjacent to
/// two common line vertices, found by plain enumeration.
bool brute_c4(const BipartiteGraph& g, const OracleConfig& config = {});

/// Maximum number of members of S on any line, by enumerating every line of
/// the ambient space. Reference for the pair-histogram audit in construct.
std::uint32_t brute_secant_audit(const PointSet& s, const OracleConfig& config = {});

}  // namespace thetaforge
