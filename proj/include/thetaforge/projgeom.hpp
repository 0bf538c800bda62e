#pragma once

#include <cstdint>
#include <vector>

#include "thetaforge/gf.hpp"

namespace thetaforge {

/// A point of PG(n,q): homogeneous coordinates of length n+1 with the first
/// nonzero coordinate scaled to 1. Canonical form makes equality and ordering
/// plain coordinate comparisons.
struct ProjectivePoint {
    std::vector<std::uint32_t> coords;

    std::uint32_t dim() const { return static_cast<std::uint32_t>(coords.size()) - 1; }
    bool operator==(const ProjectivePoint&) const = default;
    bool operator<(const ProjectivePoint& o) const { return coords < o.coords; }
};

/// A line of PG(n,q): the row space of a rank-2 matrix stored in reduced row
/// echelon form. RREF is the unique canonical representative, so equality and
/// ordering are row comparisons and lines can key a map directly.
struct ProjectiveLine {
    std::vector<std::uint32_t> row0;
    std::vector<std::uint32_t> row1;

    bool operator==(const ProjectiveLine&) const = default;
    bool operator<(const ProjectiveLine& o) const {
        if (row0 != o.row0) return row0 < o.row0;
        return row1 < o.row1;
    }
};

/// Scale a nonzero vector so its leading nonzero coordinate is 1.
/// Throws std::invalid_argument on the zero vector.
ProjectivePoint normalize_point(const Field& gf, std::vector<std::uint32_t> raw);

/// The unique line through two distinct points of the same space.
/// Symmetric in its arguments by canonicality of RREF.
ProjectiveLine line_through(const Field& gf, const ProjectivePoint& a, const ProjectivePoint& b);

/// True iff the three (pairwise distinct) points span a subspace of rank <= 2.
bool collinear(const Field& gf, const ProjectivePoint& a, const ProjectivePoint& b,
               const ProjectivePoint& c);

/// The q+1 canonical points of a line.
std::vector<ProjectivePoint> line_points(const Field& gf, const ProjectiveLine& line);

bool line_contains(const Field& gf, const ProjectiveLine& line, const ProjectivePoint& pt);

/// (q^(n+1) - 1) / (q - 1).
std::uint64_t projective_point_count(std::uint64_t q, std::uint32_t n);

constexpr std::uint64_t kDefaultEnumerationCap = 1u << 20;

/// All canonical points of PG(n,q) in lexicographic coordinate order.
/// Throws std::invalid_argument when the point count exceeds the cap.
std::vector<ProjectivePoint> enumerate_points(const Field& gf, std::uint32_t n,
                                              std::uint64_t cap = kDefaultEnumerationCap);

/// All lines of PG(n,q), deduplicated canonical forms in lexicographic order.
/// Intended for small spaces; the cap bounds the point count.
std::vector<ProjectiveLine> enumerate_lines(const Field& gf, std::uint32_t n,
                                            std::uint64_t point_cap = 4096);

}  // namespace thetaforge
