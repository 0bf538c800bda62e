#pragma once

#include <cstdint>
#include <iosfwd>

#include "thetaforge/construct.hpp"
#include "thetaforge/linrep.hpp"

namespace thetaforge {

/// Extremal-parameter diagnostics of a bipartite graph with parts m <= n_part.
/// The float fields are display values; the _exact flags are the authoritative
/// power-identity checks, computed in integer arithmetic.
struct BoundReport {
    std::uint64_t m = 0;
    std::uint64_t n_part = 0;
    std::uint64_t edges = 0;
    std::uint32_t t = 0;
    double exponent = 0.0;             // log(edges) / log(n_part)
    double target_exponent = 0.0;      // 1 + 1/(2t+1)
    bool exponent_exact = false;       // edges^(2t+1) == n_part^(2t+2) as powers of one base
    double part_exponent = 0.0;        // log(m) / log(n_part)
    double target_part_exponent = 0.0; // (t+2)/(2t+1)
    bool part_exponent_exact = false;  // m^(2t+1) == n_part^(t+2) as powers of one base
    double jly_ratio = 0.0;            // edges / (144 t^3 ((m n_part)^(2/3) + m + n_part))
};

/// Requires 1 <= m <= n_part, n_part >= 2, edges >= 1, t >= 2. The exact
/// flags hold when m and edges are integer powers of the primitive base of
/// n_part and the exponents satisfy the target ratios.
BoundReport bound_report(std::uint64_t m, std::uint64_t n_part, std::uint64_t edges,
                         std::uint32_t t);
BoundReport bound_report(const IncidenceGraph& g, std::uint32_t t);

/// Certified edge-count witness of an audited set S in PG(n,q) with
/// max_secant <= t: its linear representation realizes `edges` edges between
/// parts of size m and n_part.
struct ExtremalInstance {
    std::uint64_t edges = 0;
    std::uint64_t m = 0;       // q^(n+1) point vertices
    std::uint64_t n_part = 0;  // |S| q^n line vertices
};

/// Throws unless s carries an audit result with max_secant <= t.
ExtremalInstance extremal_instance(const PointSet& s, std::uint32_t t);

/// Stable field order, fixed float precision; no volatile fields.
void write_bound_report(std::ostream& out, const BoundReport& report);

}  // namespace thetaforge
