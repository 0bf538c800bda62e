#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "thetaforge/gf.hpp"
#include "thetaforge/projgeom.hpp"

namespace thetaforge {

/// A set of distinct points of PG(n,q) together with its measured maximum
/// secant multiplicity (the largest number of member points on one line),
/// filled in by audit_max_secant.
struct PointSet {
    Field field;
    std::uint32_t n = 0;
    std::vector<ProjectivePoint> points;
    std::optional<std::uint32_t> max_secant;
};

/// How a norm set was produced; enough to rebuild it bit-for-bit.
struct NormSetProvenance {
    std::uint32_t t = 0;
    std::uint64_t seed = 0;
    Poly ext_modulus;
};

struct NormSet {
    PointSet set;
    NormSetProvenance provenance;
};

/// The norm point set in PG(t+1, q): one point (1, x_1, ..., x_t, N(x)) per
/// element x of GF(q^t), where the x_i are the coordinates of x over GF(q)
/// and N is the norm down to GF(q). Exactly q^t distinct points. The seed
/// fixes the irreducible modulus of GF(q^t). Requires q > t >= 2.
NormSet build_norm_set(const Field& gf_q, std::uint32_t t, std::uint64_t seed);

enum class AuditStrategy {
    /// Pair-histogram, self-checked against the all-lines oracle when the
    /// ambient space is small enough.
    Auto,
    PairHistogram,
    AllLines,
};

/// Maximum number of member points on any line of the ambient space, stored
/// into s.max_secant and returned. The pair-histogram route hashes the
/// canonical line through every unordered pair of members and recovers the
/// per-line multiplicity k from its pair count C(k,2).
std::uint32_t audit_max_secant(PointSet& s, AuditStrategy strategy = AuditStrategy::Auto,
                               std::uint64_t all_lines_point_cap = 50);

/// Number of a in GF(q) \ {0,1} with a*N(x) + (1-a)*N(y) == N(a*x + (1-a)*y),
/// by exhaustive evaluation of the q-2 candidates. Each solution a puts the
/// extra point of z = a*x + (1-a)*y on the line through the points of x and
/// y, so a line through two norm-set points carries 2 + count members.
/// Requires x != y.
std::uint32_t count_maineq_solutions(const ExtField& ext, const ExtField::Elem& x,
                                     const ExtField::Elem& y);

enum class SearchMode { Exhaustive, Greedy };

/// A set of points in PG(n,q) with no t+1 members collinear: the true maximum
/// (exhaustive branch-and-bound over lexicographically ordered points) or a
/// deterministic greedy maximal set. Exhaustive mode refuses spaces with more
/// than exhaustive_cap points. The result comes back audited.
PointSet search_max_bounded_secant(const Field& gf, std::uint32_t n, std::uint32_t t,
                                   SearchMode mode, std::uint64_t exhaustive_cap = 50);

/// Point-set file: header "PG n q p e", a "modulus ..." line with the base
/// field's defining polynomial, optional "#" provenance comments, then one
/// point per line as comma-separated element codes in [0, q). Writes are
/// byte-deterministic; the reader canonicalizes points and rejects
/// duplicates.
void write_point_set(std::ostream& out, const PointSet& s,
                     const NormSetProvenance* provenance = nullptr);
PointSet read_point_set(std::istream& in, std::optional<NormSetProvenance>* provenance = nullptr);

}  // namespace thetaforge
