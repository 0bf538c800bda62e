#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "thetaforge/linrep.hpp"

namespace thetaforge {

enum class CheckKind { C4, Theta, Girth };

/// Two point vertices sharing two line vertices. Side-local ids.
struct C4Witness {
    std::uint32_t p1 = 0, p2 = 0;
    std::uint32_t l1 = 0, l2 = 0;
};

/// Internal vertices of one 3-edge path u - line - point - v.
struct ThetaPath {
    std::uint32_t line = 0;
    std::uint32_t point = 0;
};

/// t internally disjoint 3-edge paths between point vertex u and line
/// vertex v. Side-local ids.
struct ThetaWitness {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    std::vector<ThetaPath> paths;
};

struct VerificationReport {
    CheckKind check = CheckKind::C4;
    bool pass = true;
    std::uint32_t t = 0;  // threshold, theta check only
    std::optional<C4Witness> c4_witness;
    std::optional<ThetaWitness> theta_witness;
    std::optional<std::uint32_t> girth_value;  // girth check only; empty = acyclic

    // pass-run statistics; meaningful only when pass (a parallel fail run
    // may stop early, so these are not reproducible across job counts)
    std::uint64_t pairs_examined = 0;
    std::uint32_t max_disjoint_paths = 0;
    double elapsed_ms = 0.0;  // never written into report files
    std::uint32_t point_count = 0;  // for printing line ids in file coordinates
};

struct VerifyOptions {
    std::uint32_t jobs = 1;
    /// Compute every pair's exact maximum instead of stopping a pair's
    /// matching at t. Slower; only changes reported statistics, not verdicts.
    bool exact_counts = false;
};

/// Pass iff no two point vertices share two lines. Scans each line vertex's
/// point pairs and hashes them; a repeat across lines is a quadrilateral.
VerificationReport find_c4(const BipartiteGraph& g);

/// Maximum number of internally vertex-disjoint 3-edge paths between point
/// vertex u and line vertex v, as a maximum matching between N(u)\{v} and
/// N(v)\{u} with the adjacencies of g as edges.
std::uint32_t max_disjoint_3paths(const BipartiteGraph& g, std::uint32_t u, std::uint32_t v);

/// Pass iff max_disjoint_3paths(u,v) <= t-1 for every point vertex u and
/// line vertex v. Only pairs within distance 3 can reach a positive count,
/// so candidates for each u are collected from its radius-3 line
/// neighborhood; each candidate's matching stops early once it reaches t
/// unless options.exact_counts. Fail witness: the lowest (u,v) pair with t
/// disjoint paths, independent of options.jobs. Requires t >= 2.
VerificationReport verify_theta_free(const BipartiteGraph& g, std::uint32_t t,
                                     const VerifyOptions& options = {});

/// Length of the shortest cycle, or empty for forests. Exact: truncated BFS
/// from every vertex, minimizing dist(x) + dist(y) + 1 over non-tree edges.
std::optional<std::uint32_t> girth(const BipartiteGraph& g);

VerificationReport girth_report(const BipartiteGraph& g);

/// Witness self-checks: adjacencies, distinctness, and disjointness all hold
/// in g (and the theta witness carries exactly t paths).
bool replay_witness(const BipartiteGraph& g, const C4Witness& w);
bool replay_witness(const BipartiteGraph& g, const ThetaWitness& w, std::uint32_t t);

/// Structured text, stable field order, no volatile fields. Line-vertex ids
/// are printed in file coordinates (offset by the point count).
void write_report(std::ostream& out, const VerificationReport& report);

}  // namespace thetaforge
