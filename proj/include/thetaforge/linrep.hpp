#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "thetaforge/construct.hpp"

namespace thetaforge {

/// A bipartite graph between "point" vertices and "line" vertices, with
/// adjacency stored in both directions. Side-local indices; edge-list files
/// offset line ids by the point count.
struct BipartiteGraph {
    std::vector<std::vector<std::uint32_t>> point_adj;  // sorted line ids
    std::vector<std::vector<std::uint32_t>> line_adj;   // sorted point ids

    std::uint32_t point_count() const { return static_cast<std::uint32_t>(point_adj.size()); }
    std::uint32_t line_count() const { return static_cast<std::uint32_t>(line_adj.size()); }
    std::uint64_t edge_count() const;
    bool adjacent(std::uint32_t point, std::uint32_t line) const;

    /// Checks sortedness, index ranges, and that the two adjacency maps are
    /// transposes of each other. Throws std::invalid_argument otherwise.
    void validate() const;
};

/// Graph-file header fields; zero means unknown/not applicable.
struct GraphHeader {
    std::uint64_t q = 0;
    std::uint64_t t = 0;
    std::uint64_t n = 0;  // dimension of the space holding S
    std::uint64_t s = 0;  // |S|
};

/// The incidence graph of the linear representation of S in PG(n+1,q):
/// q^(n+1) point vertices (the affine points off the hyperplane at infinity),
/// |S|*q^n line vertices (lines meeting the hyperplane in exactly one point
/// of S), edges for incidence. Point vertices are |S|-regular, line vertices
/// q-regular.
struct IncidenceGraph {
    BipartiteGraph graph;
    GraphHeader header;
    std::uint64_t lines_per_class = 0;  // q^n; line ids are grouped by S index
};

constexpr std::uint64_t kDefaultMaxEdges = 1ull << 24;

/// Builds the linear-representation graph of an audited point set. The
/// hyperplane at infinity is x0 = 0 and the affine chart x0 = 1; each member
/// of S acts as a direction vector, and a line vertex is identified by its S
/// index plus the unique base point whose coordinate at the direction's pivot
/// is zero. Vertex order: affine points lexicographic, then line vertices
/// grouped by S index with bases lexicographic. Throws when the edge count
/// would exceed max_edges.
IncidenceGraph build_linear_representation(const PointSet& s,
                                           std::uint64_t max_edges = kDefaultMaxEdges,
                                           std::uint64_t t_provenance = 0);

/// Line vertices grouped by their point at infinity: |S| classes of q^n
/// lines, each class partitioning the point side.
std::vector<std::vector<std::uint32_t>> parallel_classes(const IncidenceGraph& g);

enum class GraphFormat { EdgeList, Adjacency };

/// Deterministic text export. EdgeList: header line
/// "# theta-forge graph q=.. t=.. n=.. S=.. P=.. L=.. E=.." then one
/// "p l" pair per line in ascending order, with line ids offset by P.
/// Adjacency: same header, then "p: l l l ..." per point vertex.
void write_graph(std::ostream& out, const BipartiteGraph& g, const GraphHeader& header,
                 GraphFormat format = GraphFormat::EdgeList);

/// Reads either format back; throws std::invalid_argument on malformed input.
BipartiteGraph read_graph(std::istream& in, GraphHeader* header = nullptr);

}  // namespace thetaforge
