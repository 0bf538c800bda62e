#include "thetaforge/linrep.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace thetaforge {

namespace {

constexpr std::uint64_t kVertexLimit = std::numeric_limits<std::uint32_t>::max();

std::uint64_t parse_u64(const std::string& text) {
    try {
        std::size_t used = 0;
        std::uint64_t value = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("graph: malformed number '" + text + "'");
    }
}

}  // namespace

std::uint64_t BipartiteGraph::edge_count() const {
    std::uint64_t total = 0;
    for (const auto& nbrs : point_adj) total += nbrs.size();
    return total;
}

bool BipartiteGraph::adjacent(std::uint32_t point, std::uint32_t line) const {
    if (point >= point_adj.size()) return false;
    const auto& nbrs = point_adj[point];
    return std::binary_search(nbrs.begin(), nbrs.end(), line);
}

void BipartiteGraph::validate() const {
    if (point_adj.size() > kVertexLimit || line_adj.size() > kVertexLimit)
        throw std::invalid_argument("graph: vertex count exceeds 32-bit ids");
    auto side_check = [](const std::vector<std::vector<std::uint32_t>>& adj, std::uint64_t other,
                         const char* what) {
        std::uint64_t edges = 0;
        for (const auto& nbrs : adj) {
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                if (nbrs[i] >= other) throw std::invalid_argument(std::string("graph: ") + what);
                if (i && nbrs[i - 1] >= nbrs[i])
                    throw std::invalid_argument("graph: adjacency list not strictly increasing");
            }
            edges += nbrs.size();
        }
        return edges;
    };
    std::uint64_t from_points = side_check(point_adj, line_adj.size(), "line id out of range");
    std::uint64_t from_lines = side_check(line_adj, point_adj.size(), "point id out of range");
    if (from_points != from_lines)
        throw std::invalid_argument("graph: adjacency maps disagree on edge count");
    for (std::size_t p = 0; p < point_adj.size(); ++p)
        for (std::uint32_t l : point_adj[p]) {
            const auto& back = line_adj[l];
            if (!std::binary_search(back.begin(), back.end(), static_cast<std::uint32_t>(p)))
                throw std::invalid_argument("graph: adjacency maps are not transposes");
        }
}

IncidenceGraph build_linear_representation(const PointSet& s, std::uint64_t max_edges,
                                           std::uint64_t t_provenance) {
    if (s.points.empty())
        throw std::invalid_argument("build_linear_representation: empty point set");
    const Field& gf = s.field;
    const std::uint64_t q = gf.q();
    const std::uint32_t m = s.n + 1;  // coordinate length, shared by directions and affine points
    for (const auto& pt : s.points)
        if (pt.coords.size() != m)
            throw std::invalid_argument("build_linear_representation: point dimension mismatch");

    std::uint64_t point_count = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        point_count *= q;
        if (point_count > max_edges)
            throw std::invalid_argument("build_linear_representation: edge count exceeds cap");
    }
    const std::uint64_t class_size = point_count / q;  // q^n bases per direction
    const std::uint64_t set_size = s.points.size();
    const std::uint64_t line_count = set_size * class_size;
    const std::uint64_t edge_count = point_count * set_size;
    if (edge_count > max_edges)
        throw std::invalid_argument("build_linear_representation: edge count exceeds cap");
    if (point_count > kVertexLimit || line_count > kVertexLimit)
        throw std::invalid_argument("build_linear_representation: vertex ids exceed 32 bits");

    // pivot = index of the leading 1 of each canonical direction vector
    std::vector<std::uint32_t> pivots(set_size);
    for (std::uint64_t si = 0; si < set_size; ++si) {
        const auto& d = s.points[si].coords;
        std::uint32_t piv = 0;
        while (piv < m && d[piv] == 0) ++piv;
        pivots[si] = piv;
    }

    IncidenceGraph out;
    out.header = GraphHeader{q, t_provenance, s.n, set_size};
    out.lines_per_class = class_size;
    out.graph.point_adj.assign(point_count, {});
    out.graph.line_adj.assign(line_count, {});
    for (auto& nbrs : out.graph.point_adj) nbrs.reserve(set_size);
    for (auto& nbrs : out.graph.line_adj) nbrs.reserve(q);

    std::vector<std::uint32_t> y(m, 0);
    for (std::uint64_t pid = 0; pid < point_count; ++pid) {
        for (std::uint64_t si = 0; si < set_size; ++si) {
            const auto& d = s.points[si].coords;
            const std::uint32_t piv = pivots[si];
            // base point of the line through y in direction d: subtract y[piv]*d,
            // zeroing coordinate piv; rank the remaining coordinates big-endian
            const std::uint32_t lambda = y[piv];
            std::uint64_t rank = 0;
            for (std::uint32_t i = 0; i < m; ++i) {
                if (i == piv) continue;
                rank = rank * q + gf.sub(y[i], gf.mul(lambda, d[i]));
            }
            const std::uint64_t lid = si * class_size + rank;
            out.graph.point_adj[pid].push_back(static_cast<std::uint32_t>(lid));
            out.graph.line_adj[lid].push_back(static_cast<std::uint32_t>(pid));
        }
        // next affine vector in lexicographic order, last coordinate fastest
        for (std::uint32_t i = m; i-- > 0;) {
            if (++y[i] < q) break;
            y[i] = 0;
        }
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> parallel_classes(const IncidenceGraph& g) {
    const std::uint64_t line_count = g.graph.line_count();
    const std::uint64_t per = g.lines_per_class;
    if (per == 0 || line_count % per != 0)
        throw std::invalid_argument("parallel_classes: class size unknown");
    const std::uint64_t class_count = line_count / per;
    const std::uint64_t point_count = g.graph.point_count();
    std::vector<std::vector<std::uint32_t>> classes(class_count);
    std::vector<std::uint8_t> seen(point_count, 0);
    for (std::uint64_t c = 0; c < class_count; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        std::uint64_t covered = 0;
        classes[c].reserve(per);
        for (std::uint64_t l = c * per; l < (c + 1) * per; ++l) {
            classes[c].push_back(static_cast<std::uint32_t>(l));
            for (std::uint32_t p : g.graph.line_adj[l]) {
                if (seen[p]) throw std::logic_error("parallel_classes: lines of one class overlap");
                seen[p] = 1;
                ++covered;
            }
        }
        if (covered != point_count)
            throw std::logic_error("parallel_classes: class does not cover the point side");
    }
    return classes;
}

void write_graph(std::ostream& out, const BipartiteGraph& g, const GraphHeader& header,
                 GraphFormat format) {
    const std::uint64_t point_count = g.point_count();
    out << "# theta-forge graph q=" << header.q << " t=" << header.t << " n=" << header.n
        << " S=" << header.s << " P=" << point_count << " L=" << g.line_count()
        << " E=" << g.edge_count() << '\n';
    if (format == GraphFormat::EdgeList) {
        for (std::uint64_t p = 0; p < point_count; ++p)
            for (std::uint32_t l : g.point_adj[p]) out << p << ' ' << point_count + l << '\n';
    } else {
        for (std::uint64_t p = 0; p < point_count; ++p) {
            out << p << ':';
            for (std::uint32_t l : g.point_adj[p]) out << ' ' << point_count + l;
            out << '\n';
        }
    }
}

BipartiteGraph read_graph(std::istream& in, GraphHeader* header) {
    std::string line;
    const std::string prefix = "# theta-forge graph";
    if (!std::getline(in, line) || line.rfind(prefix, 0) != 0)
        throw std::invalid_argument("graph: missing '# theta-forge graph' header");
    std::map<std::string, std::uint64_t> fields;
    {
        std::stringstream ss(line.substr(prefix.size()));
        std::string token;
        while (ss >> token) {
            auto eq = token.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("graph: malformed header field '" + token + "'");
            fields[token.substr(0, eq)] = parse_u64(token.substr(eq + 1));
        }
    }
    for (const char* key : {"P", "L", "E"})
        if (!fields.count(key))
            throw std::invalid_argument(std::string("graph: header missing ") + key);
    const std::uint64_t point_count = fields["P"];
    const std::uint64_t line_count = fields["L"];
    const std::uint64_t edge_target = fields["E"];
    if (point_count > kVertexLimit || line_count > kVertexLimit)
        throw std::invalid_argument("graph: vertex count exceeds 32-bit ids");
    if (header) {
        header->q = fields.count("q") ? fields["q"] : 0;
        header->t = fields.count("t") ? fields["t"] : 0;
        header->n = fields.count("n") ? fields["n"] : 0;
        header->s = fields.count("S") ? fields["S"] : 0;
    }

    BipartiteGraph g;
    g.point_adj.assign(point_count, {});
    g.line_adj.assign(line_count, {});
    std::uint64_t edges_seen = 0;
    bool adjacency_format = false;
    bool format_known = false;
    auto add_edge = [&](std::uint64_t p, std::uint64_t l) {
        if (p >= point_count) throw std::invalid_argument("graph: point id out of range");
        if (l < point_count || l >= point_count + line_count)
            throw std::invalid_argument("graph: line id out of range");
        g.point_adj[p].push_back(static_cast<std::uint32_t>(l - point_count));
        ++edges_seen;
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!format_known) {
            adjacency_format = line.find(':') != std::string::npos;
            format_known = true;
        }
        std::stringstream ss(line);
        std::string token;
        if (adjacency_format) {
            if (!(ss >> token) || token.back() != ':')
                throw std::invalid_argument("graph: malformed adjacency row");
            std::uint64_t p = parse_u64(token.substr(0, token.size() - 1));
            while (ss >> token) add_edge(p, parse_u64(token));
        } else {
            std::string second;
            if (!(ss >> token >> second) || (ss >> std::ws, !ss.eof()))
                throw std::invalid_argument("graph: expected 'point line' per row");
            add_edge(parse_u64(token), parse_u64(second));
        }
    }
    if (edges_seen != edge_target)
        throw std::invalid_argument("graph: edge count does not match header");

    for (auto& nbrs : g.point_adj) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("graph: duplicate edge");
    }
    for (std::uint64_t p = 0; p < point_count; ++p)
        for (std::uint32_t l : g.point_adj[p])
            g.line_adj[l].push_back(static_cast<std::uint32_t>(p));
    g.validate();
    return g;
}

}  // namespace thetaforge
