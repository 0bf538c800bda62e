#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "thetaforge/construct.hpp"
#include "thetaforge/gf.hpp"
#include "thetaforge/linrep.hpp"
#include "test_support.hpp"

using namespace thetaforge;

namespace {

IncidenceGraph norm_graph_2_3() {
    NormSet ns = build_norm_set(Field::prime_field(3), 2, 0);
    audit_max_secant(ns.set);
    return build_linear_representation(ns.set, kDefaultMaxEdges, ns.provenance.t);
}

}  // namespace

TEST_CASE("linear representation of the (t=2, q=3) norm set") {
    IncidenceGraph g = norm_graph_2_3();
    CHECK(g.graph.point_count() == 81);
    CHECK(g.graph.line_count() == 243);
    CHECK(g.graph.edge_count() == 729);
    CHECK(g.lines_per_class == 27);
    CHECK(g.header.q == 3);
    CHECK(g.header.t == 2);
    CHECK(g.header.n == 3);
    CHECK(g.header.s == 9);
    g.graph.validate();

    for (const auto& nbrs : g.graph.point_adj) CHECK(nbrs.size() == 9);
    for (const auto& nbrs : g.graph.line_adj) CHECK(nbrs.size() == 3);

    // the origin lies on the base line of every parallel class
    std::vector<std::uint32_t> expected;
    for (std::uint32_t s = 0; s < 9; ++s) expected.push_back(27 * s);
    CHECK(g.graph.point_adj[0] == expected);
    // class 0 direction is (0,1,0,0,0); its base line holds the origin's column
    CHECK(g.graph.line_adj[0] == std::vector<std::uint32_t>{0, 27, 54});
}

TEST_CASE("parallel classes partition both sides") {
    IncidenceGraph g = norm_graph_2_3();
    auto classes = parallel_classes(g);
    REQUIRE(classes.size() == 9);
    std::set<std::uint32_t> all_lines;
    for (const auto& cls : classes) {
        CHECK(cls.size() == 27);
        std::set<std::uint32_t> covered;
        for (std::uint32_t l : cls) {
            for (std::uint32_t p : g.graph.line_adj[l]) CHECK(covered.insert(p).second);
            CHECK(all_lines.insert(l).second);
        }
        CHECK(covered.size() == 81);
    }
    CHECK(all_lines.size() == 243);
}

TEST_CASE("distinct line vertices share at most one point") {
    IncidenceGraph g = norm_graph_2_3();
    const auto& adj = g.graph.line_adj;
    for (std::size_t a = 0; a < adj.size(); ++a)
        for (std::size_t b = a + 1; b < adj.size(); ++b) {
            std::vector<std::uint32_t> common;
            std::set_intersection(adj[a].begin(), adj[a].end(), adj[b].begin(), adj[b].end(),
                                  std::back_inserter(common));
            CHECK(common.size() <= 1);
        }
}

TEST_CASE("singleton set yields disjoint stars") {
    PointSet s;
    s.field = Field::prime_field(2);
    s.n = 1;
    s.points = {ProjectivePoint{{1, 0}}};
    s.max_secant = 1;
    IncidenceGraph g = build_linear_representation(s);
    CHECK(g.graph.point_count() == 4);
    CHECK(g.graph.line_count() == 2);
    for (const auto& nbrs : g.graph.point_adj) CHECK(nbrs.size() == 1);
    for (const auto& nbrs : g.graph.line_adj) CHECK(nbrs.size() == 2);
    g.graph.validate();
}

TEST_CASE("construction guards") {
    NormSet ns = build_norm_set(Field::prime_field(3), 2, 0);
    CHECK_THROWS_AS(build_linear_representation(ns.set, 100), std::invalid_argument);

    PointSet empty;
    empty.field = Field::prime_field(3);
    empty.n = 3;
    CHECK_THROWS_AS(build_linear_representation(empty), std::invalid_argument);

    PointSet ragged = ns.set;
    ragged.points[2].coords.pop_back();
    CHECK_THROWS_AS(build_linear_representation(ragged), std::invalid_argument);
}

TEST_CASE("graph file round-trips in both formats") {
    IncidenceGraph g = norm_graph_2_3();
    for (GraphFormat format : {GraphFormat::EdgeList, GraphFormat::Adjacency}) {
        std::ostringstream out;
        write_graph(out, g.graph, g.header, format);
        std::istringstream in(out.str());
        GraphHeader header;
        BipartiteGraph back = read_graph(in, &header);
        CHECK(back.point_adj == g.graph.point_adj);
        CHECK(back.line_adj == g.graph.line_adj);
        CHECK(header.q == g.header.q);
        CHECK(header.t == g.header.t);
        CHECK(header.n == g.header.n);
        CHECK(header.s == g.header.s);

        std::ostringstream again;
        write_graph(again, back, header, format);
        CHECK(again.str() == out.str());
    }
}

TEST_CASE("edge list layout") {
    using tftest::make_graph;
    BipartiteGraph g = make_graph(2, 2, {{0, 0}, {0, 1}, {1, 1}});
    std::ostringstream out;
    write_graph(out, g, GraphHeader{0, 0, 0, 0});
    CHECK(out.str() ==
          "# theta-forge graph q=0 t=0 n=0 S=0 P=2 L=2 E=3\n"
          "0 2\n"
          "0 3\n"
          "1 3\n");
}

TEST_CASE("reader accepts hand-written files and comments") {
    std::istringstream in(
        "# theta-forge graph P=3 L=3 E=6\n"
        "# a hexagon\n"
        "0 3\n0 5\n1 3\n1 4\n2 4\n2 5\n");
    BipartiteGraph g = read_graph(in);
    CHECK(g.point_adj == tftest::even_cycle(3).point_adj);
}

TEST_CASE("reader rejects malformed graphs") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_graph(in), std::invalid_argument);
    };
    reject("");
    reject("0 2\n");                                                // headerless
    reject("# theta-forge graph P=2 L=2\n0 2\n");                   // missing E
    reject("# theta-forge graph P=2 L=2 E=2\n0 2\n");               // count mismatch
    reject("# theta-forge graph P=2 L=2 E=1\n0 1\n");               // line id below P
    reject("# theta-forge graph P=2 L=2 E=1\n0 4\n");               // line id past P+L
    reject("# theta-forge graph P=2 L=2 E=1\n2 2\n");               // point id past P
    reject("# theta-forge graph P=2 L=2 E=2\n0 2\n0 2\n");          // duplicate edge
    reject("# theta-forge graph P=2 L=2 E=1\n0 x\n");               // not a number
    reject("# theta-forge graph P=2 L=2 E=1\n0 2 9\n");             // trailing junk
}
