#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "thetaforge/bounds.hpp"
#include "thetaforge/construct.hpp"
#include "thetaforge/gf.hpp"
#include "thetaforge/linrep.hpp"

using namespace thetaforge;

TEST_CASE("bound report for the (t=2, q=3) parameters") {
    BoundReport r = bound_report(81, 243, 729, 2);
    CHECK(r.exponent == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(r.target_exponent == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(r.exponent_exact);
    CHECK(r.part_exponent == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(r.target_part_exponent == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(r.part_exponent_exact);
    // (81*243)^(2/3) = 3^6 = 729, so the denominator is 144*8*(729+81+243)
    CHECK(r.jly_ratio == doctest::Approx(729.0 / (1152.0 * 1053.0)).epsilon(1e-12));
    CHECK(r.jly_ratio <= 1.0);
}

TEST_CASE("bound report for the (t=3, q=4) parameters") {
    BoundReport r = bound_report(1024, 16384, 65536, 3);
    CHECK(r.exponent_exact);
    CHECK(r.part_exponent_exact);
    CHECK(r.target_exponent == doctest::Approx(8.0 / 7.0).epsilon(1e-12));
    CHECK(r.target_part_exponent == doctest::Approx(5.0 / 7.0).epsilon(1e-12));
    // (2^24)^(2/3) = 2^16
    CHECK(r.jly_ratio == doctest::Approx(65536.0 / (3888.0 * 82944.0)).epsilon(1e-12));
}

TEST_CASE("exactness does not require geometric inputs") {
    BoundReport r = bound_report(16, 32, 64, 2);  // 2^4, 2^5, 2^6
    CHECK(r.exponent_exact);
    CHECK(r.part_exponent_exact);
}

TEST_CASE("near-miss powers are not certified exact") {
    BoundReport r = bound_report(10, 100, 500, 2);
    CHECK_FALSE(r.exponent_exact);   // 500 is no power of 10
    CHECK_FALSE(r.part_exponent_exact);  // 10 = 100^(1/2), but 1/2 != 4/5
    CHECK(r.exponent == doctest::Approx(std::log(500.0) / std::log(100.0)).epsilon(1e-12));

    // right base, wrong exponent ratio
    CHECK_FALSE(bound_report(81, 243, 2187, 2).exponent_exact);  // 3^7 vs required 3^6
    CHECK_FALSE(bound_report(27, 243, 729, 2).part_exponent_exact);  // 3^3 vs required 3^4
}

TEST_CASE("report preconditions") {
    CHECK_THROWS_AS(bound_report(0, 10, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(bound_report(4, 10, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(bound_report(11, 10, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(bound_report(1, 1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(bound_report(4, 10, 5, 1), std::invalid_argument);
}

TEST_CASE("graph overload orients the parts") {
    NormSet ns = build_norm_set(Field::prime_field(3), 2, 0);
    audit_max_secant(ns.set);
    IncidenceGraph g = build_linear_representation(ns.set, kDefaultMaxEdges, 2);
    BoundReport r = bound_report(g, 2);
    CHECK(r.m == 81);
    CHECK(r.n_part == 243);
    CHECK(r.edges == 729);
    CHECK(r.exponent_exact);
    CHECK(r.part_exponent_exact);
}

TEST_CASE("extremal instance from an audited set") {
    NormSet ns = build_norm_set(Field::prime_field(3), 2, 0);

    // audit is mandatory
    CHECK_THROWS_AS(extremal_instance(ns.set, 2), std::invalid_argument);

    audit_max_secant(ns.set);
    ExtremalInstance inst = extremal_instance(ns.set, 2);
    CHECK(inst.edges == 729);
    CHECK(inst.m == 81);
    CHECK(inst.n_part == 243);

    Field gf4(2, 2, {1, 1, 1});
    NormSet big = build_norm_set(gf4, 3, 0);
    audit_max_secant(big.set);
    ExtremalInstance large = extremal_instance(big.set, 3);
    CHECK(large.edges == 65536);
    CHECK(large.m == 1024);
    CHECK(large.n_part == 16384);
}

TEST_CASE("extremal instance rejects sets above the secant budget") {
    PointSet s;
    s.field = Field::prime_field(3);
    s.n = 2;
    s.points = {ProjectivePoint{{1, 0, 0}}, ProjectivePoint{{0, 1, 0}},
                ProjectivePoint{{1, 1, 0}}};
    audit_max_secant(s);
    REQUIRE(s.max_secant == 3);
    CHECK_THROWS_AS(extremal_instance(s, 2), std::invalid_argument);
    CHECK(extremal_instance(s, 3).edges == 81);
}

TEST_CASE("degenerate singleton instance") {
    PointSet s;
    s.field = Field::prime_field(3);
    s.n = 2;
    s.points = {ProjectivePoint{{1, 0, 0}}};
    s.max_secant = 1;
    ExtremalInstance inst = extremal_instance(s, 2);
    CHECK(inst.m == 27);
    CHECK(inst.n_part == 9);
    CHECK(inst.edges == 27);
}

TEST_CASE("bound report text layout") {
    std::ostringstream out;
    write_bound_report(out, bound_report(81, 243, 729, 2));
    CHECK(out.str() ==
          "m: 81\n"
          "n: 243\n"
          "edges: 729\n"
          "t: 2\n"
          "exponent: 1.2\n"
          "target-exponent: 1.2\n"
          "exponent-exact: yes\n"
          "part-exponent: 0.8\n"
          "target-part-exponent: 0.8\n"
          "part-exponent-exact: yes\n"
          "jly-ratio: 0.000600961538462\n");
}
