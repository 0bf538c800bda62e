#include "thetaforge/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace thetaforge {

namespace {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            return std::nullopt;
        out *= base;
    }
    return out;
}

// n as b^y with y maximal (so b is not itself a perfect power); (n, 1) when
// n is not a perfect power
std::pair<std::uint64_t, std::uint32_t> primitive_power(std::uint64_t n) {
    for (std::uint32_t y = 63; y >= 2; --y) {
        auto b = static_cast<std::uint64_t>(
            std::llround(std::pow(static_cast<double>(n), 1.0 / y)));
        for (std::uint64_t cand = b > 1 ? b - 1 : 2; cand <= b + 1; ++cand) {
            auto p = checked_pow(cand, y);
            if (p && *p == n) return {cand, y};
        }
    }
    return {n, 1};
}

// k with b^k == x exactly
std::optional<std::uint32_t> exact_log(std::uint64_t x, std::uint64_t b) {
    if (b < 2) return std::nullopt;
    std::uint64_t cur = 1;
    std::uint32_t k = 0;
    while (cur < x) {
        if (cur > std::numeric_limits<std::uint64_t>::max() / b) return std::nullopt;
        cur *= b;
        ++k;
    }
    if (cur == x) return k;
    return std::nullopt;
}

}  // namespace

BoundReport bound_report(std::uint64_t m, std::uint64_t n_part, std::uint64_t edges,
                         std::uint32_t t) {
    if (m == 0 || edges == 0) throw std::invalid_argument("bound_report: zero sizes");
    if (m > n_part) throw std::invalid_argument("bound_report: m must not exceed n_part");
    if (n_part < 2) throw std::invalid_argument("bound_report: degenerate larger part");
    if (t < 2) throw std::invalid_argument("bound_report: t must be >= 2");

    BoundReport r;
    r.m = m;
    r.n_part = n_part;
    r.edges = edges;
    r.t = t;
    const double log_n = std::log(static_cast<double>(n_part));
    r.exponent = std::log(static_cast<double>(edges)) / log_n;
    r.target_exponent = 1.0 + 1.0 / (2.0 * t + 1.0);
    r.part_exponent = std::log(static_cast<double>(m)) / log_n;
    r.target_part_exponent = (t + 2.0) / (2.0 * t + 1.0);

    const auto [base, n_exp] = primitive_power(n_part);
    if (auto e_exp = exact_log(edges, base))
        r.exponent_exact =
            static_cast<std::uint64_t>(*e_exp) * (2 * t + 1) ==
            static_cast<std::uint64_t>(n_exp) * (2 * t + 2);
    if (auto m_exp = exact_log(m, base))
        r.part_exponent_exact = static_cast<std::uint64_t>(*m_exp) * (2 * t + 1) ==
                                static_cast<std::uint64_t>(n_exp) * (t + 2);

    const double mn = static_cast<double>(m) * static_cast<double>(n_part);
    const double mn_23 = std::cbrt(mn) * std::cbrt(mn);
    const double t3 = static_cast<double>(t) * t * t;
    r.jly_ratio = static_cast<double>(edges) /
                  (144.0 * t3 * (mn_23 + static_cast<double>(m) + static_cast<double>(n_part)));
    return r;
}

BoundReport bound_report(const IncidenceGraph& g, std::uint32_t t) {
    const std::uint64_t p = g.graph.point_count();
    const std::uint64_t l = g.graph.line_count();
    return bound_report(std::min(p, l), std::max(p, l), g.graph.edge_count(), t);
}

ExtremalInstance extremal_instance(const PointSet& s, std::uint32_t t) {
    if (!s.max_secant)
        throw std::invalid_argument("extremal_instance: point set lacks an audit result");
    if (*s.max_secant > t)
        throw std::invalid_argument("extremal_instance: audited max_secant exceeds t");
    auto q_pow = checked_pow(s.field.q(), s.n + 1);
    if (!q_pow) throw std::invalid_argument("extremal_instance: q^(n+1) overflows");
    const std::uint64_t set_size = s.points.size();
    if (set_size != 0 && *q_pow > std::numeric_limits<std::uint64_t>::max() / set_size)
        throw std::invalid_argument("extremal_instance: edge count overflows");
    ExtremalInstance inst;
    inst.m = *q_pow;
    inst.n_part = set_size * (*q_pow / s.field.q());
    inst.edges = set_size * *q_pow;
    return inst;
}

void write_bound_report(std::ostream& out, const BoundReport& r) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << "m: " << r.m << '\n'
        << "n: " << r.n_part << '\n'
        << "edges: " << r.edges << '\n'
        << "t: " << r.t << '\n';
    out << std::setprecision(12);
    out << "exponent: " << r.exponent << '\n'
        << "target-exponent: " << r.target_exponent << '\n'
        << "exponent-exact: " << (r.exponent_exact ? "yes" : "no") << '\n'
        << "part-exponent: " << r.part_exponent << '\n'
        << "target-part-exponent: " << r.target_part_exponent << '\n'
        << "part-exponent-exact: " << (r.part_exponent_exact ? "yes" : "no") << '\n'
        << "jly-ratio: " << r.jly_ratio << '\n';
    out.flags(flags);
    out.precision(precision);
}

}  // namespace thetaforge
