#include "thetaforge/projgeom.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace thetaforge {

namespace {

int first_nonzero(const std::vector<std::uint32_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

void scale_row(const Field& gf, std::vector<std::uint32_t>& row, std::uint32_t c) {
    for (auto& x : row) x = gf.mul(c, x);
}

// row -= c * other
void eliminate(const Field& gf, std::vector<std::uint32_t>& row,
               const std::vector<std::uint32_t>& other, std::uint32_t c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < row.size(); ++i)
        row[i] = gf.sub(row[i], gf.mul(c, other[i]));
}

}  // namespace

ProjectivePoint normalize_point(const Field& gf, std::vector<std::uint32_t> raw) {
    for (std::uint32_t c : raw)
        if (c >= gf.q()) throw std::invalid_argument("normalize_point: coordinate out of range");
    int lead = first_nonzero(raw);
    if (lead < 0) throw std::invalid_argument("normalize_point: zero vector");
    std::uint32_t s = gf.inv(raw[lead]);
    if (s != 1) scale_row(gf, raw, s);
    return ProjectivePoint{std::move(raw)};
}

ProjectiveLine line_through(const Field& gf, const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.coords.size() != b.coords.size())
        throw std::invalid_argument("line_through: dimension mismatch");
    if (a == b) throw std::invalid_argument("line_through: points must be distinct");
    std::vector<std::uint32_t> r0 = a.coords;
    std::vector<std::uint32_t> r1 = b.coords;
    int j0 = first_nonzero(r0);
    if (j0 < 0 || (first_nonzero(r1) >= 0 && first_nonzero(r1) < j0)) std::swap(r0, r1);
    j0 = first_nonzero(r0);
    scale_row(gf, r0, gf.inv(r0[j0]));
    eliminate(gf, r1, r0, r1[j0]);
    int j1 = first_nonzero(r1);
    if (j1 < 0) throw std::invalid_argument("line_through: points are projectively equal");
    scale_row(gf, r1, gf.inv(r1[j1]));
    eliminate(gf, r0, r1, r0[j1]);
    return ProjectiveLine{std::move(r0), std::move(r1)};
}

bool collinear(const Field& gf, const ProjectivePoint& a, const ProjectivePoint& b,
               const ProjectivePoint& c) {
    if (a.coords.size() != b.coords.size() || b.coords.size() != c.coords.size())
        throw std::invalid_argument("collinear: dimension mismatch");
    if (a == b || a == c || b == c)
        throw std::invalid_argument("collinear: points must be pairwise distinct");
    std::vector<std::vector<std::uint32_t>> rows{a.coords, b.coords, c.coords};
    // Gaussian elimination; collinear iff the rank stays below 3.
    std::size_t rank = 0;
    std::size_t cols = rows[0].size();
    for (std::size_t col = 0; col < cols && rank < 3; ++col) {
        std::size_t pivot = rank;
        while (pivot < 3 && rows[pivot][col] == 0) ++pivot;
        if (pivot == 3) continue;
        std::swap(rows[rank], rows[pivot]);
        scale_row(gf, rows[rank], gf.inv(rows[rank][col]));
        for (std::size_t r = 0; r < 3; ++r)
            if (r != rank) eliminate(gf, rows[r], rows[rank], rows[r][col]);
        ++rank;
    }
    return rank <= 2;
}

std::vector<ProjectivePoint> line_points(const Field& gf, const ProjectiveLine& line) {
    std::vector<ProjectivePoint> pts;
    pts.reserve(gf.q() + 1);
    pts.push_back(ProjectivePoint{line.row1});  // row1 is canonical already
    for (std::uint32_t lambda = 0; lambda < gf.q(); ++lambda) {
        std::vector<std::uint32_t> v = line.row0;
        if (lambda != 0)
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = gf.add(v[i], gf.mul(lambda, line.row1[i]));
        // row0's pivot coordinate stays 1, so v is canonical as written.
        pts.push_back(ProjectivePoint{std::move(v)});
    }
    return pts;
}

bool line_contains(const Field& gf, const ProjectiveLine& line, const ProjectivePoint& pt) {
    if (line.row0.size() != pt.coords.size())
        throw std::invalid_argument("line_contains: dimension mismatch");
    int j0 = first_nonzero(line.row0);
    int j1 = first_nonzero(line.row1);
    std::uint32_t c0 = pt.coords[j0];
    std::uint32_t c1 = pt.coords[j1];
    for (std::size_t i = 0; i < pt.coords.size(); ++i) {
        std::uint32_t want = gf.add(gf.mul(c0, line.row0[i]), gf.mul(c1, line.row1[i]));
        if (pt.coords[i] != want) return false;
    }
    return true;
}

std::uint64_t projective_point_count(std::uint64_t q, std::uint32_t n) {
    std::uint64_t total = 0, power = 1;
    for (std::uint32_t i = 0; i <= n; ++i) {
        total += power;
        power *= q;
    }
    return total;
}

std::vector<ProjectivePoint> enumerate_points(const Field& gf, std::uint32_t n, std::uint64_t cap) {
    if (n < 1) throw std::invalid_argument("enumerate_points: n must be >= 1");
    std::uint64_t count = projective_point_count(gf.q(), n);
    if (count > cap) throw std::invalid_argument("enumerate_points: point count exceeds cap");
    std::vector<ProjectivePoint> pts;
    pts.reserve(count);
    // Lexicographic order: leading 1 as late as possible first, then the free
    // suffix coordinates count up as base-q odometers.
    for (int lead = static_cast<int>(n); lead >= 0; --lead) {
        std::uint32_t free = n - static_cast<std::uint32_t>(lead);
        std::vector<std::uint32_t> suffix(free, 0);
        while (true) {
            std::vector<std::uint32_t> coords(n + 1, 0);
            coords[lead] = 1;
            for (std::uint32_t i = 0; i < free; ++i) coords[lead + 1 + i] = suffix[i];
            pts.push_back(ProjectivePoint{std::move(coords)});
            // advance odometer (last coordinate least significant)
            int i = static_cast<int>(free) - 1;
            while (i >= 0 && suffix[i] + 1 == gf.q()) suffix[i--] = 0;
            if (i < 0) break;
            ++suffix[i];
        }
    }
    return pts;
}

std::vector<ProjectiveLine> enumerate_lines(const Field& gf, std::uint32_t n,
                                            std::uint64_t point_cap) {
    std::vector<ProjectivePoint> pts = enumerate_points(gf, n, point_cap);
    std::set<ProjectiveLine> lines;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            lines.insert(line_through(gf, pts[i], pts[j]));
    return std::vector<ProjectiveLine>(lines.begin(), lines.end());
}

}  // namespace thetaforge
