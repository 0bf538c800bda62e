#include "thetaforge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

namespace thetaforge {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

VerificationReport find_c4(const BipartiteGraph& g) {
    const auto start = std::chrono::steady_clock::now();
    g.validate();
    VerificationReport report;
    report.check = CheckKind::C4;
    report.point_count = g.point_count();
    // line id of the first line carrying each point pair; a second hit is a C4
    std::unordered_map<std::uint64_t, std::uint32_t> first_line;
    first_line.reserve(g.edge_count());
    for (std::uint32_t l = 0; l < g.line_count(); ++l) {
        const auto& pts = g.line_adj[l];
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                ++report.pairs_examined;
                std::uint64_t key =
                    static_cast<std::uint64_t>(pts[i]) * g.point_count() + pts[j];
                auto [it, fresh] = first_line.emplace(key, l);
                if (!fresh) {
                    report.pass = false;
                    report.c4_witness = C4Witness{pts[i], pts[j], it->second, l};
                    report.elapsed_ms = ms_since(start);
                    return report;
                }
            }
    }
    report.pass = true;
    report.elapsed_ms = ms_since(start);
    return report;
}

std::uint32_t max_disjoint_3paths(const BipartiteGraph& g, std::uint32_t u, std::uint32_t v) {
    if (u >= g.point_count() || v >= g.line_count())
        throw std::invalid_argument("max_disjoint_3paths: vertex id out of range");
    const auto& lines_of_u = g.point_adj[u];
    std::unordered_map<std::uint32_t, std::uint32_t> slot_of;
    slot_of.reserve(lines_of_u.size());
    for (std::uint32_t i = 0; i < lines_of_u.size(); ++i)
        if (lines_of_u[i] != v) slot_of.emplace(lines_of_u[i], i);

    // aux bipartite graph: slots of N(u)\{v} against N(v)\{u}
    std::vector<std::vector<std::uint32_t>> common;
    for (std::uint32_t p : g.line_adj[v]) {
        if (p == u) continue;
        std::vector<std::uint32_t> slots;
        for (std::uint32_t l : g.point_adj[p]) {
            auto it = slot_of.find(l);
            if (it != slot_of.end()) slots.push_back(it->second);
        }
        if (!slots.empty()) common.push_back(std::move(slots));
    }

    std::vector<std::int64_t> owner(lines_of_u.size(), -1);
    std::vector<char> visited(lines_of_u.size(), 0);
    struct Augment {
        const std::vector<std::vector<std::uint32_t>>& common;
        std::vector<std::int64_t>& owner;
        std::vector<char>& visited;
        bool operator()(std::uint32_t r) const {
            for (std::uint32_t slot : common[r]) {
                if (visited[slot]) continue;
                visited[slot] = 1;
                if (owner[slot] < 0 || (*this)(static_cast<std::uint32_t>(owner[slot]))) {
                    owner[slot] = r;
                    return true;
                }
            }
            return false;
        }
    } augment{common, owner, visited};

    std::uint32_t matched = 0;
    for (std::uint32_t r = 0; r < common.size(); ++r) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(r)) ++matched;
    }
    return matched;
}

namespace {

// Per-worker scratch for the theta scan. Stamp arrays avoid O(P+L) clears
// between the P outer iterations.
struct ThetaScratch {
    std::vector<std::vector<std::uint32_t>> common;  // point -> slots of shared lines with u
    std::vector<std::uint32_t> touched;
    std::vector<std::uint32_t> slot_stamp, slot_val;  // per line; stamp == u+1 means valid
    std::vector<std::uint32_t> cand_stamp;
    std::vector<std::uint32_t> candidates;
    std::vector<std::uint64_t> owner_stamp, visit_stamp;  // per slot
    std::vector<std::uint32_t> owner;                     // point occupying a slot
    std::uint64_t pair_counter = 0;
    std::uint64_t visit_counter = 0;
};

struct SlotMatcher {
    ThetaScratch& s;
    std::int64_t vslot = -1;  // slot of v itself when v passes through u

    bool augment(std::uint32_t p) {
        for (std::uint32_t slot : s.common[p]) {
            if (static_cast<std::int64_t>(slot) == vslot) continue;
            if (s.visit_stamp[slot] == s.visit_counter) continue;
            s.visit_stamp[slot] = s.visit_counter;
            bool taken = s.owner_stamp[slot] == s.pair_counter;
            if (!taken || augment(s.owner[slot])) {
                s.owner_stamp[slot] = s.pair_counter;
                s.owner[slot] = p;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

VerificationReport verify_theta_free(const BipartiteGraph& g, std::uint32_t t,
                                     const VerifyOptions& options) {
    if (t < 2) throw std::invalid_argument("verify_theta_free: t must be >= 2");
    const auto start = std::chrono::steady_clock::now();
    g.validate();
    const std::uint32_t point_count = g.point_count();
    const std::uint32_t line_count = g.line_count();

    VerificationReport report;
    report.check = CheckKind::Theta;
    report.t = t;
    report.point_count = point_count;

    std::size_t max_deg = 1;
    for (const auto& nbrs : g.point_adj) max_deg = std::max(max_deg, nbrs.size());

    std::atomic<std::uint32_t> next_u{0};
    std::atomic<std::uint32_t> best_fail_u{std::numeric_limits<std::uint32_t>::max()};
    std::mutex merge_mutex;
    std::optional<ThetaWitness> best_witness;
    std::uint64_t total_pairs = 0;
    std::uint32_t global_max = 0;

    auto worker = [&]() {
        ThetaScratch s;
        s.common.resize(point_count);
        s.slot_stamp.assign(line_count, 0);
        s.slot_val.resize(line_count);
        s.cand_stamp.assign(line_count, 0);
        s.owner_stamp.assign(max_deg, 0);
        s.visit_stamp.assign(max_deg, 0);
        s.owner.resize(max_deg);
        std::uint64_t my_pairs = 0;
        std::uint32_t my_max = 0;

        for (;;) {
            const std::uint32_t u = next_u.fetch_add(1, std::memory_order_relaxed);
            if (u >= point_count) break;
            if (u > best_fail_u.load(std::memory_order_relaxed)) continue;
            const auto& lines_of_u = g.point_adj[u];
            const std::uint32_t stamp = u + 1;
            for (std::uint32_t i = 0; i < lines_of_u.size(); ++i) {
                s.slot_stamp[lines_of_u[i]] = stamp;
                s.slot_val[lines_of_u[i]] = i;
            }
            s.touched.clear();
            for (std::uint32_t i = 0; i < lines_of_u.size(); ++i)
                for (std::uint32_t p : g.line_adj[lines_of_u[i]]) {
                    if (p == u) continue;
                    if (s.common[p].empty()) s.touched.push_back(p);
                    s.common[p].push_back(i);
                }
            // any line within distance 3 of u; everything else has no 3-path
            s.candidates.clear();
            for (std::uint32_t p : s.touched)
                for (std::uint32_t l : g.point_adj[p])
                    if (s.cand_stamp[l] != stamp) {
                        s.cand_stamp[l] = stamp;
                        s.candidates.push_back(l);
                    }
            std::sort(s.candidates.begin(), s.candidates.end());

            SlotMatcher matcher{s, -1};
            for (std::uint32_t v : s.candidates) {
                ++my_pairs;
                ++s.pair_counter;
                matcher.vslot =
                    s.slot_stamp[v] == stamp ? static_cast<std::int64_t>(s.slot_val[v]) : -1;
                std::uint32_t matched = 0;
                for (std::uint32_t p : g.line_adj[v]) {
                    if (p == u || s.common[p].empty()) continue;
                    ++s.visit_counter;
                    if (matcher.augment(p)) {
                        ++matched;
                        if (!options.exact_counts && matched >= t) break;
                    }
                }
                my_max = std::max(my_max, matched);
                if (matched < t) continue;

                ThetaWitness w;
                w.u = u;
                w.v = v;
                for (std::uint32_t slot = 0; slot < lines_of_u.size(); ++slot)
                    if (s.owner_stamp[slot] == s.pair_counter)
                        w.paths.push_back(ThetaPath{lines_of_u[slot], s.owner[slot]});
                std::sort(w.paths.begin(), w.paths.end(),
                          [](const ThetaPath& a, const ThetaPath& b) { return a.line < b.line; });
                if (w.paths.size() > t) w.paths.resize(t);
                {
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    if (!best_witness || w.u < best_witness->u ||
                        (w.u == best_witness->u && w.v < best_witness->v)) {
                        best_witness = std::move(w);
                        best_fail_u.store(best_witness->u, std::memory_order_relaxed);
                    }
                }
                break;  // candidates ascend, so this v is minimal for u
            }
            for (std::uint32_t p : s.touched) s.common[p].clear();
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        total_pairs += my_pairs;
        global_max = std::max(global_max, my_max);
    };

    std::uint32_t jobs = std::max<std::uint32_t>(1, options.jobs);
    if (point_count) jobs = std::min(jobs, point_count);
    std::vector<std::thread> pool;
    for (std::uint32_t i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    report.pass = !best_witness.has_value();
    if (best_witness) report.theta_witness = std::move(*best_witness);
    report.pairs_examined = total_pairs;
    report.max_disjoint_paths = global_max;
    report.elapsed_ms = ms_since(start);
    return report;
}

std::optional<std::uint32_t> girth(const BipartiteGraph& g) {
    const std::uint32_t point_count = g.point_count();
    const std::uint64_t vertex_count = static_cast<std::uint64_t>(point_count) + g.line_count();
    if (vertex_count == 0) return std::nullopt;
    constexpr std::uint64_t kInf = ~0ull;
    std::uint64_t best = kInf;
    std::vector<std::uint32_t> dist(vertex_count), parent(vertex_count);
    std::vector<std::uint32_t> stamp(vertex_count, 0);
    std::vector<std::uint32_t> queue;
    queue.reserve(vertex_count);
    auto each_neighbor = [&](std::uint32_t x, auto&& fn) {
        if (x < point_count)
            for (std::uint32_t l : g.point_adj[x]) fn(point_count + l);
        else
            for (std::uint32_t p : g.line_adj[x - point_count]) fn(p);
    };
    // min over roots of dist(x)+dist(y)+1 across non-tree edges is exact;
    // vertices deeper than best/2 cannot improve it, so the BFS truncates
    for (std::uint32_t r = 0; r < vertex_count; ++r) {
        const std::uint32_t mark = r + 1;
        queue.clear();
        queue.push_back(r);
        stamp[r] = mark;
        dist[r] = 0;
        parent[r] = r;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t x = queue[head];
            if (2ull * dist[x] >= best) break;
            each_neighbor(x, [&](std::uint32_t y) {
                if (stamp[y] != mark) {
                    stamp[y] = mark;
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    if (2ull * dist[y] < best) queue.push_back(y);
                } else if (y != parent[x]) {
                    best = std::min(best, static_cast<std::uint64_t>(dist[x]) + dist[y] + 1);
                }
            });
        }
    }
    if (best == kInf) return std::nullopt;
    return static_cast<std::uint32_t>(best);
}

VerificationReport girth_report(const BipartiteGraph& g) {
    const auto start = std::chrono::steady_clock::now();
    g.validate();
    VerificationReport report;
    report.check = CheckKind::Girth;
    report.point_count = g.point_count();
    report.girth_value = girth(g);
    report.pass = true;
    report.elapsed_ms = ms_since(start);
    return report;
}

bool replay_witness(const BipartiteGraph& g, const C4Witness& w) {
    if (w.p1 == w.p2 || w.l1 == w.l2) return false;
    if (w.p1 >= g.point_count() || w.p2 >= g.point_count()) return false;
    if (w.l1 >= g.line_count() || w.l2 >= g.line_count()) return false;
    return g.adjacent(w.p1, w.l1) && g.adjacent(w.p1, w.l2) && g.adjacent(w.p2, w.l1) &&
           g.adjacent(w.p2, w.l2);
}

bool replay_witness(const BipartiteGraph& g, const ThetaWitness& w, std::uint32_t t) {
    if (w.u >= g.point_count() || w.v >= g.line_count()) return false;
    if (w.paths.size() != t) return false;
    std::vector<std::uint32_t> lines, points;
    for (const auto& path : w.paths) {
        if (path.line >= g.line_count() || path.point >= g.point_count()) return false;
        if (path.line == w.v || path.point == w.u) return false;
        if (!g.adjacent(w.u, path.line)) return false;
        if (!g.adjacent(path.point, path.line)) return false;
        if (!g.adjacent(path.point, w.v)) return false;
        lines.push_back(path.line);
        points.push_back(path.point);
    }
    std::sort(lines.begin(), lines.end());
    std::sort(points.begin(), points.end());
    return std::adjacent_find(lines.begin(), lines.end()) == lines.end() &&
           std::adjacent_find(points.begin(), points.end()) == points.end();
}

void write_report(std::ostream& out, const VerificationReport& report) {
    switch (report.check) {
        case CheckKind::C4:
            out << "check: c4\n";
            break;
        case CheckKind::Theta:
            out << "check: theta\n"
                << "t: " << report.t << '\n';
            break;
        case CheckKind::Girth:
            out << "check: girth\n";
            break;
    }
    out << "outcome: " << (report.pass ? "pass" : "fail") << '\n';
    if (report.check == CheckKind::Girth) {
        out << "girth: ";
        if (report.girth_value)
            out << *report.girth_value;
        else
            out << "infinity";
        out << '\n';
        return;
    }
    if (report.pass) {
        // fail runs may stop early (and, in parallel, nondeterministically),
        // so counters are only reported on pass
        out << "pairs-examined: " << report.pairs_examined << '\n';
        if (report.check == CheckKind::Theta)
            out << "max-disjoint-paths: " << report.max_disjoint_paths << '\n';
        return;
    }
    const std::uint64_t offset = report.point_count;
    if (report.check == CheckKind::C4 && report.c4_witness) {
        const auto& w = *report.c4_witness;
        out << "witness-point: " << w.p1 << '\n'
            << "witness-point: " << w.p2 << '\n'
            << "witness-line: " << offset + w.l1 << '\n'
            << "witness-line: " << offset + w.l2 << '\n';
    } else if (report.check == CheckKind::Theta && report.theta_witness) {
        const auto& w = *report.theta_witness;
        out << "witness-point: " << w.u << '\n'
            << "witness-line: " << offset + w.v << '\n';
        for (const auto& path : w.paths)
            out << "path: " << offset + path.line << ' ' << path.point << '\n';
    }
}

}  // namespace thetaforge
