#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "axisrep/hypergraph.hpp"

namespace axisrep {

/// Raised when a brute-force search is asked to exceed its size cap.
struct size_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ════════════════════════════════════════════════════════════════════
//  Simple graphs
// ════════════════════════════════════════════════════════════════════

struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v

    static SimpleGraph create(int n, std::vector<std::pair<int, int>> edges) {
        if (n < 0) throw validation_error("negative vertex count");
        std::set<std::pair<int, int>> seen;
        for (auto& [u, v] : edges) {
            if (u == v) throw validation_error("loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n) throw validation_error("edge endpoint out of range");
            if (!seen.insert({u, v}).second)
                throw validation_error("parallel edge (" + std::to_string(u) + "," +
                                       std::to_string(v) + ")");
        }
        return SimpleGraph{n, std::move(edges)};
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }
};

// ════════════════════════════════════════════════════════════════════
//  Gadget instances
// ════════════════════════════════════════════════════════════════════

enum class PointRole { type_a, type_b, inner };

struct GadgetPoint {
    std::array<long long, 3> coords{};
    PointRole role = PointRole::inner;
    bool owner_is_edge = false;
    int owner = 0;  // source-graph vertex id, or edge id when owner_is_edge
};

/// Axis-parallel line in 3-space: one free axis, the two other
/// coordinates fixed (stored in ascending axis order).
struct GadgetLine {
    int free_axis = 1;  // 1..3
    std::array<long long, 2> fixed{};
    bool owner_is_edge = false;
    int owner = 0;

    bool contains(const std::array<long long, 3>& p) const {
        int t = 0;
        for (int axis = 1; axis <= 3; ++axis) {
            if (axis == free_axis) continue;
            if (p[axis - 1] != fixed[t]) return false;
            ++t;
        }
        return true;
    }

    friend bool operator==(const GadgetLine&, const GadgetLine&) = default;
};

/// Point-line instance produced by the independent-set reduction: one
/// staircase path per source vertex (its own z-plane) and one 5-line,
/// non-coplanar path per source edge joining two A-points.
struct GadgetInstance {
    int n = 0;  // source graph vertices
    int m = 0;  // source graph edges
    std::vector<GadgetPoint> points;
    std::vector<GadgetLine> lines;
    std::vector<std::vector<int>> vertex_points;  // per source vertex, path order
    std::vector<std::vector<int>> vertex_lines;
    std::vector<std::vector<int>> edge_points;  // per source edge, endpoints included
    std::vector<std::vector<int>> edge_lines;

    /// Maximum matching equals this for an optimal independent set.
    long long matching_target(long long independent_set_size) const {
        return static_cast<long long>(n) * n - 2 * n + independent_set_size + 2 * m;
    }
};

/// Deterministic layout. Vertex i's staircase lives in the plane
/// z = i*(m+1) with x,y in its own band [i*n+1, i*n+n-1]; the j-th edge
/// path climbs through the intermediate level z(host) + 1 + j using the
/// dedicated column x = n^2 + j.
inline GadgetInstance build_matching_instance(const SimpleGraph& src) {
    if (src.n < 2) throw validation_error("reduction requires at least two vertices");
    const int n = src.n;
    const int m = src.edge_count();

    GadgetInstance out;
    out.n = n;
    out.m = m;
    out.vertex_points.resize(n);
    out.vertex_lines.resize(n);
    out.edge_points.resize(m);
    out.edge_lines.resize(m);

    auto add_point = [&](long long x, long long y, long long z, PointRole role,
                         bool from_edge, int owner) {
        out.points.push_back(GadgetPoint{{x, y, z}, role, from_edge, owner});
        return static_cast<int>(out.points.size() - 1);
    };
    auto add_line = [&](int free_axis, long long f0, long long f1, bool from_edge,
                        int owner) {
        out.lines.push_back(GadgetLine{free_axis, {f0, f1}, from_edge, owner});
        return static_cast<int>(out.lines.size() - 1);
    };

    // Vertex staircases. A-points sit on the band diagonal; the c-th one
    // of vertex i is point index a_point[i][c].
    std::vector<std::vector<int>> a_point(n);
    for (int i = 0; i < n; ++i) {
        const long long s = static_cast<long long>(i) * n;
        const long long z = static_cast<long long>(i) * (m + 1);
        for (int j = 1; j <= n - 1; ++j) {
            out.vertex_lines[i].push_back(add_line(2, s + j, z, false, i));  // x = s+j
            out.vertex_lines[i].push_back(add_line(1, s + j, z, false, i));  // y = s+j
        }
        for (int t = 1; t <= 2 * n - 3; ++t) {
            if (t % 2 == 1) {
                const int c = (t - 1) / 2;
                int id = add_point(s + c + 1, s + c + 1, z, PointRole::type_a, false, i);
                out.vertex_points[i].push_back(id);
                a_point[i].push_back(id);
            } else {
                const int c = (t - 2) / 2;
                out.vertex_points[i].push_back(
                        add_point(s + c + 2, s + c + 1, z, PointRole::type_b, false, i));
            }
        }
    }

    // Edge paths. Each endpoint vertex hands out its A-points in ascending
    // edge-id order; n-1 of them always cover the degree.
    std::vector<int> consumed(n, 0);
    for (int j = 0; j < m; ++j) {
        auto [u, v] = src.edges[j];
        const int au = a_point[u][consumed[u]++];
        const int av = a_point[v][consumed[v]++];
        const long long xu = out.points[au].coords[0];
        const long long xv = out.points[av].coords[0];
        const long long w = static_cast<long long>(u) * (m + 1) + 1 + j;
        const long long b = static_cast<long long>(n) * n + j;

        out.edge_lines[j] = {add_line(3, xu, xu, true, j),  // climb out of plane u
                             add_line(1, xu, w, true, j),
                             add_line(2, b, w, true, j),
                             add_line(1, xv, w, true, j),
                             add_line(3, xv, xv, true, j)};  // descend into plane v
        out.edge_points[j] = {au,
                              add_point(xu, xu, w, PointRole::inner, true, j),
                              add_point(b, xu, w, PointRole::inner, true, j),
                              add_point(b, xv, w, PointRole::inner, true, j),
                              add_point(xv, xv, w, PointRole::inner, true, j),
                              av};
    }
    return out;
}

// ════════════════════════════════════════════════════════════════════
//  Structural verification
// ════════════════════════════════════════════════════════════════════

namespace detail {

inline int shared_coords(const std::array<long long, 3>& a, const std::array<long long, 3>& b) {
    int c = 0;
    for (int t = 0; t < 3; ++t) c += (a[t] == b[t]);
    return c;
}

/// Do the lines all fit in one plane? Lines with three distinct free axes
/// never do; two distinct free axes force an axis-aligned candidate plane;
/// parallel lines are coplanar iff their fixed pairs are collinear.
inline bool lines_coplanar(const std::vector<GadgetLine>& lines) {
    if (lines.size() <= 1) return true;
    std::set<int> axes;
    for (const auto& l : lines) axes.insert(l.free_axis);
    if (axes.size() == 3) return false;
    if (axes.size() == 2) {
        // The only candidate plane fixes the axis perpendicular to both
        // directions; every line stores that coordinate in its fixed pair.
        const int perp = 6 - *axes.begin() - *std::next(axes.begin());
        long long want = 0;
        bool first = true;
        for (const auto& l : lines) {
            // Fixed values sit in ascending axis order among the two
            // non-free axes.
            int lo = (l.free_axis == 1) ? 2 : 1;
            int t = (perp == lo) ? 0 : 1;
            long long got = l.fixed[t];
            if (first) {
                want = got;
                first = false;
            } else if (got != want) {
                return false;
            }
        }
        return true;
    }
    // All parallel: coplanar iff the fixed pairs are collinear as 2D points.
    const auto& f0 = lines[0].fixed;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        long long ax = lines[1].fixed[0] - f0[0], ay = lines[1].fixed[1] - f0[1];
        long long bx = lines[i].fixed[0] - f0[0], by = lines[i].fixed[1] - f0[1];
        if (ax * by - ay * bx != 0) return false;
    }
    return true;
}

}  // namespace detail

/// Check every structural invariant of a gadget instance; the diagnostic
/// names the first violation.
inline VerifyResult verify_gadget_instance(const GadgetInstance& g) {
    const int n = g.n;
    if (n < 2) return {false, "instance has fewer than two source vertices"};
    if (static_cast<int>(g.vertex_points.size()) != n ||
        static_cast<int>(g.vertex_lines.size()) != n ||
        static_cast<int>(g.edge_points.size()) != g.m ||
        static_cast<int>(g.edge_lines.size()) != g.m)
        return {false, "path index tables do not match n/m"};

    // Distinctness.
    {
        std::set<std::array<long long, 3>> pts;
        for (const auto& p : g.points)
            if (!pts.insert(p.coords).second) return {false, "two points coincide"};
        std::set<std::pair<int, std::array<long long, 2>>> lns;
        for (const auto& l : g.lines) {
            if (l.free_axis < 1 || l.free_axis > 3) return {false, "line has bad axis"};
            if (!lns.insert({l.free_axis, l.fixed}).second)
                return {false, "two lines overlap"};
        }
    }

    // Vertex paths.
    std::set<long long> planes;
    for (int i = 0; i < n; ++i) {
        const auto& lids = g.vertex_lines[i];
        const auto& pids = g.vertex_points[i];
        if (static_cast<int>(lids.size()) != 2 * (n - 1))
            return {false, "vertex path has wrong line count"};
        if (static_cast<int>(pids.size()) != 2 * n - 3)
            return {false, "vertex path has wrong point count"};
        long long z = 0;
        for (std::size_t t = 0; t < lids.size(); ++t) {
            const GadgetLine& l = g.lines[lids[t]];
            if (l.free_axis == 3) return {false, "vertex path line not perpendicular to z"};
            long long lz = l.fixed[1];  // (x,z) or (y,z), z is second either way
            if (t == 0)
                z = lz;
            else if (lz != z)
                return {false, "vertex path leaves its plane"};
        }
        if (!planes.insert(z).second) return {false, "vertex paths share a plane"};
        int a_count = 0, b_count = 0;
        for (std::size_t t = 0; t < pids.size(); ++t) {
            const GadgetPoint& p = g.points[pids[t]];
            if (p.coords[2] != z) return {false, "vertex path point off its plane"};
            if (p.owner_is_edge || p.owner != i)
                return {false, "vertex path point has wrong owner"};
            PointRole want = (t % 2 == 0) ? PointRole::type_a : PointRole::type_b;
            if (p.role != want) return {false, "vertex path roles do not alternate"};
            (p.role == PointRole::type_a ? a_count : b_count) += 1;
            if (!g.lines[lids[t]].contains(p.coords) ||
                !g.lines[lids[t + 1]].contains(p.coords))
                return {false, "vertex path point misses its two lines"};
        }
        if (a_count != n - 1 || b_count != std::max(n - 2, 0))
            return {false, "vertex path has wrong A/B counts"};
    }

    // Edge paths.
    std::set<int> used_a_points;
    for (int j = 0; j < g.m; ++j) {
        const auto& lids = g.edge_lines[j];
        const auto& pids = g.edge_points[j];
        if (lids.size() != 5) return {false, "edge path has wrong line count"};
        if (pids.size() != 6) return {false, "edge path has wrong point count"};
        for (std::size_t t = 0; t < pids.size(); ++t) {
            const GadgetPoint& p = g.points[pids[t]];
            const bool endpoint = (t == 0 || t == 5);
            if (endpoint) {
                if (p.role != PointRole::type_a)
                    return {false, "edge path endpoint is not a type-A point"};
                if (!used_a_points.insert(pids[t]).second)
                    return {false, "A-point serves two edge paths"};
            } else {
                if (p.role != PointRole::inner || !p.owner_is_edge || p.owner != j)
                    return {false, "edge path interior is not its own inner point"};
            }
        }
        for (std::size_t t = 0; t + 1 < pids.size(); ++t) {
            const auto& a = g.points[pids[t]].coords;
            const auto& b = g.points[pids[t + 1]].coords;
            if (detail::shared_coords(a, b) != 2)
                return {false, "consecutive edge path points do not share exactly one line"};
            if (!g.lines[lids[t]].contains(a) || !g.lines[lids[t]].contains(b))
                return {false, "edge path line misses its two points"};
        }
        std::vector<GadgetLine> path_lines;
        for (int lid : lids) path_lines.push_back(g.lines[lid]);
        if (detail::lines_coplanar(path_lines)) return {false, "edge path lies on a plane"};
    }

    // Inner point sets of distinct edge paths are disjoint by ownership;
    // shared endpoints were already rejected above.

    // Global conflict structure: every pair of points sharing an
    // axis-parallel line must be consecutive on some path.
    std::set<std::pair<int, int>> expected;
    auto note = [&](int a, int b) { expected.insert({std::min(a, b), std::max(a, b)}); };
    for (int i = 0; i < n; ++i)
        for (std::size_t t = 0; t + 1 < g.vertex_points[i].size(); ++t)
            note(g.vertex_points[i][t], g.vertex_points[i][t + 1]);
    for (int j = 0; j < g.m; ++j)
        for (std::size_t t = 0; t + 1 < g.edge_points[j].size(); ++t)
            note(g.edge_points[j][t], g.edge_points[j][t + 1]);

    for (int axis = 0; axis < 3; ++axis) {
        std::map<std::array<long long, 2>, std::vector<int>> groups;
        for (std::size_t i = 0; i < g.points.size(); ++i) {
            const auto& c = g.points[i].coords;
            std::array<long long, 2> key{};
            int t = 0;
            for (int a = 0; a < 3; ++a)
                if (a != axis) key[t++] = c[a];
            groups[key].push_back(static_cast<int>(i));
        }
        for (const auto& [key, ids] : groups) {
            if (ids.size() >= 3) return {false, "three points share a line"};
            if (ids.size() == 2 && !expected.count({ids[0], ids[1]}))
                return {false, "unexpected shared line between points"};
        }
    }

    return {true, ""};
}

// ════════════════════════════════════════════════════════════════════
//  Brute-force search
// ════════════════════════════════════════════════════════════════════

namespace detail {

/// Exact maximum independent set: degree-0/1 reductions, then branch on
/// the highest-degree vertex with the remaining-count bound.
inline int max_independent_set(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    int best = 0;

    auto solve = [&](auto&& self, std::vector<char> alive, int chosen) -> void {
        // Reductions.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (!alive[v]) continue;
                int deg = 0, nb = -1;
                for (int u : adj[v])
                    if (alive[u]) {
                        ++deg;
                        nb = u;
                    }
                if (deg == 0) {
                    alive[v] = 0;
                    ++chosen;
                    changed = true;
                } else if (deg == 1) {
                    alive[v] = 0;
                    alive[nb] = 0;
                    ++chosen;
                    changed = true;
                }
            }
        }
        int remaining = 0;
        for (int v = 0; v < n; ++v) remaining += alive[v];
        if (chosen > best) best = chosen;
        if (remaining == 0 || chosen + remaining <= best) return;

        // Branch on the most constrained vertex.
        int pick = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            int deg = 0;
            for (int u : adj[v]) deg += alive[u];
            if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        std::vector<char> with = alive;
        with[pick] = 0;
        for (int u : adj[pick]) with[u] = 0;
        self(self, std::move(with), chosen + 1);
        std::vector<char> without = std::move(alive);
        without[pick] = 0;
        self(self, std::move(without), chosen);
    };
    solve(solve, std::vector<char>(n, 1), 0);
    return best;
}

}  // namespace detail

/// Largest set of points no two of which lie on a common axis-parallel
/// line; two points share such a line iff they agree on all but one
/// coordinate. Exact branch and bound; throws size_cap_error above `cap`.
inline int brute_force_max_matching(const std::vector<std::vector<long long>>& points,
                                    std::size_t cap = 100) {
    if (points.size() > cap)
        throw size_cap_error("instance has " + std::to_string(points.size()) +
                             " points, cap is " + std::to_string(cap));
    if (points.empty()) return 0;
    const std::size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d) throw validation_error("points have mixed dimensions");

    const int n = static_cast<int>(points.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::size_t agree = 0;
            for (std::size_t t = 0; t < d; ++t) agree += (points[i][t] == points[j][t]);
            if (agree == d - 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    return detail::max_independent_set(adj);
}

inline int brute_force_max_matching(const GadgetInstance& g, std::size_t cap = 100) {
    std::vector<std::vector<long long>> pts;
    pts.reserve(g.points.size());
    for (const auto& p : g.points)
        pts.push_back({p.coords[0], p.coords[1], p.coords[2]});
    return brute_force_max_matching(pts, cap);
}

/// Exact independence number of a simple graph.
inline int brute_force_max_independent_set(const SimpleGraph& g, int cap = 26) {
    if (g.n > cap)
        throw size_cap_error("graph has " + std::to_string(g.n) + " vertices, cap is " +
                             std::to_string(cap));
    return detail::max_independent_set(g.adjacency());
}

}  // namespace axisrep
