#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "axisrep/hypergraph.hpp"
#include "axisrep/representation.hpp"

namespace axisrep {

// ════════════════════════════════════════════════════════════════════
//  Planar many-directions instances
// ════════════════════════════════════════════════════════════════════

struct PlanarLine {
    std::array<long long, 2> direction{};
    std::array<long long, 2> through{};
    int direction_class = 0;  // 1-based

    friend bool operator==(const PlanarLine&, const PlanarLine&) = default;
};

struct PlanarInstance {
    std::vector<std::array<long long, 2>> points;
    std::vector<PlanarLine> lines;
    int direction_count = 0;
};

namespace detail {

using int128 = __int128;

inline int128 cross2(long long ax, long long ay, long long bx, long long by) {
    return static_cast<int128>(ax) * by - static_cast<int128>(ay) * bx;
}

inline bool on_line(const PlanarLine& l, const std::array<long long, 2>& p) {
    return cross2(l.direction[0], l.direction[1], p[0] - l.through[0],
                  p[1] - l.through[1]) == 0;
}

}  // namespace detail

// ════════════════════════════════════════════════════════════════════
//  Random projection to the plane
// ════════════════════════════════════════════════════════════════════

struct ProjectionResult {
    PlanarInstance instance;
    int retries = 0;
    std::uint64_t seed_used = 0;
};

/// Verify a planar instance against its d-dimensional source: point count
/// and distinctness, one line per source subspace, exactly d pairwise
/// non-parallel direction classes, and incidence exactly matching the
/// source. All tests use exact integer arithmetic.
inline VerifyResult verify_planar_instance(const Representation& src,
                                           const PlanarInstance& inst) {
    if (inst.points.size() != src.points.size())
        return {false, "point count differs from source"};
    {
        std::set<std::array<long long, 2>> seen(inst.points.begin(), inst.points.end());
        if (seen.size() != inst.points.size()) return {false, "points not distinct"};
    }

    std::size_t subspace_count = 0;
    for (const auto& part : src.subspaces) subspace_count += part.size();
    if (inst.lines.size() != subspace_count)
        return {false, "line count differs from source"};

    if (inst.direction_count != src.d) return {false, "direction class count is not d"};
    std::vector<std::array<long long, 2>> class_dir(src.d, {0, 0});
    std::vector<char> class_seen(src.d, 0);
    for (const auto& l : inst.lines) {
        if (l.direction_class < 1 || l.direction_class > src.d)
            return {false, "direction class out of range"};
        if (l.direction[0] == 0 && l.direction[1] == 0)
            return {false, "line has zero direction"};
        int c = l.direction_class - 1;
        if (!class_seen[c]) {
            class_seen[c] = 1;
            class_dir[c] = l.direction;
        } else if (detail::cross2(class_dir[c][0], class_dir[c][1], l.direction[0],
                                  l.direction[1]) != 0) {
            return {false, "lines of one class are not parallel"};
        }
    }
    for (int c = 0; c < src.d; ++c)
        if (!class_seen[c]) return {false, "direction class unused"};
    for (int a = 0; a < src.d; ++a)
        for (int b = a + 1; b < src.d; ++b)
            if (detail::cross2(class_dir[a][0], class_dir[a][1], class_dir[b][0],
                               class_dir[b][1]) == 0)
                return {false, "directions not distinct"};

    // Lines pairwise distinct: different classes are never parallel, and
    // within a class (one shared direction) a line is determined by the
    // cross product of the direction with its through point.
    {
        std::vector<std::set<detail::int128>> offsets(src.d);
        for (const auto& l : inst.lines) {
            int c = l.direction_class - 1;
            detail::int128 offset = detail::cross2(class_dir[c][0], class_dir[c][1],
                                                   l.through[0], l.through[1]);
            if (!offsets[c].insert(offset).second) return {false, "lines not distinct"};
        }
    }

    // Incidence isomorphism: planar incidence must equal source incidence,
    // lines enumerated per part then per vertex, points per edge.
    std::size_t line_idx = 0;
    for (const auto& part : src.subspaces) {
        for (const auto& sub : part) {
            const PlanarLine& l = inst.lines[line_idx++];
            for (std::size_t e = 0; e < src.points.size(); ++e) {
                const bool src_incident = sub.contains(src.points[e]);
                const bool planar_incident = detail::on_line(l, inst.points[e]);
                if (src_incident != planar_incident)
                    return {false, "incidence differs from source at point e" +
                                           std::to_string(e)};
            }
        }
    }
    return {true, ""};
}

/// Incidence check of a planar instance directly against a hypergraph:
/// lines in (part, vertex) enumeration order, points in edge order.
inline VerifyResult verify_planar_incidence(const PartitionedHypergraph& g,
                                            const PlanarInstance& inst) {
    if (static_cast<int>(inst.points.size()) != g.edge_count())
        return {false, "point count differs from hypergraph"};
    if (static_cast<int>(inst.lines.size()) != g.vertex_count())
        return {false, "line count differs from hypergraph"};
    std::size_t line_idx = 0;
    for (int p = 0; p < g.part_count(); ++p) {
        for (int i = 0; i < g.part_size(p); ++i) {
            const PlanarLine& l = inst.lines[line_idx++];
            for (int e = 0; e < g.edge_count(); ++e) {
                const bool member = g.edge_contains(EdgeRef{e}, VertexRef{p, i});
                if (member != detail::on_line(l, inst.points[e]))
                    return {false, "incidence differs from hypergraph at point e" +
                                           std::to_string(e)};
            }
        }
    }
    return {true, ""};
}

/// Project a (d,1) representation onto the plane through a random integer
/// 2xd matrix, giving a point-line instance whose lines use exactly d
/// directions (the matrix columns). Entries are drawn uniformly from
/// [1, 2^31): exact arithmetic stands in for real-valued genericity, and
/// any degenerate draw is retried with seed+1.
inline ProjectionResult project_to_plane(const Representation& rep, std::uint64_t seed,
                                         int max_retries = 16) {
    if (rep.ell != 1) throw std::invalid_argument("projection requires ell = 1");

    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        const std::uint64_t cur = seed + static_cast<std::uint64_t>(attempt);
        std::mt19937_64 engine(cur);
        constexpr std::uint64_t span = (1ull << 31) - 1;
        std::vector<long long> row0(rep.d), row1(rep.d);
        for (int a = 0; a < rep.d; ++a) row0[a] = static_cast<long long>(1 + engine() % span);
        for (int a = 0; a < rep.d; ++a) row1[a] = static_cast<long long>(1 + engine() % span);

        auto map_point = [&](const std::vector<long long>& p) {
            detail::int128 x = 0, y = 0;
            for (int a = 0; a < rep.d; ++a) {
                x += static_cast<detail::int128>(row0[a]) * p[a];
                y += static_cast<detail::int128>(row1[a]) * p[a];
            }
            constexpr detail::int128 lim = 0x7fffffffffffffffLL;
            if (x > lim || x < -lim || y > lim || y < -lim)
                throw validation_error("projected coordinate overflows 64 bits");
            return std::array<long long, 2>{static_cast<long long>(x),
                                            static_cast<long long>(y)};
        };

        PlanarInstance inst;
        inst.direction_count = rep.d;
        inst.points.reserve(rep.points.size());
        for (const auto& p : rep.points) inst.points.push_back(map_point(p));

        for (int p = 0; p < static_cast<int>(rep.subspaces.size()); ++p) {
            for (const auto& sub : rep.subspaces[p]) {
                const int axis = sub.free_axes[0];
                std::vector<long long> base(rep.d, 0);
                for (auto [a, value] : sub.fixed) base[a - 1] = value;
                PlanarLine line;
                line.direction = {row0[axis - 1], row1[axis - 1]};
                line.through = map_point(base);
                line.direction_class = axis;
                inst.lines.push_back(line);
            }
        }

        if (verify_planar_instance(rep, inst).ok)
            return ProjectionResult{std::move(inst), attempt, cur};
    }
    throw std::runtime_error("projection retry budget exhausted; source degenerate?");
}

/// View a 2-dimensional (ell = 1) representation as a planar instance;
/// the direction class of each line is its free axis.
inline PlanarInstance planar_view_2d(const Representation& rep) {
    if (rep.d != 2 || rep.ell != 1)
        throw std::invalid_argument("planar view requires d = 2, ell = 1");
    PlanarInstance inst;
    inst.direction_count = 2;
    for (const auto& p : rep.points) inst.points.push_back({p[0], p[1]});
    for (const auto& part : rep.subspaces) {
        for (const auto& sub : part) {
            const int axis = sub.free_axes[0];
            PlanarLine line;
            line.direction = (axis == 1) ? std::array<long long, 2>{1, 0}
                                         : std::array<long long, 2>{0, 1};
            long long fixed_value = sub.fixed[0].second;
            line.through = (axis == 1) ? std::array<long long, 2>{0, fixed_value}
                                       : std::array<long long, 2>{fixed_value, 0};
            line.direction_class = axis;
            inst.lines.push_back(line);
        }
    }
    return inst;
}

}  // namespace axisrep
