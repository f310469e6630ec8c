#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "axisrep/hypergraph.hpp"
#include "axisrep/labeling.hpp"
#include "axisrep/separability.hpp"

namespace axisrep {

// ════════════════════════════════════════════════════════════════════
//  Geometry types
// ════════════════════════════════════════════════════════════════════

/// Axis-aligned affine subspace: ell free coordinates, the rest fixed.
struct AxisSubspace {
    std::vector<int> free_axes;                    // sorted, 1-based
    std::vector<std::pair<int, long long>> fixed;  // (axis, value), ascending axis

    bool contains(std::span<const long long> point) const {
        for (auto [axis, value] : fixed)
            if (point[axis - 1] != value) return false;
        return true;
    }

    friend bool operator==(const AxisSubspace&, const AxisSubspace&) = default;
};

/// Point-subspace cover instance realizing a hypergraph: one point per
/// hyperedge, one subspace per vertex, incidence preserved exactly.
struct Representation {
    int d = 0;
    int ell = 0;
    PartLabeling labeling;
    std::vector<std::vector<long long>> points;        // [edge][axis-1]
    std::vector<std::vector<AxisSubspace>> subspaces;  // [part][vertex index]

    const AxisSubspace& subspace_of(VertexRef v) const { return subspaces[v.part][v.index]; }
    const std::vector<long long>& point_of(EdgeRef e) const { return points[e.index]; }
};

// ════════════════════════════════════════════════════════════════════
//  Construction
// ════════════════════════════════════════════════════════════════════

using ConstructResult = std::variant<Representation, SeparabilityWitness>;

/// Coordinate-assignment construction: the i-th coordinate of an edge's
/// point is its component id in the axis-i component graph; a vertex's
/// subspace copies the fixed coordinates of any incident edge (incident
/// edges agree on them by construction). Succeeds iff the hypergraph is
/// vertex-separable under this labeling; on failure the witness of the
/// colliding pair is returned, vertex pairs preferred over edge pairs.
inline ConstructResult construct_representation(const PartitionedHypergraph& g,
                                                const PartLabeling& labeling) {
    if (labeling.part_count() != g.part_count())
        throw validation_error("labeling part count does not match hypergraph");

    auto partitions = build_all_component_partitions(g, labeling);

    // Subspaces per part; a fixed-signature collision is a non-separable
    // vertex pair.
    std::vector<std::vector<AxisSubspace>> subspaces(g.part_count());
    for (int p = 0; p < g.part_count(); ++p) {
        const std::vector<int> fixed_axes = labeling.fixed_axes(p);
        std::map<std::vector<long long>, int> first_with;
        subspaces[p].reserve(g.part_size(p));
        for (int i = 0; i < g.part_size(p); ++i) {
            std::vector<long long> signature;
            signature.reserve(fixed_axes.size());
            for (int axis : fixed_axes)
                signature.push_back(
                        detail::vertex_component(g, partitions[axis - 1], VertexRef{p, i}));
            auto [it, fresh] = first_with.emplace(signature, i);
            if (!fresh)
                return detail::make_vertex_witness(g, labeling, VertexRef{p, it->second},
                                                   VertexRef{p, i});
            AxisSubspace s;
            s.free_axes = labeling.free_set(p);
            s.fixed.reserve(fixed_axes.size());
            for (std::size_t t = 0; t < fixed_axes.size(); ++t)
                s.fixed.emplace_back(fixed_axes[t], signature[t]);
            subspaces[p].push_back(std::move(s));
        }
    }

    // Points; a collision is a non-separable edge pair.
    std::vector<std::vector<long long>> points(g.edge_count(),
                                               std::vector<long long>(labeling.d));
    std::map<std::vector<long long>, int> first_point;
    for (int e = 0; e < g.edge_count(); ++e) {
        for (int axis = 1; axis <= labeling.d; ++axis)
            points[e][axis - 1] = partitions[axis - 1].component_of[e];
        auto [it, fresh] = first_point.emplace(points[e], e);
        if (!fresh)
            return detail::make_edge_witness(g, labeling, EdgeRef{it->second}, EdgeRef{e});
    }

    Representation rep;
    rep.d = labeling.d;
    rep.ell = labeling.ell;
    rep.labeling = labeling;
    rep.points = std::move(points);
    rep.subspaces = std::move(subspaces);
    return rep;
}

// ════════════════════════════════════════════════════════════════════
//  Verification
// ════════════════════════════════════════════════════════════════════

/// Check a representation against its hypergraph: distinct points,
/// distinct subspaces, exact incidence, and no spurious incidence.
/// The diagnostic names the first violated invariant and offending pair.
inline VerifyResult verify_representation(const PartitionedHypergraph& g,
                                          const Representation& rep) {
    const int m = g.edge_count();
    if (static_cast<int>(rep.points.size()) != m ||
        static_cast<int>(rep.subspaces.size()) != g.part_count())
        throw validation_error("representation does not cover the hypergraph's index sets");
    if (rep.labeling.part_count() != g.part_count() || rep.labeling.d != rep.d ||
        rep.labeling.ell != rep.ell)
        throw validation_error("representation labeling is inconsistent");
    for (int p = 0; p < g.part_count(); ++p)
        if (static_cast<int>(rep.subspaces[p].size()) != g.part_size(p))
            throw validation_error("representation does not cover the hypergraph's index sets");
    for (const auto& pt : rep.points)
        if (static_cast<int>(pt.size()) != rep.d)
            throw validation_error("point dimension does not match d");

    auto edge_label = [](int e) { return "e" + std::to_string(e); };

    // Points pairwise distinct.
    {
        std::map<std::vector<long long>, int> seen;
        for (int e = 0; e < m; ++e) {
            auto [it, fresh] = seen.emplace(rep.points[e], e);
            if (!fresh)
                return {false, "points not distinct: " + edge_label(it->second) + " vs " +
                                       edge_label(e)};
        }
    }

    // Subspaces pairwise distinct within each part (distinct free sets
    // keep parts apart from one another).
    for (int p = 0; p < g.part_count(); ++p) {
        std::map<std::vector<std::pair<int, long long>>, int> seen;
        for (int i = 0; i < g.part_size(p); ++i) {
            const AxisSubspace& s = rep.subspaces[p][i];
            if (s.free_axes != rep.labeling.free_set(p))
                return {false, "subspace free set disagrees with labeling: " +
                                       g.vertex_name(VertexRef{p, i})};
            std::vector<int> expected_fixed = rep.labeling.fixed_axes(p);
            if (s.fixed.size() != expected_fixed.size())
                return {false, "subspace fixes wrong coordinates: " +
                                       g.vertex_name(VertexRef{p, i})};
            for (std::size_t t = 0; t < expected_fixed.size(); ++t)
                if (s.fixed[t].first != expected_fixed[t])
                    return {false, "subspace fixes wrong coordinates: " +
                                           g.vertex_name(VertexRef{p, i})};
            auto [it, fresh] = seen.emplace(s.fixed, i);
            if (!fresh)
                return {false, "subspaces not distinct: " +
                                       g.vertex_name(VertexRef{p, it->second}) + " vs " +
                                       g.vertex_name(VertexRef{p, i})};
        }
    }

    // Incidence: each edge's point agrees with each member subspace on
    // every fixed coordinate.
    for (int e = 0; e < m; ++e) {
        for (int p = 0; p < g.part_count(); ++p) {
            VertexRef v = g.edge_vertex(EdgeRef{e}, p);
            if (!rep.subspace_of(v).contains(rep.points[e]))
                return {false, "incidence violated: point " + edge_label(e) +
                                       " misses subspace " + g.vertex_name(v)};
        }
    }

    // No spurious incidence: within a part, the only subspace through an
    // edge's point is the edge's own member.
    for (int p = 0; p < g.part_count(); ++p) {
        std::map<std::vector<long long>, int> by_fixed;
        for (int i = 0; i < g.part_size(p); ++i) {
            std::vector<long long> key;
            key.reserve(rep.subspaces[p][i].fixed.size());
            for (auto [axis, value] : rep.subspaces[p][i].fixed) key.push_back(value);
            by_fixed.emplace(std::move(key), i);
        }
        const std::vector<int> fixed_axes = rep.labeling.fixed_axes(p);
        for (int e = 0; e < m; ++e) {
            std::vector<long long> proj;
            proj.reserve(fixed_axes.size());
            for (int axis : fixed_axes) proj.push_back(rep.points[e][axis - 1]);
            auto it = by_fixed.find(proj);
            const int member = g.edge_members(EdgeRef{e})[p];
            if (it != by_fixed.end() && it->second != member)
                return {false, "spurious incidence: point " + edge_label(e) +
                                       " lies in subspace " +
                                       g.vertex_name(VertexRef{p, it->second})};
        }
    }

    return {true, ""};
}

// ════════════════════════════════════════════════════════════════════
//  Hypergraph induced by a point set
// ════════════════════════════════════════════════════════════════════

struct FromPointsResult {
    PartitionedHypergraph hypergraph;
    PartLabeling labeling;
    Representation representation;  // the identity representation over the input
};

/// The hypergraph covered by a finite point set: one hyperedge per point,
/// one vertex per distinct axis-aligned ell-subspace through at least one
/// point. Vertex names are "s<free axes>_<index>" in first-appearance
/// order; parts follow the canonical labeling.
inline FromPointsResult hypergraph_from_points(const std::vector<std::vector<long long>>& pts,
                                               int ell) {
    if (pts.empty()) throw validation_error("point set is empty");
    const int d = static_cast<int>(pts[0].size());
    if (d < 2) throw validation_error("points must have dimension >= 2");
    if (d > 9) throw validation_error("dimension above 9 is not supported");
    if (ell < 1 || ell > d - 1) throw validation_error("ell must satisfy 1 <= ell <= d-1");
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != d)
            throw validation_error("points have mixed dimensions");
    {
        std::map<std::vector<long long>, int> seen;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (!seen.emplace(pts[i], static_cast<int>(i)).second)
                throw validation_error("duplicate point at position " + std::to_string(i));
    }

    PartLabeling labeling = PartLabeling::canonical(d, ell);
    const int k = labeling.part_count();

    std::vector<std::vector<std::string>> part_names(k);
    std::vector<std::vector<std::string>> edge_names(pts.size(), std::vector<std::string>(k));
    std::vector<std::vector<AxisSubspace>> subspaces(k);

    for (int p = 0; p < k; ++p) {
        const std::vector<int> fixed_axes = labeling.fixed_axes(p);
        std::string prefix = "s";
        for (int axis : labeling.free_set(p)) prefix += std::to_string(axis);
        std::map<std::vector<long long>, int> ids;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<long long> key;
            key.reserve(fixed_axes.size());
            for (int axis : fixed_axes) key.push_back(pts[i][axis - 1]);
            auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
            if (fresh) {
                part_names[p].push_back(prefix + "_" + std::to_string(it->second));
                AxisSubspace s;
                s.free_axes = labeling.free_set(p);
                for (std::size_t t = 0; t < fixed_axes.size(); ++t)
                    s.fixed.emplace_back(fixed_axes[t], key[t]);
                subspaces[p].push_back(std::move(s));
            }
            edge_names[i][p] = part_names[p][it->second];
        }
    }

    FromPointsResult out{PartitionedHypergraph::create(std::move(part_names), edge_names),
                         labeling,
                         Representation{}};
    out.representation.d = d;
    out.representation.ell = ell;
    out.representation.labeling = labeling;
    out.representation.points = pts;
    out.representation.subspaces = std::move(subspaces);
    return out;
}

// ════════════════════════════════════════════════════════════════════
//  Recognition
// ════════════════════════════════════════════════════════════════════

enum class LabelingMode { fixed, enumerate_all };

struct RecognitionResult {
    std::optional<PartLabeling> labeling;
    std::optional<Representation> representation;
    std::optional<SeparabilityWitness> witness;  // from the first labeling tried

    bool success() const { return representation.has_value(); }
};

/// Decide whether the hypergraph has a (d, ell) representation and build
/// one if so. Fixed mode runs the construction once under the given (or,
/// for ell in {1, d-1}, canonical) labeling. Enumerate mode tries every
/// bijection of parts onto axis subsets in lexicographic order of the
/// induced assignment and returns the first success; for ell in {1, d-1}
/// all labelings are equivalent under permuting coordinates, so only the
/// canonical one is tried.
inline RecognitionResult recognize(const PartitionedHypergraph& g, int d, int ell,
                                   LabelingMode mode,
                                   const std::optional<PartLabeling>& given = std::nullopt) {
    if (d < 2 || ell < 1 || ell > d - 1)
        throw validation_error("recognition requires d >= 2 and 1 <= ell <= d-1");
    const long long k = binomial(d, ell);
    if (k != g.part_count())
        throw validation_error("part count " + std::to_string(g.part_count()) +
                               " does not match C(d, ell) = " + std::to_string(k));
    if (given && (given->d != d || given->ell != ell))
        throw validation_error("supplied labeling disagrees with d/ell");

    RecognitionResult result;
    auto attempt = [&](const PartLabeling& lab) -> bool {
        ConstructResult r = construct_representation(g, lab);
        if (auto* rep = std::get_if<Representation>(&r)) {
            result.labeling = lab;
            result.representation = std::move(*rep);
            return true;
        }
        if (!result.witness) result.witness = std::get<SeparabilityWitness>(std::move(r));
        return false;
    };

    const bool symmetric = (ell == 1 || ell == d - 1);
    if (mode == LabelingMode::fixed || symmetric) {
        PartLabeling lab = given ? *given
                                 : (symmetric ? PartLabeling::canonical(d, ell)
                                              : throw validation_error(
                                                        "fixed mode requires a labeling for "
                                                        "1 < ell < d-1"));
        attempt(lab);
        return result;
    }

    // Enumerate: assignment[p] = index of the axis subset given to part p.
    const auto subsets = all_axis_subsets(d, ell);
    std::vector<int> assignment(static_cast<std::size_t>(k));
    std::iota(assignment.begin(), assignment.end(), 0);
    do {
        std::vector<std::vector<int>> sets(assignment.size());
        for (std::size_t p = 0; p < assignment.size(); ++p) sets[p] = subsets[assignment[p]];
        if (attempt(PartLabeling::from_free_sets(d, ell, std::move(sets)))) return result;
    } while (std::next_permutation(assignment.begin(), assignment.end()));
    return result;
}

}  // namespace axisrep
