#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "axisrep/hypergraph.hpp"
#include "axisrep/labeling.hpp"

namespace axisrep {

namespace detail {

struct DisjointSet {
    std::vector<int> parent;
    std::vector<int> size;

    explicit DisjointSet(int n) : parent(n), size(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    int find(int x) {
        int root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) {
            int next = parent[x];
            parent[x] = root;
            x = next;
        }
        return root;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

}  // namespace detail

// ════════════════════════════════════════════════════════════════════
//  Component graphs
// ════════════════════════════════════════════════════════════════════

/// Connected components of the auxiliary graph on hyperedges for one axis:
/// two hyperedges are adjacent when they share a vertex whose part's free
/// set does not contain the axis. Component ids are 1..component_count,
/// numbered by the smallest edge index each component contains.
struct ComponentPartition {
    int axis = 0;                   // 1-based
    std::vector<int> component_of;  // per edge index
    int component_count = 0;
};

/// Build one axis' component partition without materializing edge-edge
/// adjacency: the hyperedges around each qualifying vertex form a clique,
/// so a star of unions per vertex is enough.
inline ComponentPartition build_component_partition(const PartitionedHypergraph& g,
                                                    const PartLabeling& labeling,
                                                    int axis) {
    if (labeling.part_count() != g.part_count())
        throw validation_error("labeling part count does not match hypergraph");
    if (axis < 1 || axis > labeling.d)
        throw std::invalid_argument("axis out of range 1..d");

    const int m = g.edge_count();
    detail::DisjointSet forest(m);
    for (int p = 0; p < g.part_count(); ++p) {
        if (labeling.is_free(p, axis)) continue;
        for (int i = 0; i < g.part_size(p); ++i) {
            const auto& inc = g.edges_of(VertexRef{p, i});
            for (std::size_t t = 1; t < inc.size(); ++t)
                forest.unite(inc[0].index, inc[t].index);
        }
    }

    ComponentPartition out;
    out.axis = axis;
    out.component_of.assign(m, 0);
    std::vector<int> id_of_root(m, 0);
    for (int e = 0; e < m; ++e) {
        int root = forest.find(e);
        if (id_of_root[root] == 0) id_of_root[root] = ++out.component_count;
        out.component_of[e] = id_of_root[root];
    }
    return out;
}

inline std::vector<ComponentPartition> build_all_component_partitions(
        const PartitionedHypergraph& g, const PartLabeling& labeling) {
    std::vector<ComponentPartition> out;
    out.reserve(labeling.d);
    for (int axis = 1; axis <= labeling.d; ++axis)
        out.push_back(build_component_partition(g, labeling, axis));
    return out;
}

// ════════════════════════════════════════════════════════════════════
//  Separability predicates and witnesses
// ════════════════════════════════════════════════════════════════════

/// Certificate that a pair is NOT separable: for each candidate cut axis,
/// one concrete path that avoids every part sharing that axis.
struct SeparabilityWitness {
    enum class Kind { vertex_pair, edge_pair };
    Kind kind = Kind::vertex_pair;
    std::array<std::string, 2> pair;  // vertex names, or edge labels "e<i>"
    std::vector<std::pair<int, std::vector<std::string>>> avoiding_paths;  // axis -> path
};

struct SeparabilityResult {
    bool separable = false;
    std::optional<SeparabilityWitness> witness;  // present iff !separable
};

namespace detail {

// Component id shared by all edges incident to v in the axis' graph;
// well defined whenever the axis is not free in v's part.
inline int vertex_component(const PartitionedHypergraph& g, const ComponentPartition& cp,
                            VertexRef v) {
    return cp.component_of[g.edges_of(v)[0].index];
}

inline std::vector<std::string> path_names(const PartitionedHypergraph& g,
                                           const std::vector<VertexRef>& path) {
    std::vector<std::string> out;
    out.reserve(path.size());
    for (VertexRef v : path) out.push_back(g.vertex_name(v));
    return out;
}

inline SeparabilityWitness make_vertex_witness(const PartitionedHypergraph& g,
                                               const PartLabeling& labeling,
                                               VertexRef v, VertexRef w) {
    SeparabilityWitness out;
    out.kind = SeparabilityWitness::Kind::vertex_pair;
    out.pair = {g.vertex_name(v), g.vertex_name(w)};
    for (int axis = 1; axis <= labeling.d; ++axis) {
        if (labeling.is_free(v.part, axis)) continue;
        auto path = g.find_vertex_path(v, w, labeling.parts_sharing_axis(axis));
        if (!path)
            throw std::logic_error("witness requested for a separable vertex pair");
        out.avoiding_paths.emplace_back(axis, path_names(g, *path));
    }
    return out;
}

inline SeparabilityWitness make_edge_witness(const PartitionedHypergraph& g,
                                             const PartLabeling& labeling,
                                             EdgeRef a, EdgeRef b) {
    SeparabilityWitness out;
    out.kind = SeparabilityWitness::Kind::edge_pair;
    out.pair = {"e" + std::to_string(a.index), "e" + std::to_string(b.index)};
    for (int axis = 1; axis <= labeling.d; ++axis) {
        auto path = g.find_edge_path(a, b, labeling.parts_sharing_axis(axis));
        if (!path)
            throw std::logic_error("witness requested for a separable edge pair");
        out.avoiding_paths.emplace_back(axis, path_names(g, *path));
    }
    return out;
}

}  // namespace detail

/// Smallest axis outside the pair's own free set whose cut disconnects
/// every edge of v from every edge of w; absent when no axis works.
/// Both vertices must lie in the same part.
inline std::optional<int> vertex_separable(const PartitionedHypergraph& g,
                                           const PartLabeling& labeling,
                                           VertexRef v, VertexRef w,
                                           const std::vector<ComponentPartition>* prebuilt =
                                                   nullptr) {
    if (v == w) throw std::invalid_argument("vertex pair must be distinct");
    if (v.part != w.part)
        throw std::invalid_argument("vertices from different parts need no separation");
    for (int axis = 1; axis <= labeling.d; ++axis) {
        if (labeling.is_free(v.part, axis)) continue;
        ComponentPartition local;
        const ComponentPartition& cp =
                prebuilt ? (*prebuilt)[axis - 1]
                         : (local = build_component_partition(g, labeling, axis));
        if (detail::vertex_component(g, cp, v) != detail::vertex_component(g, cp, w))
            return axis;
    }
    return std::nullopt;
}

/// Smallest axis whose cut disconnects the two hyperedges; absent when
/// they stay connected in every axis' component graph.
inline std::optional<int> edge_separable(const PartitionedHypergraph& g,
                                         const PartLabeling& labeling,
                                         EdgeRef a, EdgeRef b,
                                         const std::vector<ComponentPartition>* prebuilt =
                                                 nullptr) {
    if (a == b) throw std::invalid_argument("edge pair must be distinct");
    for (int axis = 1; axis <= labeling.d; ++axis) {
        ComponentPartition local;
        const ComponentPartition& cp =
                prebuilt ? (*prebuilt)[axis - 1]
                         : (local = build_component_partition(g, labeling, axis));
        if (cp.component_of[a.index] != cp.component_of[b.index]) return axis;
    }
    return std::nullopt;
}

/// Are all same-part vertex pairs separable? On failure returns a witness
/// for the first colliding pair in part/index scan order.
inline SeparabilityResult is_vertex_separable(const PartitionedHypergraph& g,
                                              const PartLabeling& labeling) {
    auto partitions = build_all_component_partitions(g, labeling);
    for (int p = 0; p < g.part_count(); ++p) {
        std::map<std::vector<int>, int> first_with;
        for (int i = 0; i < g.part_size(p); ++i) {
            std::vector<int> signature;
            signature.reserve(labeling.d - labeling.ell);
            for (int axis = 1; axis <= labeling.d; ++axis) {
                if (labeling.is_free(p, axis)) continue;
                signature.push_back(
                        detail::vertex_component(g, partitions[axis - 1], VertexRef{p, i}));
            }
            auto [it, fresh] = first_with.emplace(std::move(signature), i);
            if (!fresh) {
                return {false, detail::make_vertex_witness(g, labeling,
                                                           VertexRef{p, it->second},
                                                           VertexRef{p, i})};
            }
        }
    }
    return {true, std::nullopt};
}

/// Are all hyperedge pairs separable? Witness analogous to the vertex case.
inline SeparabilityResult is_edge_separable(const PartitionedHypergraph& g,
                                            const PartLabeling& labeling) {
    auto partitions = build_all_component_partitions(g, labeling);
    std::map<std::vector<int>, int> first_with;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<int> signature(labeling.d);
        for (int axis = 1; axis <= labeling.d; ++axis)
            signature[axis - 1] = partitions[axis - 1].component_of[e];
        auto [it, fresh] = first_with.emplace(std::move(signature), e);
        if (!fresh) {
            return {false, detail::make_edge_witness(g, labeling, EdgeRef{it->second},
                                                     EdgeRef{e})};
        }
    }
    return {true, std::nullopt};
}

}  // namespace axisrep
