#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace axisrep {

/// Raised when an input document or in-memory structure violates a model
/// invariant (bad arity, duplicate names, isolated vertices, ...).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Outcome of a structural check; on failure the diagnostic names the
/// first violated invariant and the offending objects.
struct VerifyResult {
    bool ok = false;
    std::string diagnostic;
};

/// A vertex is addressed by its part and its position inside that part.
struct VertexRef {
    int part = 0;
    int index = 0;
    friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

struct EdgeRef {
    int index = 0;
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend bool operator<(EdgeRef a, EdgeRef b) { return a.index < b.index; }
};

// ════════════════════════════════════════════════════════════════════
//  PartitionedHypergraph
// ════════════════════════════════════════════════════════════════════

/// k-partite, k-uniform hypergraph with named vertices.
///
/// Vertices are grouped into k disjoint parts; every hyperedge contains
/// exactly one vertex of each part, position i being drawn from part i.
/// Enforced invariants:
///   - vertex names are globally unique,
///   - every vertex occurs in at least one hyperedge,
///   - no two hyperedges are equal as vertex sets.
///
/// Instances are immutable after construction; all queries are const and
/// safe to call concurrently on a shared instance.
class PartitionedHypergraph {
public:
    PartitionedHypergraph() = default;

    /// Build and validate a hypergraph from named parts and edges.
    /// With `prune_isolated`, vertices contained in no hyperedge are
    /// dropped (one warning each) instead of rejected.
    static PartitionedHypergraph create(std::vector<std::vector<std::string>> parts,
                                        const std::vector<std::vector<std::string>>& edge_names,
                                        bool prune_isolated = false,
                                        std::vector<std::string>* warnings = nullptr) {
        PartitionedHypergraph g;
        g.parts_ = std::move(parts);
        const int k = static_cast<int>(g.parts_.size());
        if (k < 1) throw validation_error("hypergraph needs at least one part");

        g.index_names();

        std::unordered_map<std::vector<int>, char, EdgeKeyHash> seen_edges;
        g.edges_.reserve(edge_names.size());
        for (std::size_t e = 0; e < edge_names.size(); ++e) {
            g.edges_.push_back(g.resolve_edge(edge_names[e], e));
            if (!seen_edges.emplace(g.edges_.back(), 1).second)
                throw validation_error("duplicate hyperedge at position " + std::to_string(e));
        }

        // Isolated vertices: prune or reject.
        std::vector<std::vector<char>> used(k);
        for (int p = 0; p < k; ++p) used[p].assign(g.parts_[p].size(), 0);
        for (const auto& edge : g.edges_)
            for (int p = 0; p < k; ++p) used[p][edge[p]] = 1;
        bool any_isolated = false;
        for (int p = 0; p < k && !any_isolated; ++p)
            any_isolated = std::find(used[p].begin(), used[p].end(), 0) != used[p].end();

        if (any_isolated) {
            if (!prune_isolated) {
                for (int p = 0; p < k; ++p)
                    for (std::size_t i = 0; i < used[p].size(); ++i)
                        if (!used[p][i])
                            throw validation_error("vertex \"" + g.parts_[p][i] +
                                                   "\" appears in no hyperedge");
            }
            std::vector<std::vector<std::string>> kept(k);
            for (int p = 0; p < k; ++p)
                for (std::size_t i = 0; i < used[p].size(); ++i) {
                    if (used[p][i]) {
                        kept[p].push_back(g.parts_[p][i]);
                    } else if (warnings) {
                        warnings->push_back("pruned isolated vertex \"" + g.parts_[p][i] + "\"");
                    }
                }
            return create(std::move(kept), edge_names, false, warnings);
        }

        g.build_incidence();
        return g;
    }

    int part_count() const { return static_cast<int>(parts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return total_vertices_; }
    int part_size(int part) const { return static_cast<int>(parts_.at(part).size()); }

    const std::vector<std::vector<std::string>>& parts() const { return parts_; }

    const std::string& vertex_name(VertexRef v) const {
        check(v);
        return parts_[v.part][v.index];
    }

    std::optional<VertexRef> find_vertex(std::string_view name) const {
        auto it = by_name_.find(std::string(name));
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    /// Member of edge `e` that lies in `part`.
    VertexRef edge_vertex(EdgeRef e, int part) const {
        check(e);
        if (part < 0 || part >= part_count()) throw std::invalid_argument("part out of range");
        return VertexRef{part, edges_[e.index][part]};
    }

    /// Edge as per-part vertex indices.
    const std::vector<int>& edge_members(EdgeRef e) const {
        check(e);
        return edges_[e.index];
    }

    bool edge_contains(EdgeRef e, VertexRef v) const {
        check(e);
        check(v);
        return edges_[e.index][v.part] == v.index;
    }

    /// All hyperedges containing `v`, ascending by edge index. Nonempty.
    const std::vector<EdgeRef>& edges_of(VertexRef v) const {
        check(v);
        return incidence_[v.part][v.index];
    }

    std::vector<std::string> edge_vertex_names(EdgeRef e) const {
        check(e);
        std::vector<std::string> out;
        out.reserve(parts_.size());
        for (int p = 0; p < part_count(); ++p) out.push_back(parts_[p][edges_[e.index][p]]);
        return out;
    }

    /// True iff an s-t path exists whose vertices all avoid the forbidden
    /// parts. Consecutive path vertices must share a hyperedge. s and t
    /// themselves must not lie in a forbidden part.
    bool path_exists(VertexRef s, VertexRef t, const std::vector<int>& forbidden_parts) const {
        return find_vertex_path(s, t, forbidden_parts).has_value();
    }

    /// Shortest s-t path avoiding the forbidden parts, if one exists.
    std::optional<std::vector<VertexRef>> find_vertex_path(
            VertexRef s, VertexRef t, const std::vector<int>& forbidden_parts) const {
        check(s);
        check(t);
        std::vector<char> blocked = blocked_parts(forbidden_parts);
        if (blocked[s.part] || blocked[t.part])
            throw std::invalid_argument("path endpoint lies in a forbidden part");
        return bfs(std::vector<int>{flat(s)}, std::vector<int>{flat(t)}, blocked);
    }

    /// Shortest path from a vertex of `a` to a vertex of `b`, all path
    /// vertices avoiding the forbidden parts. May be a single vertex when
    /// the edges share one outside the forbidden parts.
    std::optional<std::vector<VertexRef>> find_edge_path(
            EdgeRef a, EdgeRef b, const std::vector<int>& forbidden_parts) const {
        check(a);
        check(b);
        std::vector<char> blocked = blocked_parts(forbidden_parts);
        std::vector<int> sources, targets;
        for (int p = 0; p < part_count(); ++p) {
            if (blocked[p]) continue;
            sources.push_back(flat(VertexRef{p, edges_[a.index][p]}));
            targets.push_back(flat(VertexRef{p, edges_[b.index][p]}));
        }
        if (sources.empty() || targets.empty()) return std::nullopt;
        return bfs(sources, targets, blocked);
    }

    friend bool operator==(const PartitionedHypergraph& a, const PartitionedHypergraph& b) {
        return a.parts_ == b.parts_ && a.edges_ == b.edges_;
    }

private:
    struct EdgeKeyHash {
        std::size_t operator()(const std::vector<int>& e) const {
            std::size_t h = 1469598103934665603ull;
            for (int x : e) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    void index_names() {
        by_name_.clear();
        offsets_.assign(parts_.size() + 1, 0);
        for (std::size_t p = 0; p < parts_.size(); ++p) {
            offsets_[p + 1] = offsets_[p] + static_cast<int>(parts_[p].size());
            for (std::size_t i = 0; i < parts_[p].size(); ++i) {
                const std::string& name = parts_[p][i];
                auto [it, fresh] = by_name_.emplace(
                        name, VertexRef{static_cast<int>(p), static_cast<int>(i)});
                if (!fresh)
                    throw validation_error("duplicate vertex name \"" + name + "\"");
            }
        }
        total_vertices_ = offsets_.back();
    }

    std::vector<int> resolve_edge(const std::vector<std::string>& names, std::size_t e) const {
        const int k = part_count();
        const std::string where = "edge " + std::to_string(e);
        if (static_cast<int>(names.size()) != k)
            throw validation_error(where + " has " + std::to_string(names.size()) +
                                   " vertices, expected " + std::to_string(k));
        std::vector<int> members(k);
        std::vector<int> per_part(k, 0);
        std::vector<VertexRef> refs(k);
        for (int p = 0; p < k; ++p) {
            auto it = by_name_.find(names[p]);
            if (it == by_name_.end())
                throw validation_error(where + ": unknown vertex \"" + names[p] + "\"");
            refs[p] = it->second;
            per_part[it->second.part] += 1;
        }
        for (int p = 0; p < k; ++p)
            if (per_part[p] > 1)
                throw validation_error(where + " has two vertices from part " +
                                       std::to_string(p + 1));
        for (int p = 0; p < k; ++p) {
            if (refs[p].part != p)
                throw validation_error(where + " position " + std::to_string(p + 1) +
                                       ": vertex \"" + names[p] + "\" belongs to part " +
                                       std::to_string(refs[p].part + 1));
            members[p] = refs[p].index;
        }
        return members;
    }

    void build_incidence() {
        incidence_.assign(parts_.size(), {});
        for (std::size_t p = 0; p < parts_.size(); ++p) incidence_[p].resize(parts_[p].size());
        for (std::size_t e = 0; e < edges_.size(); ++e)
            for (std::size_t p = 0; p < parts_.size(); ++p)
                incidence_[p][edges_[e][p]].push_back(EdgeRef{static_cast<int>(e)});
    }

    std::vector<char> blocked_parts(const std::vector<int>& forbidden) const {
        std::vector<char> blocked(parts_.size(), 0);
        for (int p : forbidden) {
            if (p < 0 || p >= part_count())
                throw std::invalid_argument("forbidden part out of range");
            blocked[p] = 1;
        }
        return blocked;
    }

    int flat(VertexRef v) const { return offsets_[v.part] + v.index; }

    VertexRef unflat(int id) const {
        int p = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), id) -
                                 offsets_.begin()) - 1;
        return VertexRef{p, id - offsets_[p]};
    }

    std::optional<std::vector<VertexRef>> bfs(const std::vector<int>& sources,
                                              const std::vector<int>& targets,
                                              const std::vector<char>& blocked) const {
        std::vector<char> target_flag(total_vertices_, 0);
        for (int t : targets) target_flag[t] = 1;
        std::vector<int> parent(total_vertices_, -2);  // -2 unseen, -1 root
        std::vector<char> edge_done(edges_.size(), 0);
        std::deque<int> queue;
        for (int s : sources) {
            if (parent[s] != -2) continue;
            parent[s] = -1;
            if (target_flag[s]) return reconstruct(parent, s);
            queue.push_back(s);
        }
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            VertexRef vr = unflat(v);
            for (EdgeRef e : incidence_[vr.part][vr.index]) {
                if (edge_done[e.index]) continue;
                edge_done[e.index] = 1;
                for (int p = 0; p < part_count(); ++p) {
                    if (blocked[p]) continue;
                    int u = flat(VertexRef{p, edges_[e.index][p]});
                    if (parent[u] != -2) continue;
                    parent[u] = v;
                    if (target_flag[u]) return reconstruct(parent, u);
                    queue.push_back(u);
                }
            }
        }
        return std::nullopt;
    }

    std::optional<std::vector<VertexRef>> reconstruct(const std::vector<int>& parent,
                                                      int last) const {
        std::vector<VertexRef> path;
        for (int v = last; v != -1; v = parent[v]) path.push_back(unflat(v));
        std::reverse(path.begin(), path.end());
        return path;
    }

    void check(VertexRef v) const {
        if (v.part < 0 || v.part >= part_count() || v.index < 0 ||
            v.index >= static_cast<int>(parts_[v.part].size()))
            throw std::invalid_argument("vertex reference out of range");
    }

    void check(EdgeRef e) const {
        if (e.index < 0 || e.index >= edge_count())
            throw std::invalid_argument("edge reference out of range");
    }

    std::vector<std::vector<std::string>> parts_;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<std::vector<EdgeRef>>> incidence_;
    std::unordered_map<std::string, VertexRef> by_name_;
    std::vector<int> offsets_;
    int total_vertices_ = 0;
};

}  // namespace axisrep
