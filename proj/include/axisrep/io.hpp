#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "axisrep/hypergraph.hpp"
#include "axisrep/labeling.hpp"
#include "axisrep/projection.hpp"
#include "axisrep/reduction.hpp"
#include "axisrep/representation.hpp"
#include "axisrep/separability.hpp"

namespace axisrep {

/// Raised for malformed documents (bad JSON, missing or mistyped fields).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

using json = nlohmann::json;

inline json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

inline const json& field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) throw parse_error(std::string("missing field \"") + name + "\"");
    return *it;
}

inline int parse_index_key(const std::string& key, char prefix, const char* what) {
    if (key.size() < 2 || key[0] != prefix ||
        key.find_first_not_of("0123456789", 1) != std::string::npos)
        throw parse_error(std::string("bad ") + what + " key \"" + key + "\"");
    return std::stoi(key.substr(1));
}

inline int parse_axis_key(const std::string& key) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("bad axis key \"" + key + "\"");
    return std::stoi(key);
}

inline std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace detail

// ════════════════════════════════════════════════════════════════════
//  Hypergraph documents
// ════════════════════════════════════════════════════════════════════

struct ParseOptions {
    bool prune_isolated = false;
};

struct ParsedHypergraph {
    PartitionedHypergraph graph;
    std::optional<PartLabeling> labeling;
    std::vector<std::string> warnings;
};

/// {"k": 3, "parts": [[names]...], "edges": [[names]...], "labeling": null | [[axes]...]}
inline ParsedHypergraph parse_hypergraph(std::string_view text, ParseOptions opts = {}) {
    using detail::json;
    json doc = detail::parse_json(text);
    try {
        const int k = detail::field(doc, "k").get<int>();
        auto parts = detail::field(doc, "parts").get<std::vector<std::vector<std::string>>>();
        auto edges = detail::field(doc, "edges").get<std::vector<std::vector<std::string>>>();
        if (k != static_cast<int>(parts.size()))
            throw parse_error("field \"k\" = " + std::to_string(k) + " but " +
                              std::to_string(parts.size()) + " parts given");

        ParsedHypergraph out;
        out.graph = PartitionedHypergraph::create(std::move(parts), edges,
                                                  opts.prune_isolated, &out.warnings);

        const json lab = doc.contains("labeling") ? doc["labeling"] : json(nullptr);
        if (!lab.is_null()) {
            auto sets = lab.get<std::vector<std::vector<int>>>();
            if (sets.empty() || sets[0].empty())
                throw parse_error("labeling must be null or a list of nonempty axis lists");
            int d = 0;
            for (const auto& s : sets)
                for (int a : s) d = std::max(d, a);
            const int ell = static_cast<int>(sets[0].size());
            try {
                out.labeling = PartLabeling::from_free_sets(d, ell, std::move(sets));
            } catch (const validation_error& e) {
                throw parse_error(std::string("bad labeling: ") + e.what());
            }
            if (out.labeling->part_count() != out.graph.part_count())
                throw parse_error("labeling part count differs from hypergraph");
        }
        return out;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad hypergraph document: ") + e.what());
    }
}

inline std::string serialize_hypergraph(const PartitionedHypergraph& g,
                                        const std::optional<PartLabeling>& labeling = {}) {
    using detail::json;
    json doc;
    doc["k"] = g.part_count();
    doc["parts"] = g.parts();
    json edges = json::array();
    for (int e = 0; e < g.edge_count(); ++e) edges.push_back(g.edge_vertex_names(EdgeRef{e}));
    doc["edges"] = std::move(edges);
    doc["labeling"] = labeling ? json(labeling->free_sets) : json(nullptr);
    return detail::dump(doc);
}

// ════════════════════════════════════════════════════════════════════
//  Point sets
// ════════════════════════════════════════════════════════════════════

struct PointSetDoc {
    int d = 0;
    int ell = 1;
    std::vector<std::vector<long long>> points;
};

/// {"d": 3, "ell": 1, "points": [[x, y, z], ...]}
inline PointSetDoc parse_point_set(std::string_view text) {
    using detail::json;
    json doc = detail::parse_json(text);
    try {
        PointSetDoc out;
        out.d = detail::field(doc, "d").get<int>();
        out.ell = detail::field(doc, "ell").get<int>();
        out.points = detail::field(doc, "points").get<std::vector<std::vector<long long>>>();
        for (const auto& p : out.points)
            if (static_cast<int>(p.size()) != out.d)
                throw parse_error("point dimension differs from \"d\"");
        return out;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad point-set document: ") + e.what());
    }
}

inline std::string serialize_point_set(const PointSetDoc& doc) {
    using detail::json;
    json j;
    j["d"] = doc.d;
    j["ell"] = doc.ell;
    j["points"] = doc.points;
    return detail::dump(j);
}

// ════════════════════════════════════════════════════════════════════
//  Representations
// ════════════════════════════════════════════════════════════════════

/// {"d":3, "ell":1, "labeling":[[1],[2],[3]],
///  "points":{"e0":[1,1,1], ...},
///  "subspaces":{"b1":{"free":[2],"fixed":{"1":1,"3":1}}, ...}}
inline std::string serialize_representation(const Representation& rep,
                                            const PartitionedHypergraph& g) {
    using detail::json;
    json doc;
    doc["d"] = rep.d;
    doc["ell"] = rep.ell;
    doc["labeling"] = rep.labeling.free_sets;
    json points = json::object();
    for (std::size_t e = 0; e < rep.points.size(); ++e)
        points["e" + std::to_string(e)] = rep.points[e];
    doc["points"] = std::move(points);
    json subs = json::object();
    for (int p = 0; p < g.part_count(); ++p) {
        for (int i = 0; i < g.part_size(p); ++i) {
            const AxisSubspace& s = rep.subspaces[p][i];
            json entry;
            entry["free"] = s.free_axes;
            json fixed = json::object();
            for (auto [axis, value] : s.fixed) fixed[std::to_string(axis)] = value;
            entry["fixed"] = std::move(fixed);
            subs[g.vertex_name(VertexRef{p, i})] = std::move(entry);
        }
    }
    doc["subspaces"] = std::move(subs);
    return detail::dump(doc);
}

inline Representation parse_representation(std::string_view text,
                                           const PartitionedHypergraph& g) {
    using detail::json;
    json doc = detail::parse_json(text);
    try {
        Representation rep;
        rep.d = detail::field(doc, "d").get<int>();
        rep.ell = detail::field(doc, "ell").get<int>();
        rep.labeling = PartLabeling::from_free_sets(
                rep.d, rep.ell,
                detail::field(doc, "labeling").get<std::vector<std::vector<int>>>());
        if (rep.labeling.part_count() != g.part_count())
            throw parse_error("labeling part count differs from hypergraph");

        const json& points = detail::field(doc, "points");
        if (static_cast<int>(points.size()) != g.edge_count())
            throw parse_error("representation covers a different edge set");
        rep.points.assign(g.edge_count(), {});
        for (auto it = points.begin(); it != points.end(); ++it) {
            int e = detail::parse_index_key(it.key(), 'e', "edge");
            if (e < 0 || e >= g.edge_count())
                throw parse_error("edge key out of range \"" + it.key() + "\"");
            rep.points[e] = it->get<std::vector<long long>>();
        }

        const json& subs = detail::field(doc, "subspaces");
        if (static_cast<int>(subs.size()) != g.vertex_count())
            throw parse_error("representation covers a different vertex set");
        rep.subspaces.resize(g.part_count());
        for (int p = 0; p < g.part_count(); ++p)
            rep.subspaces[p].resize(g.part_size(p));
        std::vector<std::vector<char>> filled(g.part_count());
        for (int p = 0; p < g.part_count(); ++p) filled[p].assign(g.part_size(p), 0);
        for (auto it = subs.begin(); it != subs.end(); ++it) {
            auto ref = g.find_vertex(it.key());
            if (!ref) throw parse_error("subspace for unknown vertex \"" + it.key() + "\"");
            AxisSubspace s;
            s.free_axes = detail::field(*it, "free").get<std::vector<int>>();
            for (auto fit = detail::field(*it, "fixed").begin();
                 fit != detail::field(*it, "fixed").end(); ++fit)
                s.fixed.emplace_back(detail::parse_axis_key(fit.key()),
                                     fit->get<long long>());
            std::sort(s.fixed.begin(), s.fixed.end());
            rep.subspaces[ref->part][ref->index] = std::move(s);
            filled[ref->part][ref->index] = 1;
        }
        for (int p = 0; p < g.part_count(); ++p)
            for (int i = 0; i < g.part_size(p); ++i)
                if (!filled[p][i])
                    throw parse_error("missing subspace for vertex \"" +
                                      g.vertex_name(VertexRef{p, i}) + "\"");
        return rep;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad representation document: ") + e.what());
    }
}

// ════════════════════════════════════════════════════════════════════
//  Witnesses
// ════════════════════════════════════════════════════════════════════

/// {"kind":"vertex","pair":["b1","b2"],"avoiding_paths":{"1":["b1","c1","b2"], ...}}
inline std::string serialize_witness(const SeparabilityWitness& w) {
    using detail::json;
    json doc;
    doc["kind"] = (w.kind == SeparabilityWitness::Kind::vertex_pair) ? "vertex" : "edge";
    doc["pair"] = {w.pair[0], w.pair[1]};
    json paths = json::object();
    for (const auto& [axis, path] : w.avoiding_paths) paths[std::to_string(axis)] = path;
    doc["avoiding_paths"] = std::move(paths);
    return detail::dump(doc);
}

// ════════════════════════════════════════════════════════════════════
//  Simple graphs and gadget instances
// ════════════════════════════════════════════════════════════════════

/// {"n": 3, "edges": [[0,1],[1,2],[0,2]]}
inline SimpleGraph parse_simple_graph(std::string_view text) {
    using detail::json;
    json doc = detail::parse_json(text);
    try {
        const int n = detail::field(doc, "n").get<int>();
        auto edges = detail::field(doc, "edges").get<std::vector<std::pair<int, int>>>();
        return SimpleGraph::create(n, std::move(edges));
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad graph document: ") + e.what());
    }
}

inline std::string serialize_simple_graph(const SimpleGraph& g) {
    using detail::json;
    json doc;
    doc["n"] = g.n;
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    doc["edges"] = std::move(edges);
    return detail::dump(doc);
}

/// Point-set document plus a role per point:
/// {"d":3,"ell":1,"points":[...],"roles":[{"type":"A","owner":"v0"}, ...]}
inline std::string serialize_gadget_instance(const GadgetInstance& g) {
    using detail::json;
    json doc;
    doc["d"] = 3;
    doc["ell"] = 1;
    json points = json::array();
    json roles = json::array();
    for (const auto& p : g.points) {
        points.push_back(json::array({p.coords[0], p.coords[1], p.coords[2]}));
        json r;
        r["type"] = p.role == PointRole::type_a ? "A"
                    : p.role == PointRole::type_b ? "B"
                                                  : "inner";
        r["owner"] = (p.owner_is_edge ? "e" : "v") + std::to_string(p.owner);
        roles.push_back(std::move(r));
    }
    doc["points"] = std::move(points);
    doc["roles"] = std::move(roles);
    return detail::dump(doc);
}

// ════════════════════════════════════════════════════════════════════
//  Planar instances
// ════════════════════════════════════════════════════════════════════

/// {"points":[[x,y],...],"lines":[{"dir":[dx,dy],"through":[x,y],"class":c},...]}
inline std::string serialize_planar_instance(const PlanarInstance& inst) {
    using detail::json;
    json doc;
    json points = json::array();
    for (const auto& p : inst.points) points.push_back(json::array({p[0], p[1]}));
    doc["points"] = std::move(points);
    json lines = json::array();
    for (const auto& l : inst.lines) {
        json entry;
        entry["dir"] = json::array({l.direction[0], l.direction[1]});
        entry["through"] = json::array({l.through[0], l.through[1]});
        entry["class"] = l.direction_class;
        lines.push_back(std::move(entry));
    }
    doc["lines"] = std::move(lines);
    return detail::dump(doc);
}

inline PlanarInstance parse_planar_instance(std::string_view text) {
    using detail::json;
    json doc = detail::parse_json(text);
    try {
        PlanarInstance inst;
        for (const auto& p : detail::field(doc, "points"))
            inst.points.push_back({p.at(0).get<long long>(), p.at(1).get<long long>()});
        int max_class = 0;
        for (const auto& l : detail::field(doc, "lines")) {
            PlanarLine line;
            line.direction = {detail::field(l, "dir").at(0).get<long long>(),
                              detail::field(l, "dir").at(1).get<long long>()};
            line.through = {detail::field(l, "through").at(0).get<long long>(),
                            detail::field(l, "through").at(1).get<long long>()};
            line.direction_class = detail::field(l, "class").get<int>();
            max_class = std::max(max_class, line.direction_class);
            inst.lines.push_back(line);
        }
        inst.direction_count = max_class;
        return inst;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad planar document: ") + e.what());
    }
}

}  // namespace axisrep
