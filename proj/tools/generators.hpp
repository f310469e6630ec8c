#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "axisrep/hypergraph.hpp"
#include "axisrep/labeling.hpp"

namespace axisrep::gen {

/// Seeded generator for reproducible instances. All draws go through
/// explicit modulo so outputs do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    long long below(long long n) {
        return n <= 0 ? 0 : static_cast<long long>(engine_() % static_cast<std::uint64_t>(n));
    }

    long long range(long long lo, long long hi) { return lo + below(hi - lo + 1); }

private:
    std::mt19937_64 engine_;
};

inline std::vector<std::vector<long long>> random_point_set(Rng& rng, int d, int count,
                                                            long long lo, long long hi) {
    if (d < 1 || count < 1) throw validation_error("point set needs d >= 1 and count >= 1");
    double space = 1;
    for (int a = 0; a < d; ++a) space *= static_cast<double>(hi - lo + 1);
    if (space < count) throw validation_error("coordinate range too small for distinct points");
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<long long> p(d);
        for (int a = 0; a < d; ++a) p[a] = rng.range(lo, hi);
        if (seen.insert(p).second) out.push_back(std::move(p));
    }
    return out;
}

/// Random k-hypergraph with `edge_count` distinct hyperedges over parts of
/// `part_size` candidate vertices each; vertices left in no edge are
/// pruned, so the result always satisfies the model invariants.
inline PartitionedHypergraph random_hypergraph(Rng& rng, int k, int part_size,
                                               int edge_count) {
    if (k < 1 || part_size < 1 || edge_count < 1)
        throw validation_error("generator needs positive k, part size and edge count");
    double space = 1;
    for (int p = 0; p < k; ++p) space *= part_size;
    if (space < edge_count)
        throw validation_error("part size too small for that many distinct edges");

    std::vector<std::vector<std::string>> parts(k);
    for (int p = 0; p < k; ++p)
        for (int i = 0; i < part_size; ++i)
            parts[p].push_back("p" + std::to_string(p) + "v" + std::to_string(i));

    std::set<std::vector<int>> seen;
    std::vector<std::vector<std::string>> edges;
    while (static_cast<int>(edges.size()) < edge_count) {
        std::vector<int> tuple(k);
        for (int p = 0; p < k; ++p) tuple[p] = static_cast<int>(rng.below(part_size));
        if (!seen.insert(tuple).second) continue;
        std::vector<std::string> names(k);
        for (int p = 0; p < k; ++p) names[p] = parts[p][tuple[p]];
        edges.push_back(std::move(names));
    }
    return PartitionedHypergraph::create(parts, edges, /*prune_isolated=*/true);
}

inline PartitionedHypergraph random_bipartite(Rng& rng, int left, int right, int edge_count) {
    if (left < 1 || right < 1 || edge_count < 1)
        throw validation_error("generator needs positive sizes");
    if (static_cast<double>(left) * right < edge_count)
        throw validation_error("too many edges for the bipartite size");
    std::vector<std::vector<std::string>> parts(2);
    for (int i = 0; i < left; ++i) parts[0].push_back("l" + std::to_string(i));
    for (int i = 0; i < right; ++i) parts[1].push_back("r" + std::to_string(i));
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<std::string>> edges;
    while (static_cast<int>(edges.size()) < edge_count) {
        int u = static_cast<int>(rng.below(left));
        int v = static_cast<int>(rng.below(right));
        if (!seen.insert({u, v}).second) continue;
        edges.push_back({parts[0][u], parts[1][v]});
    }
    return PartitionedHypergraph::create(parts, edges, /*prune_isolated=*/true);
}

/// Random simple graph on n vertices with `edge_count` distinct edges.
inline std::vector<std::pair<int, int>> random_graph_edges(Rng& rng, int n, int edge_count) {
    if (n < 2) throw validation_error("graph needs at least two vertices");
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (edge_count > max_edges) throw validation_error("too many edges for n");
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> out;
    while (static_cast<int>(out.size()) < edge_count) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;
        out.push_back({u, v});
    }
    return out;
}

}  // namespace axisrep::gen
