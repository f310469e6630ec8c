#include <catch2/catch.hpp>

#include <fstream>
#include <numeric>
#include <sstream>

#include "axisrep/io.hpp"
#include "axisrep/representation.hpp"
#include "generators.hpp"
#include "support/oracles.hpp"

using namespace axisrep;

namespace {

PartitionedHypergraph two_edge_graph() {
    return PartitionedHypergraph::create({{"a1", "a2"}, {"b1"}, {"c1", "c2"}},
                                         {{"a1", "b1", "c1"}, {"a2", "b1", "c2"}});
}

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(AXISREP_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Representation construct_ok(const PartitionedHypergraph& g, const PartLabeling& lab) {
    auto res = construct_representation(g, lab);
    REQUIRE(std::holds_alternative<Representation>(res));
    return std::get<Representation>(res);
}

}  // namespace

TEST_CASE("coordinate assignment on the two-edge instance") {
    auto g = two_edge_graph();
    auto rep = construct_ok(g, PartLabeling::canonical(3, 1));

    CHECK(rep.points[0] == std::vector<long long>{1, 1, 1});
    CHECK(rep.points[1] == std::vector<long long>{1, 2, 1});

    auto b1 = rep.subspace_of(*g.find_vertex("b1"));
    CHECK(b1.free_axes == std::vector<int>{2});
    CHECK(b1.fixed == std::vector<std::pair<int, long long>>{{1, 1}, {3, 1}});

    auto a2 = rep.subspace_of(*g.find_vertex("a2"));
    CHECK(a2.free_axes == std::vector<int>{1});
    CHECK(a2.fixed == std::vector<std::pair<int, long long>>{{2, 2}, {3, 1}});
}

TEST_CASE("single edge gets the unit point and three distinct lines") {
    auto g = PartitionedHypergraph::create({{"x"}, {"y"}, {"z"}}, {{"x", "y", "z"}});
    auto rep = construct_ok(g, PartLabeling::canonical(3, 1));
    CHECK(rep.points[0] == std::vector<long long>{1, 1, 1});
    CHECK(rep.subspaces[0][0].free_axes == std::vector<int>{1});
    CHECK(rep.subspaces[1][0].free_axes == std::vector<int>{2});
    CHECK(rep.subspaces[2][0].free_axes == std::vector<int>{3});
    CHECK(verify_representation(g, rep).ok);
}

TEST_CASE("construction fails with the colliding vertex pair") {
    auto g = parse_hypergraph(read_fixture("nonseparable.json")).graph;
    auto res = construct_representation(g, PartLabeling::canonical(3, 1));
    REQUIRE(std::holds_alternative<SeparabilityWitness>(res));
    const auto& w = std::get<SeparabilityWitness>(res);
    CHECK(w.kind == SeparabilityWitness::Kind::vertex_pair);
    CHECK(w.pair == std::array<std::string, 2>{"b1", "b2"});
}

TEST_CASE("vertex witnesses take precedence over edge witnesses") {
    // Both collision kinds exist here: the edges collide as points and
    // the part-3 pair (c1, c2) collides as subspaces.
    auto g = PartitionedHypergraph::create({{"a1"}, {"b1"}, {"c1", "c2"}},
                                           {{"a1", "b1", "c1"}, {"a1", "b1", "c2"}});
    auto res = construct_representation(g, PartLabeling::canonical(3, 1));
    REQUIRE(std::holds_alternative<SeparabilityWitness>(res));
    const auto& w = std::get<SeparabilityWitness>(res);
    CHECK(w.kind == SeparabilityWitness::Kind::vertex_pair);
    CHECK(w.pair == std::array<std::string, 2>{"c1", "c2"});
}

TEST_CASE("verification and diagnostics") {
    auto g = two_edge_graph();
    auto rep = construct_ok(g, PartLabeling::canonical(3, 1));
    REQUIRE(verify_representation(g, rep).ok);

    SECTION("merged points") {
        auto broken = rep;
        broken.points[1] = broken.points[0];
        auto v = verify_representation(g, broken);
        CHECK_FALSE(v.ok);
        CHECK(v.diagnostic.find("points not distinct") != std::string::npos);
    }
    SECTION("perturbed fixed coordinate") {
        auto broken = rep;
        broken.subspaces[1][0].fixed[0].second = 7;  // b1 now fixes x1 = 7
        auto v = verify_representation(g, broken);
        CHECK_FALSE(v.ok);
        CHECK(v.diagnostic.find("incidence violated") != std::string::npos);
    }
    SECTION("duplicated subspace") {
        auto broken = rep;
        broken.subspaces[0][1] = broken.subspaces[0][0];
        auto v = verify_representation(g, broken);
        CHECK_FALSE(v.ok);
        CHECK(v.diagnostic.find("subspaces not distinct") != std::string::npos);
    }
    SECTION("mismatched index sets") {
        auto broken = rep;
        broken.points.pop_back();
        CHECK_THROWS_AS(verify_representation(g, broken), validation_error);
    }
}

TEST_CASE("hypergraph induced by a point set") {
    SECTION("one point") {
        auto r = hypergraph_from_points({{0, 0}}, 1);
        CHECK(r.hypergraph.part_count() == 2);
        CHECK(r.hypergraph.vertex_count() == 2);
        CHECK(r.hypergraph.edge_count() == 1);
        CHECK(verify_representation(r.hypergraph, r.representation).ok);
    }
    SECTION("three points in the plane") {
        auto r = hypergraph_from_points({{0, 0}, {1, 1}, {0, 1}}, 1);
        CHECK(r.hypergraph.vertex_count() == 4);
        CHECK(r.hypergraph.edge_count() == 3);
        // points 1 and 2 share the row y = 1; points 0 and 2 share the
        // column x = 0 (part 1 free axis 1 = rows, part 2 = columns).
        CHECK(r.hypergraph.edge_vertex(EdgeRef{1}, 0) ==
              r.hypergraph.edge_vertex(EdgeRef{2}, 0));
        CHECK(r.hypergraph.edge_vertex(EdgeRef{0}, 1) ==
              r.hypergraph.edge_vertex(EdgeRef{2}, 1));
        CHECK(verify_representation(r.hypergraph, r.representation).ok);
    }
    SECTION("collinear points in space share the axis line") {
        auto r = hypergraph_from_points({{0, 0, 0}, {5, 0, 0}}, 1);
        CHECK(r.hypergraph.edge_vertex(EdgeRef{0}, 0) ==
              r.hypergraph.edge_vertex(EdgeRef{1}, 0));
        CHECK(r.hypergraph.vertex_count() == 5);
    }
    SECTION("input validation") {
        CHECK_THROWS_AS(hypergraph_from_points({}, 1), validation_error);
        CHECK_THROWS_AS(hypergraph_from_points({{0, 0}, {0, 0}}, 1), validation_error);
        CHECK_THROWS_AS(hypergraph_from_points({{0, 0}}, 2), validation_error);
        CHECK_THROWS_AS(hypergraph_from_points({{0, 0}}, 0), validation_error);
    }
}

TEST_CASE("recognition entry points") {
    SECTION("within-reach dimensions always work at ell = d-1") {
        gen::Rng rng(31337);
        for (int round = 0; round < 50; ++round) {
            int d = static_cast<int>(rng.range(2, 4));
            int part_size = static_cast<int>(rng.range(2, 4));
            long long space = 1;
            for (int p = 0; p < d; ++p) space *= part_size;
            auto g = gen::random_hypergraph(
                    rng, d, part_size, static_cast<int>(rng.range(1, std::min(space, 8ll))));
            auto res = recognize(g, d, d - 1, LabelingMode::fixed);
            REQUIRE(res.success());
            CHECK(verify_representation(g, *res.representation).ok);
        }
    }
    SECTION("bipartite instances always work at (2,1)") {
        gen::Rng rng(90210);
        for (int round = 0; round < 50; ++round) {
            int left = static_cast<int>(rng.range(1, 5));
            int right = static_cast<int>(rng.range(1, 5));
            auto g = gen::random_bipartite(
                    rng, left, right,
                    static_cast<int>(rng.range(1, std::min(left * right, 8))));
            auto res = recognize(g, 2, 1, LabelingMode::fixed);
            REQUIRE(res.success());
            CHECK(verify_representation(g, *res.representation).ok);
        }
    }
    SECTION("a (3,1)-unrepresentable instance is representable at (3,2)") {
        auto g = parse_hypergraph(read_fixture("nonsep_hypergraph.json")).graph;
        auto at31 = recognize(g, 3, 1, LabelingMode::fixed);
        CHECK_FALSE(at31.success());
        REQUIRE(at31.witness);
        auto at32 = recognize(g, 3, 2, LabelingMode::fixed);
        REQUIRE(at32.success());
        CHECK(verify_representation(g, *at32.representation).ok);
    }
    SECTION("part count must match C(d, ell)") {
        auto g = two_edge_graph();
        CHECK_THROWS_AS(recognize(g, 4, 1, LabelingMode::fixed), validation_error);
    }
    SECTION("fixed mode needs a labeling in the asymmetric range") {
        gen::Rng rng(1);
        auto g = gen::random_hypergraph(rng, 6, 2, 4);
        CHECK_THROWS_AS(recognize(g, 4, 2, LabelingMode::fixed), validation_error);
    }
    SECTION("enumeration recovers a workable labeling") {
        gen::Rng rng(77);
        auto pts = gen::random_point_set(rng, 4, 10, 0, 3);
        auto fp = hypergraph_from_points(pts, 2);
        // Shuffle the parts so the canonical labeling no longer fits.
        std::vector<std::vector<std::string>> parts = fp.hypergraph.parts();
        std::rotate(parts.begin(), parts.begin() + 1, parts.end());
        std::vector<std::vector<std::string>> edges;
        for (int e = 0; e < fp.hypergraph.edge_count(); ++e) {
            auto names = fp.hypergraph.edge_vertex_names(EdgeRef{e});
            std::rotate(names.begin(), names.begin() + 1, names.end());
            edges.push_back(names);
        }
        auto shuffled = PartitionedHypergraph::create(parts, edges);
        auto res = recognize(shuffled, 4, 2, LabelingMode::enumerate_all);
        REQUIRE(res.success());
        CHECK(verify_representation(shuffled, *res.representation).ok);
    }
}

TEST_CASE("enumeration returns the first workable labeling") {
    gen::Rng rng(271828);
    auto pts = gen::random_point_set(rng, 4, 8, 0, 3);
    auto fp = hypergraph_from_points(pts, 2);
    std::vector<std::vector<std::string>> parts = fp.hypergraph.parts();
    std::rotate(parts.begin(), parts.begin() + 2, parts.end());
    std::vector<std::vector<std::string>> edges;
    for (int e = 0; e < fp.hypergraph.edge_count(); ++e) {
        auto names = fp.hypergraph.edge_vertex_names(EdgeRef{e});
        std::rotate(names.begin(), names.begin() + 2, names.end());
        edges.push_back(names);
    }
    auto g = PartitionedHypergraph::create(parts, edges);

    auto res = recognize(g, 4, 2, LabelingMode::enumerate_all);
    REQUIRE(res.success());

    // Scan every assignment in lexicographic order; the first success
    // must be the one enumeration returned.
    auto subsets = all_axis_subsets(4, 2);
    std::vector<int> assignment(subsets.size());
    std::iota(assignment.begin(), assignment.end(), 0);
    std::optional<PartLabeling> first;
    do {
        std::vector<std::vector<int>> sets(assignment.size());
        for (std::size_t p = 0; p < assignment.size(); ++p) sets[p] = subsets[assignment[p]];
        auto lab = PartLabeling::from_free_sets(4, 2, std::move(sets));
        if (std::holds_alternative<Representation>(construct_representation(g, lab))) {
            first = lab;
            break;
        }
    } while (std::next_permutation(assignment.begin(), assignment.end()));
    REQUIRE(first);
    CHECK(*res.labeling == *first);
}

TEST_CASE("round trip from points and back") {
    gen::Rng rng(60601);
    for (int round = 0; round < 60; ++round) {
        int d = static_cast<int>(rng.range(2, 5));
        int ell = static_cast<int>(rng.range(1, d - 1));
        int count = static_cast<int>(rng.range(1, 25));
        auto pts = gen::random_point_set(rng, d, count, 0, 6);
        auto fp = hypergraph_from_points(pts, ell);

        auto res = recognize(fp.hypergraph, d, ell, LabelingMode::fixed, fp.labeling);
        REQUIRE(res.success());
        CHECK(verify_representation(fp.hypergraph, *res.representation).ok);

        // The computed points cover an isomorphic hypergraph.
        CHECK(oracles::incidence_signature(res.representation->points, ell) ==
              oracles::incidence_signature(pts, ell));

        // Coordinates stay in 1..m.
        for (const auto& p : res.representation->points)
            for (long long c : p) {
                CHECK(c >= 1);
                CHECK(c <= fp.hypergraph.edge_count());
            }
    }
}

TEST_CASE("recognition agrees with the assignment oracle on small instances") {
    gen::Rng rng(8086);
    auto lab = PartLabeling::canonical(3, 1);
    int representable = 0, not_representable = 0;
    for (int round = 0; round < 60; ++round) {
        auto g = gen::random_hypergraph(rng, 3, static_cast<int>(rng.range(2, 3)),
                                        static_cast<int>(rng.range(1, 4)));
        bool rec = recognize(g, 3, 1, LabelingMode::fixed).success();
        bool oracle = oracles::representable_by_assignment(g, lab);
        CHECK(rec == oracle);
        (rec ? representable : not_representable) += 1;
    }
    CHECK(representable > 0);
    CHECK(not_representable > 0);
}

TEST_CASE("construction output is deterministic") {
    auto g = parse_hypergraph(read_fixture("separable.json")).graph;
    auto r1 = recognize(g, 3, 1, LabelingMode::fixed);
    auto r2 = recognize(g, 3, 1, LabelingMode::fixed);
    REQUIRE(r1.success());
    REQUIRE(r2.success());
    CHECK(serialize_representation(*r1.representation, g) ==
          serialize_representation(*r2.representation, g));
}

TEST_CASE("representation documents round trip") {
    auto g = two_edge_graph();
    auto rep = construct_ok(g, PartLabeling::canonical(3, 1));
    auto text = serialize_representation(rep, g);
    auto parsed = parse_representation(text, g);
    CHECK(parsed.points == rep.points);
    CHECK(parsed.subspaces == rep.subspaces);
    CHECK(verify_representation(g, parsed).ok);
    CHECK(serialize_representation(parsed, g) == text);
}
