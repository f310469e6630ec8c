#include <catch2/catch.hpp>

#include <fstream>
#include <sstream>

#include "axisrep/io.hpp"
#include "axisrep/projection.hpp"
#include "axisrep/representation.hpp"
#include "axisrep/svg.hpp"
#include "generators.hpp"

using namespace axisrep;

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(AXISREP_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("projecting a single point gives concurrent lines in d directions") {
    auto fp = hypergraph_from_points({{0, 0, 0}}, 1);
    auto res = project_to_plane(fp.representation, 1);
    CHECK(res.retries == 0);
    CHECK(res.instance.points.size() == 1);
    CHECK(res.instance.points[0] == std::array<long long, 2>{0, 0});
    CHECK(res.instance.lines.size() == 3);
    CHECK(res.instance.direction_count == 3);
    for (const auto& l : res.instance.lines) CHECK(detail::on_line(l, {0, 0}));
}

TEST_CASE("points sharing an axis line stay on one projected line") {
    auto fp = hypergraph_from_points({{0, 0, 0}, {5, 0, 0}}, 1);
    auto res = project_to_plane(fp.representation, 7);
    // The shared line is the part-1 vertex through both points.
    const PlanarLine& shared = res.instance.lines[0];
    CHECK(shared.direction_class == 1);
    CHECK(detail::on_line(shared, res.instance.points[0]));
    CHECK(detail::on_line(shared, res.instance.points[1]));
}

TEST_CASE("projection sweep passes verification") {
    gen::Rng rng(112233);
    int total_retries = 0;
    for (int round = 0; round < 40; ++round) {
        int d = static_cast<int>(rng.range(2, 5));
        auto pts = gen::random_point_set(rng, d, static_cast<int>(rng.range(1, 25)), 0, 8);
        auto fp = hypergraph_from_points(pts, 1);
        auto rec = recognize(fp.hypergraph, d, 1, LabelingMode::fixed);
        REQUIRE(rec.success());
        auto res = project_to_plane(*rec.representation, 1000 + round);
        total_retries += res.retries;
        CHECK(verify_planar_instance(*rec.representation, res.instance).ok);
    }
    CHECK(total_retries == 0);
}

TEST_CASE("projection requires ell = 1") {
    auto fp = hypergraph_from_points({{0, 0, 0}}, 2);
    CHECK_THROWS_AS(project_to_plane(fp.representation, 0), std::invalid_argument);
}

TEST_CASE("planar verification diagnostics") {
    auto fp = hypergraph_from_points({{0, 0}, {1, 1}, {0, 1}}, 1);
    auto res = project_to_plane(fp.representation, 3);
    REQUIRE(verify_planar_instance(fp.representation, res.instance).ok);

    SECTION("merged points") {
        auto broken = res.instance;
        broken.points[1] = broken.points[0];
        auto v = verify_planar_instance(fp.representation, broken);
        CHECK_FALSE(v.ok);
        CHECK(v.diagnostic.find("points not distinct") != std::string::npos);
    }
    SECTION("two parallel direction classes") {
        auto broken = res.instance;
        for (auto& l : broken.lines)
            if (l.direction_class == 2) l.direction = broken.lines[0].direction;
        auto v = verify_planar_instance(fp.representation, broken);
        CHECK_FALSE(v.ok);
        CHECK(v.diagnostic.find("directions not distinct") != std::string::npos);
    }
    SECTION("broken incidence") {
        auto broken = res.instance;
        broken.points[0][0] += 1;
        CHECK_FALSE(verify_planar_instance(fp.representation, broken).ok);
    }
}

TEST_CASE("projection is deterministic for a fixed seed") {
    auto fp = hypergraph_from_points({{0, 0, 0}, {5, 0, 0}, {5, 2, 1}}, 1);
    auto a = project_to_plane(fp.representation, 99);
    auto b = project_to_plane(fp.representation, 99);
    CHECK(serialize_planar_instance(a.instance) == serialize_planar_instance(b.instance));
    auto c = project_to_plane(fp.representation, 100);
    CHECK(serialize_planar_instance(a.instance) != serialize_planar_instance(c.instance));
}

TEST_CASE("a hypergraph with no spatial representation can still live in the plane") {
    auto g = parse_hypergraph(read_fixture("nonsep_hypergraph.json")).graph;
    CHECK_FALSE(recognize(g, 3, 1, LabelingMode::fixed).success());
    auto inst = parse_planar_instance(read_fixture("nonsep_planar_3dir.json"));
    CHECK(inst.direction_count == 3);
    CHECK(verify_planar_incidence(g, inst).ok);
}

TEST_CASE("four points with six pairwise directions") {
    auto inst = parse_planar_instance(read_fixture("four_point_six_dirs.json"));
    REQUIRE(inst.points.size() == 4);
    REQUIRE(inst.lines.size() == 6);
    CHECK(inst.direction_count == 6);
    // All six directions pairwise non-parallel.
    for (std::size_t a = 0; a < inst.lines.size(); ++a)
        for (std::size_t b = a + 1; b < inst.lines.size(); ++b)
            CHECK(detail::cross2(inst.lines[a].direction[0], inst.lines[a].direction[1],
                                 inst.lines[b].direction[0],
                                 inst.lines[b].direction[1]) != 0);
    // Every line covers exactly two of the four points.
    for (const auto& l : inst.lines) {
        int on = 0;
        for (const auto& p : inst.points) on += detail::on_line(l, p);
        CHECK(on == 2);
    }
    // Every pair of points is covered by exactly one line.
    for (std::size_t i = 0; i < inst.points.size(); ++i)
        for (std::size_t j = i + 1; j < inst.points.size(); ++j) {
            int covering = 0;
            for (const auto& l : inst.lines)
                covering += detail::on_line(l, inst.points[i]) &&
                            detail::on_line(l, inst.points[j]);
            CHECK(covering == 1);
        }
}

TEST_CASE("svg output") {
    SECTION("empty instance") {
        PlanarInstance empty;
        auto svg = emit_svg(empty);
        CHECK(svg.find("<svg") == 0);
        CHECK(svg.find("</svg>") != std::string::npos);
        CHECK(count_occurrences(svg, "<circle") == 0);
    }
    SECTION("grid instance") {
        auto fp = hypergraph_from_points({{0, 0}, {1, 1}, {0, 1}}, 1);
        auto svg = emit_svg(planar_view_2d(fp.representation));
        CHECK(count_occurrences(svg, "<circle") == 3);
        CHECK(count_occurrences(svg, "<line") == 4);
        CHECK(svg == emit_svg(planar_view_2d(fp.representation)));
    }
    SECTION("projected instance uses one color per direction") {
        auto fp = hypergraph_from_points({{0, 0, 0}, {5, 0, 0}, {5, 2, 1}}, 1);
        auto res = project_to_plane(fp.representation, 5);
        auto svg = emit_svg(res.instance);
        CHECK(count_occurrences(svg, "#1f77b4") >= 1);
        CHECK(count_occurrences(svg, "#ff7f0e") >= 1);
        CHECK(count_occurrences(svg, "#2ca02c") >= 1);
        CHECK(count_occurrences(svg, "#d62728") == 0);
    }
}
