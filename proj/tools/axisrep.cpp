// Command-line front end: recognition, construction, verification, the
// independent-set reduction, brute-force search, planar projection and
// SVG rendering, plus seeded instance generators.
//
// Exit codes: 0 success, 1 negative decision (not representable / invalid
// representation), 2 input or contract error, 3 brute-force size cap.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "axisrep/hypergraph.hpp"
#include "axisrep/io.hpp"
#include "axisrep/labeling.hpp"
#include "axisrep/projection.hpp"
#include "axisrep/reduction.hpp"
#include "axisrep/representation.hpp"
#include "axisrep/separability.hpp"
#include "axisrep/svg.hpp"
#include "generators.hpp"

namespace {

using nlohmann::json;
using namespace axisrep;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
    out << content;
}

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Accumulates one command's report; timing lands only in --json output
/// so that plain output stays byte-identical across runs.
struct Reporter {
    std::string command;
    bool as_json = false;
    json report = json::object();
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    Reporter(std::string cmd, bool json_mode) : command(std::move(cmd)), as_json(json_mode) {
        report["command"] = command;
    }

    void input(const std::string& data) { report["input_digest"] = fnv1a_hex(data); }

    void finish(const std::string& outcome, const std::string& human_line) {
        report["outcome"] = outcome;
        if (as_json) {
            report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - started)
                                           .count();
            std::cout << report.dump(2) << "\n";
        } else if (!human_line.empty()) {
            std::cout << human_line << "\n";
        }
    }
};

/// Write the artifact to --output when given, otherwise keep it inline
/// (printed on stdout in plain mode, embedded in the report in json mode).
void deliver(Reporter& rep, const std::string& output, const std::string& artifact) {
    if (!output.empty()) {
        write_file(output, artifact);
        rep.report["artifact"] = output;
    } else {
        rep.report["artifact"] = nullptr;
        if (rep.as_json)
            rep.report["result"] = json::parse(artifact);
        else
            std::cout << artifact;
    }
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

// ── recognize ────────────────────────────────────────────────────

struct RecognizeOpts {
    std::string input, output, labeling_mode = "fixed";
    int d = 0, ell = 0;
    bool json_mode = false, prune = false;
};

int cmd_recognize(const RecognizeOpts& o) {
    Reporter rep("recognize", o.json_mode);
    std::string text = read_file(o.input);
    rep.input(text);
    ParsedHypergraph doc = parse_hypergraph(text, ParseOptions{o.prune});
    print_warnings(doc.warnings);

    int ell = o.ell > 0 ? o.ell : (doc.labeling ? doc.labeling->ell : 1);
    int d = o.d > 0 ? o.d
                    : (doc.labeling ? doc.labeling->d
                                    : (ell == 1 ? doc.graph.part_count() : 0));
    if (d <= 0)
        throw validation_error("cannot infer d; pass --d (and --ell) explicitly");

    LabelingMode mode = LabelingMode::fixed;
    if (o.labeling_mode == "enumerate")
        mode = LabelingMode::enumerate_all;
    else if (o.labeling_mode != "fixed")
        throw validation_error("--labeling must be fixed or enumerate");

    RecognitionResult result = recognize(doc.graph, d, ell, mode, doc.labeling);
    if (result.success()) {
        deliver(rep, o.output, serialize_representation(*result.representation, doc.graph));
        rep.finish("representable",
                   o.output.empty() ? "" : "representable -> " + o.output);
        return 0;
    }
    deliver(rep, o.output, serialize_witness(*result.witness));
    rep.finish("not-representable",
               o.output.empty() ? "" : "not representable; witness -> " + o.output);
    return 1;
}

// ── from-points ──────────────────────────────────────────────────

int cmd_from_points(const std::string& input, const std::string& output, bool json_mode) {
    Reporter rep("from-points", json_mode);
    std::string text = read_file(input);
    rep.input(text);
    PointSetDoc doc = parse_point_set(text);
    FromPointsResult result = hypergraph_from_points(doc.points, doc.ell);
    std::optional<PartLabeling> lab;
    if (doc.ell > 1) lab = result.labeling;
    deliver(rep, output, serialize_hypergraph(result.hypergraph, lab));
    std::ostringstream line;
    line << "hypergraph: k=" << result.hypergraph.part_count() << ", "
         << result.hypergraph.vertex_count() << " vertices, "
         << result.hypergraph.edge_count() << " edges";
    if (!output.empty()) line << " -> " << output;
    rep.finish("ok", output.empty() ? "" : line.str());
    return 0;
}

// ── verify ───────────────────────────────────────────────────────

int cmd_verify(const std::string& graph_path, const std::string& rep_path, bool prune,
               bool json_mode) {
    Reporter rep("verify", json_mode);
    std::string gtext = read_file(graph_path);
    std::string rtext = read_file(rep_path);
    rep.input(gtext + rtext);
    ParsedHypergraph doc = parse_hypergraph(gtext, ParseOptions{prune});
    print_warnings(doc.warnings);
    Representation r = parse_representation(rtext, doc.graph);
    VerifyResult v = verify_representation(doc.graph, r);
    rep.report["diagnostic"] = v.diagnostic;
    rep.finish(v.ok ? "verified" : "failed",
               v.ok ? "representation valid" : "representation invalid: " + v.diagnostic);
    return v.ok ? 0 : 1;
}

// ── reduce-is ────────────────────────────────────────────────────

int cmd_reduce_is(const std::string& input, const std::string& output, bool json_mode) {
    Reporter rep("reduce-is", json_mode);
    std::string text = read_file(input);
    rep.input(text);
    SimpleGraph g = parse_simple_graph(text);
    GadgetInstance inst = build_matching_instance(g);
    VerifyResult check = verify_gadget_instance(inst);
    if (!check.ok) throw std::runtime_error("construction invariant broken: " + check.diagnostic);
    rep.report["n"] = inst.n;
    rep.report["m"] = inst.m;
    rep.report["points"] = inst.points.size();
    rep.report["lines"] = inst.lines.size();
    rep.report["target_base"] = inst.matching_target(0);
    deliver(rep, output, serialize_gadget_instance(inst));
    std::ostringstream line;
    line << "gadget instance: " << inst.points.size() << " points, " << inst.lines.size()
         << " lines; matching target = " << inst.matching_target(0)
         << " + independent-set size";
    if (!output.empty()) line << " -> " << output;
    rep.finish("ok", output.empty() ? "" : line.str());
    return 0;
}

// ── brute-force commands ─────────────────────────────────────────

int cmd_match_brute(const std::string& input, int cap, bool json_mode) {
    Reporter rep("match-brute", json_mode);
    std::string text = read_file(input);
    rep.input(text);
    PointSetDoc doc = parse_point_set(text);
    int result = brute_force_max_matching(doc.points, static_cast<std::size_t>(cap));
    rep.report["result"] = result;
    rep.finish("ok", "maximum matching: " + std::to_string(result));
    return 0;
}

int cmd_is_brute(const std::string& input, int cap, bool json_mode) {
    Reporter rep("is-brute", json_mode);
    std::string text = read_file(input);
    rep.input(text);
    SimpleGraph g = parse_simple_graph(text);
    int result = brute_force_max_independent_set(g, cap);
    rep.report["result"] = result;
    rep.finish("ok", "maximum independent set: " + std::to_string(result));
    return 0;
}

// ── project / svg ────────────────────────────────────────────────

/// Rebuild a Representation from its own document, without a hypergraph:
/// subspaces are grouped by free set and kept in document (alphabetical)
/// order inside each part.
Representation parse_representation_standalone(const std::string& text) {
    json doc = json::parse(text);
    Representation rep;
    rep.d = doc.at("d").get<int>();
    rep.ell = doc.at("ell").get<int>();
    rep.labeling = PartLabeling::from_free_sets(
            rep.d, rep.ell, doc.at("labeling").get<std::vector<std::vector<int>>>());
    const json& points = doc.at("points");
    rep.points.assign(points.size(), {});
    for (auto it = points.begin(); it != points.end(); ++it) {
        int e = detail::parse_index_key(it.key(), 'e', "edge");
        if (e < 0 || e >= static_cast<int>(rep.points.size()))
            throw parse_error("edge key out of range \"" + it.key() + "\"");
        rep.points[e] = it->get<std::vector<long long>>();
    }
    rep.subspaces.resize(rep.labeling.part_count());
    for (auto it = doc.at("subspaces").begin(); it != doc.at("subspaces").end(); ++it) {
        AxisSubspace s;
        s.free_axes = it->at("free").get<std::vector<int>>();
        for (auto fit = it->at("fixed").begin(); fit != it->at("fixed").end(); ++fit)
            s.fixed.emplace_back(detail::parse_axis_key(fit.key()), fit->get<long long>());
        std::sort(s.fixed.begin(), s.fixed.end());
        int part = -1;
        for (int p = 0; p < rep.labeling.part_count(); ++p)
            if (rep.labeling.free_set(p) == s.free_axes) part = p;
        if (part < 0) throw parse_error("subspace free set not in labeling");
        rep.subspaces[part].push_back(std::move(s));
    }
    return rep;
}

int cmd_project(const std::string& input, const std::string& output, std::uint64_t seed,
                bool json_mode) {
    Reporter rep("project", json_mode);
    std::string text = read_file(input);
    rep.input(text);
    Representation src = [&] {
        try {
            return parse_representation_standalone(text);
        } catch (const json::exception& e) {
            throw parse_error(std::string("bad representation document: ") + e.what());
        }
    }();
    ProjectionResult result = project_to_plane(src, seed);
    rep.report["retries"] = result.retries;
    rep.report["directions"] = result.instance.direction_count;
    deliver(rep, output, serialize_planar_instance(result.instance));
    std::ostringstream line;
    line << "planar instance: " << result.instance.points.size() << " points, "
         << result.instance.lines.size() << " lines, " << result.instance.direction_count
         << " directions, retries " << result.retries;
    if (!output.empty()) line << " -> " << output;
    rep.finish("ok", output.empty() ? "" : line.str());
    return 0;
}

int cmd_svg(const std::string& input, const std::string& output, bool json_mode) {
    Reporter rep("svg", json_mode);
    std::string text = read_file(input);
    rep.input(text);
    json doc = detail::parse_json(text);
    PlanarInstance inst;
    if (doc.contains("lines") && doc.contains("points")) {
        inst = parse_planar_instance(text);
    } else if (doc.contains("subspaces")) {
        Representation src = [&] {
            try {
                return parse_representation_standalone(text);
            } catch (const json::exception& e) {
                throw parse_error(std::string("bad representation document: ") + e.what());
            }
        }();
        inst = planar_view_2d(src);
    } else {
        throw parse_error("input is neither a planar instance nor a representation");
    }
    std::string svg = emit_svg(inst);
    if (!output.empty()) {
        write_file(output, svg);
        rep.report["artifact"] = output;
    } else {
        rep.report["artifact"] = nullptr;
        if (rep.as_json)
            rep.report["bytes"] = svg.size();
        else
            std::cout << svg;
    }
    rep.finish("ok", output.empty() ? "" : "svg -> " + output);
    return 0;
}

// ── gen-random ───────────────────────────────────────────────────

struct GenOpts {
    std::string kind, output;
    std::uint64_t seed = 0;
    int d = 3, ell = 1, count = 10;
    long long coord_min = 0, coord_max = 9;
    int k = 3, part_size = 3, edges = 6;
    int left = 3, right = 3;
    bool json_mode = false;
};

int cmd_gen_random(const GenOpts& o) {
    Reporter rep("gen-random", o.json_mode);
    rep.report["input_digest"] = "seed:" + std::to_string(o.seed);
    gen::Rng rng(o.seed);
    std::string artifact;
    if (o.kind == "points") {
        auto pts = gen::random_point_set(rng, o.d, o.count, o.coord_min, o.coord_max);
        artifact = serialize_point_set(PointSetDoc{o.d, o.ell, std::move(pts)});
    } else if (o.kind == "hypergraph") {
        artifact = serialize_hypergraph(gen::random_hypergraph(rng, o.k, o.part_size, o.edges));
    } else if (o.kind == "bipartite") {
        artifact = serialize_hypergraph(gen::random_bipartite(rng, o.left, o.right, o.edges));
    } else {
        throw validation_error("kind must be points, hypergraph or bipartite");
    }
    deliver(rep, o.output, artifact);
    rep.finish("ok", o.output.empty() ? "" : "wrote " + o.output);
    return 0;
}

// ── stats ────────────────────────────────────────────────────────

int cmd_stats(const std::string& input, bool prune, bool json_mode) {
    Reporter rep("stats", json_mode);
    std::string text = read_file(input);
    rep.input(text);
    ParsedHypergraph doc = parse_hypergraph(text, ParseOptions{prune});
    print_warnings(doc.warnings);
    const auto& g = doc.graph;
    std::vector<int> sizes;
    for (int p = 0; p < g.part_count(); ++p) sizes.push_back(g.part_size(p));
    rep.report["k"] = g.part_count();
    rep.report["n"] = g.vertex_count();
    rep.report["m"] = g.edge_count();
    rep.report["part_sizes"] = sizes;
    rep.report["incidence"] = g.edge_count() * g.part_count();
    std::ostringstream line;
    line << "k=" << g.part_count() << " n=" << g.vertex_count() << " m=" << g.edge_count()
         << " parts=[";
    for (std::size_t i = 0; i < sizes.size(); ++i) line << (i ? "," : "") << sizes[i];
    line << "]";
    rep.finish("ok", line.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"axis-aligned point-subspace cover toolkit"};
    app.require_subcommand(1);

    RecognizeOpts ro;
    auto* rec = app.add_subcommand("recognize",
                                   "decide representability and emit a representation "
                                   "or a witness");
    rec->add_option("input", ro.input, "hypergraph JSON")->required();
    rec->add_option("--d", ro.d, "ambient dimension (default: inferred)");
    rec->add_option("--ell", ro.ell, "subspace dimension (default: inferred or 1)");
    rec->add_option("--labeling", ro.labeling_mode, "fixed|enumerate (default fixed)");
    rec->add_option("--output", ro.output, "artifact path");
    rec->add_flag("--json", ro.json_mode, "machine-readable report on stdout");
    rec->add_flag("--prune-isolated", ro.prune, "drop vertices in no edge");

    struct {
        std::string input, output;
        bool json_mode = false;
    } fp;
    auto* fps = app.add_subcommand("from-points", "hypergraph covered by a point set");
    fps->add_option("input", fp.input, "point-set JSON")->required();
    fps->add_option("--output", fp.output, "artifact path");
    fps->add_flag("--json", fp.json_mode, "machine-readable report on stdout");

    struct {
        std::string graph, rep;
        bool json_mode = false, prune = false;
    } vf;
    auto* vfs = app.add_subcommand("verify", "check a representation against a hypergraph");
    vfs->add_option("hypergraph", vf.graph, "hypergraph JSON")->required();
    vfs->add_option("representation", vf.rep, "representation JSON")->required();
    vfs->add_flag("--json", vf.json_mode, "machine-readable report on stdout");
    vfs->add_flag("--prune-isolated", vf.prune, "drop vertices in no edge");

    struct {
        std::string input, output;
        bool json_mode = false;
    } ri;
    auto* ris = app.add_subcommand("reduce-is",
                                   "independent-set-to-matching gadget instance");
    ris->add_option("input", ri.input, "simple-graph JSON")->required();
    ris->add_option("--output", ri.output, "artifact path");
    ris->add_flag("--json", ri.json_mode, "machine-readable report on stdout");

    struct {
        std::string input;
        int cap = 100;
        bool json_mode = false;
    } mb;
    auto* mbs = app.add_subcommand("match-brute", "exact maximum matching of a point set");
    mbs->add_option("input", mb.input, "point-set JSON")->required();
    mbs->add_option("--cap", mb.cap, "point-count cap (default 100)");
    mbs->add_flag("--json", mb.json_mode, "machine-readable report on stdout");

    struct {
        std::string input;
        int cap = 26;
        bool json_mode = false;
    } ib;
    auto* ibs = app.add_subcommand("is-brute", "exact maximum independent set");
    ibs->add_option("input", ib.input, "simple-graph JSON")->required();
    ibs->add_option("--cap", ib.cap, "vertex-count cap (default 26)");
    ibs->add_flag("--json", ib.json_mode, "machine-readable report on stdout");

    struct {
        std::string input, output;
        std::uint64_t seed = 0;
        bool json_mode = false;
    } pj;
    auto* pjs = app.add_subcommand("project",
                                   "random planar projection of a (d,1) representation");
    pjs->add_option("input", pj.input, "representation JSON")->required();
    pjs->add_option("--seed", pj.seed, "random seed (default 0)");
    pjs->add_option("--output", pj.output, "artifact path");
    pjs->add_flag("--json", pj.json_mode, "machine-readable report on stdout");

    struct {
        std::string input, output;
        bool json_mode = false;
    } sv;
    auto* svs = app.add_subcommand("svg", "render a planar instance or 2D representation");
    svs->add_option("input", sv.input, "planar or representation JSON")->required();
    svs->add_option("--output", sv.output, "artifact path");
    svs->add_flag("--json", sv.json_mode, "machine-readable report on stdout");

    GenOpts go;
    auto* gns = app.add_subcommand("gen-random", "seeded random instances");
    gns->add_option("kind", go.kind, "points|hypergraph|bipartite")->required();
    gns->add_option("--seed", go.seed, "random seed (default 0)");
    gns->add_option("--d", go.d, "points: dimension (default 3)");
    gns->add_option("--ell", go.ell, "points: subspace dimension tag (default 1)");
    gns->add_option("--count", go.count, "points: how many (default 10)");
    gns->add_option("--coord-min", go.coord_min, "points: smallest coordinate (default 0)");
    gns->add_option("--coord-max", go.coord_max, "points: largest coordinate (default 9)");
    gns->add_option("--k", go.k, "hypergraph: part count (default 3)");
    gns->add_option("--part-size", go.part_size, "hypergraph: vertices per part (default 3)");
    gns->add_option("--edges", go.edges, "hypergraph/bipartite: edge count (default 6)");
    gns->add_option("--left", go.left, "bipartite: left part size (default 3)");
    gns->add_option("--right", go.right, "bipartite: right part size (default 3)");
    gns->add_option("--output", go.output, "artifact path");
    gns->add_flag("--json", go.json_mode, "machine-readable report on stdout");

    struct {
        std::string input;
        bool json_mode = false, prune = false;
    } st;
    auto* sts = app.add_subcommand("stats", "hypergraph summary");
    sts->add_option("input", st.input, "hypergraph JSON")->required();
    sts->add_flag("--json", st.json_mode, "machine-readable report on stdout");
    sts->add_flag("--prune-isolated", st.prune, "drop vertices in no edge");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed()) return cmd_recognize(ro);
        if (fps->parsed()) return cmd_from_points(fp.input, fp.output, fp.json_mode);
        if (vfs->parsed()) return cmd_verify(vf.graph, vf.rep, vf.prune, vf.json_mode);
        if (ris->parsed()) return cmd_reduce_is(ri.input, ri.output, ri.json_mode);
        if (mbs->parsed()) return cmd_match_brute(mb.input, mb.cap, mb.json_mode);
        if (ibs->parsed()) return cmd_is_brute(ib.input, ib.cap, ib.json_mode);
        if (pjs->parsed()) return cmd_project(pj.input, pj.output, pj.seed, pj.json_mode);
        if (svs->parsed()) return cmd_svg(sv.input, sv.output, sv.json_mode);
        if (gns->parsed()) return cmd_gen_random(go);
        if (sts->parsed()) return cmd_stats(st.input, st.prune, st.json_mode);
    } catch (const size_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
