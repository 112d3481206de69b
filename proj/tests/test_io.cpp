#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ualg/context.hpp"
#include "ualg/errors.hpp"
#include "ualg/fixtures.hpp"
#include "ualg/io.hpp"

using namespace ualg;

namespace {

std::string data_path(const std::string& name) { return std::string(UALG_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("bundled files parse to the built-in fixtures") {
    CHECK(load_algebra_file(data_path("z6ring.alg")).algebra == fixtures::zn_ring(6));
    CHECK(load_algebra_file(data_path("z4ring.alg")).algebra == fixtures::zn_ring(4));
    CHECK(load_algebra_file(data_path("s3group.alg")).algebra == fixtures::s3_group());
    CHECK(load_algebra_file(data_path("b4lattice.alg")).algebra == fixtures::b4_lattice());
    CHECK(load_algebra_file(data_path("n5lattice.alg")).algebra == fixtures::n5_lattice());
    CHECK(load_algebra_file(data_path("one.alg")).algebra == fixtures::one_element());
}

TEST_CASE("parse then serialize is the identity on the bundled canonical files") {
    for (const char* name : {"z6ring.alg", "z4ring.alg", "z4group.alg", "s3group.alg",
                             "b4lattice.alg", "l3chain.alg", "n5lattice.alg", "one.alg",
                             "z2z2ring.alg"}) {
        std::string text = slurp(data_path(name));
        CHECK(serialize_algebra(parse_algebra_file(text)) == text);
    }
}

TEST_CASE("serialize then parse recovers the algebra, whitespace aside") {
    AlgebraFile messy = parse_algebra_file("algebra t\nsize 2\nop f 2\n   0   1\n\n1 0\n");
    CHECK(serialize_algebra(messy) == "algebra t\nsize 2\nop f 2\n0 1\n1 0\n");
    CHECK(parse_algebra_file(serialize_algebra(messy)).algebra == messy.algebra);
}

TEST_CASE("element names map to indices") {
    AlgebraFile f = parse_algebra_file(
        "algebra named\nsize 2\nelements lo hi\nop f 1\nhi lo\n");
    CHECK(f.element_names == std::vector<std::string>{"lo", "hi"});
    CHECK(f.algebra.table(0) == std::vector<Element>{1, 0});
}

TEST_CASE("one-element constant file") {
    AlgebraFile f = parse_algebra_file("algebra T\nsize 1\nop c 0\n0\n");
    CHECK(f.algebra.size() == 1);
    CHECK(f.algebra.signature().count() == 1);
    CHECK(f.algebra.signature().arity(0) == 0);
}

TEST_CASE("parser diagnostics carry line and column") {
    // entry out of range, at line 4
    try {
        parse_algebra_file("algebra t\nsize 6\nop f 1\n0 1 2 3 4 6\n");
        CHECK(false);
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("4:") == 0);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
    // short table: runs off the end
    CHECK_THROWS_AS(parse_algebra_file("algebra t\nsize 2\nop f 2\n0 1 1\n"), input_error);
    // duplicate operation name
    CHECK_THROWS_AS(
        parse_algebra_file("algebra t\nsize 1\nop c 0\n0\nop c 0\n0\n"), input_error);
    // garbage keyword
    CHECK_THROWS_AS(parse_algebra_file("algebra t\nsize 1\nfoo\n"), input_error);
    // missing size
    CHECK_THROWS_AS(parse_algebra_file("algebra t\nop c 0\n0\n"), input_error);
}

TEST_CASE("pair list parsing") {
    std::vector<ElementPair> pairs = parse_pair_list("0-2,1-3", 6);
    CHECK(pairs == std::vector<ElementPair>{{0, 2}, {1, 3}});
    CHECK_THROWS_AS(parse_pair_list("0-9", 6), input_error);
    CHECK_THROWS_AS(parse_pair_list("02", 6), input_error);
}

TEST_CASE("reports carry the schema version and are deterministic") {
    AlgebraFile f = load_algebra_file(data_path("z6ring.alg"));
    AlgebraContext cx = make_algebra_context(f.algebra);
    Json report = spectrum_report(f, cx.lat, cx.comm, cx.spec);
    CHECK(report["schema"] == kSchemaVersion);
    CHECK(report["report"] == "spectrum");
    CHECK(report["semiprime"] == true);
    CHECK(report["spec"].size() == 2);
    Json again = spectrum_report(f, cx.lat, cx.comm, cx.spec);
    CHECK(report.dump() == again.dump());

    std::string text = render_text(report);
    CHECK(text.find("semiprime: true") != std::string::npos);
}

TEST_CASE("dot export is deterministic and decorated") {
    AlgebraContext cx = make_algebra_context(fixtures::zn_ring(6));
    SpectrumReport spec = cx.spec;
    BooleanCenter center = boolean_center(cx.lat);
    std::string first = export_dot_con(cx.lat, &spec, &center);
    std::string second = export_dot_con(cx.lat, &spec, &center);
    CHECK(first == second);
    CHECK(first.find("digraph con {") == 0);
    CHECK(first.find("c0") != std::string::npos);
    CHECK(first.find("spec") != std::string::npos);
    // diamond: four nodes, four cover edges
    CHECK(std::count(first.begin(), first.end(), '\n') > 8);

    AlgebraContext one = make_algebra_context(fixtures::one_element());
    std::string single = export_dot_con(one.lat, nullptr, nullptr);
    CHECK(single.find("c0") != std::string::npos);
    CHECK(single.find("->") == std::string::npos); // no edges

    Topology min_topo = stone_topology(cx.alg, cx.lat, cx.spec, SpectrumPoints::Min);
    std::string topo_dot = export_dot_topology(cx.lat, min_topo, "z6 min");
    CHECK(topo_dot.find("p0") != std::string::npos);
    CHECK(topo_dot.find("p1") != std::string::npos);
    CHECK(topo_dot == export_dot_topology(cx.lat, min_topo, "z6 min"));
}

TEST_CASE("extension report shape") {
    AlgebraFile f = load_algebra_file(data_path("z2z2ring.alg"));
    AlgebraContext big = make_algebra_context(f.algebra);
    ExtensionContext cx = extension_context(make_extension(f.algebra, {0, 3}), big);
    Json report = extension_report(f, cx, analyze_extension(cx));
    CHECK(report["schema"] == kSchemaVersion);
    CHECK(report["admissible"] == true);
    CHECK(report["m_extension"] == true);
    CHECK(report["gamma"]["surjective"] == true);
    CHECK(report["gamma"]["injective"] == false);
    bool has_suite = false;
    for (const auto& entry : report["theorem_suite"]) {
        has_suite = true;
        CHECK(entry["verdict"] != "VIOLATION");
    }
    CHECK(has_suite);
}
