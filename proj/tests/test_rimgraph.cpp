#include "doctest.h"

#include "unfold/fixtures.hpp"
#include "unfold/rimgraph.hpp"

using namespace unfold;

TEST_CASE("cube rim graph: 2 nodes, 1 band edge, both face-nodes") {
    auto d = decompose(fixtures::cube());
    auto g = build_rim_graph(d);
    CHECK(g.nodeCount == 2);
    CHECK(g.edges.size() == 1);
    CHECK(g.edges[0].isBand);
    CHECK(g.faceNodes.size() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
}

TEST_CASE("box with x-parallel hole: 8 nodes, 4 band edges, cycle of z-edges") {
    auto d = decompose(fixtures::box_with_x_hole());
    auto g = build_rim_graph(d);
    CHECK(g.nodeCount == 8);
    int bandEdges = 0, zEdges = 0;
    for (const auto& e : g.edges) (e.isBand ? bandEdges : zEdges)++;
    CHECK(bandEdges == 4);
    CHECK(zEdges == 6);
    CHECK(g.faceNodes.size() == 2);
}

TEST_CASE("lemma 3 holds across the fixture corpus") {
    for (const auto& s : {fixtures::cube(), fixtures::box(2, 2, 1), fixtures::donut8(),
                          fixtures::fig1(), fixtures::fig2a(), fixtures::fig5(),
                          fixtures::fig6a(), fixtures::box_with_x_hole()}) {
        auto d = decompose(s);
        CHECK_NOTHROW(build_rim_graph(d)); // Lemma 3 checks are built in
    }
}

TEST_CASE("face_nodes lists exactly the enclosing rims") {
    auto d = decompose(fixtures::box_with_y_hole());
    auto g = build_rim_graph(d);
    CHECK(g.faceNodes.empty());
}

TEST_CASE("choose_orientation: cube picks the first axis") {
    auto o = choose_orientation(fixtures::cube());
    CHECK(o.axis == Axis::X);
    CHECK(o.graph.faceNodes.front() == o.rootRim);
}

TEST_CASE("choose_orientation: box with y-hole reorients away from y") {
    auto o = choose_orientation(fixtures::box_with_y_hole());
    CHECK(o.axis == Axis::X);
    CHECK(o.decomp.slabs.size() == 4);
    CHECK(!o.graph.faceNodes.empty());
}

TEST_CASE("explicit y axis on box-with-y-hole fails with NoFaceNodeDirection") {
    try {
        orient_with_axis(fixtures::box_with_y_hole(), Axis::Y);
        FAIL("expected");
    } catch (const UnfoldError& e) {
        CHECK(e.code() == Err::NoFaceNodeDirection);
    }
}

TEST_CASE("fig5 orientation yields two face-nodes") {
    auto o = choose_orientation(fixtures::fig5());
    CHECK(o.graph.faceNodes.size() == 2);
}

TEST_CASE("genus-3 fixture: axis search fails, genus gate trips first") {
    try {
        choose_orientation(fixtures::fig4b(), /*enforceGenus=*/false);
        FAIL("expected");
    } catch (const UnfoldError& e) {
        CHECK(e.code() == Err::NoFaceNodeDirection);
    }
    try {
        choose_orientation(fixtures::fig4b());
        FAIL("expected");
    } catch (const UnfoldError& e) {
        CHECK(e.code() == Err::GenusTooHigh);
    }
}

TEST_CASE("graph dumps are stable") {
    auto d = decompose(fixtures::box_with_x_hole());
    auto g = build_rim_graph(d);
    CHECK(g.dump_dot(d).find("graph Gr") == 0);
    CHECK(g.dump_json(d).find("face_nodes") != std::string::npos);
}
