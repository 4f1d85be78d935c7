#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "unfold/fixtures.hpp"
#include "unfold/slab.hpp"
#include "unfold/solid.hpp"

using namespace unfold;

namespace {

// independent oracle: count faces/edges/vertices of a cell set by brute force
struct BruteCounts {
    long long V, E, F;
};

BruteCounts brute_surface_counts(const VoxelSolid& s) {
    std::set<std::tuple<int, int, int, int>> faces; // (axis, x, y, z) of face min corner
    auto solid = [&](int x, int y, int z) { return s.contains({x, y, z}); };
    Cell lo = s.bbox_min(), hi = s.bbox_max();
    std::set<std::array<int, 3>> verts;
    std::set<std::array<int, 6>> edges;
    for (int x = lo.x - 1; x <= hi.x; ++x)
        for (int y = lo.y - 1; y <= hi.y; ++y)
            for (int z = lo.z - 1; z <= hi.z; ++z) {
                struct D {
                    int axis, dx, dy, dz;
                };
                for (const D& d : {D{0, 1, 0, 0}, D{1, 0, 1, 0}, D{2, 0, 0, 1}}) {
                    bool a = solid(x, y, z), b = solid(x + d.dx, y + d.dy, z + d.dz);
                    if (a == b) continue;
                    int fx = x + d.dx, fy = y + d.dy, fz = z + d.dz;
                    faces.insert({d.axis, fx, fy, fz});
                    // face corners
                    std::array<std::array<int, 3>, 4> quad;
                    if (d.axis == 0)
                        quad = {{{fx, fy, fz}, {fx, fy + 1, fz}, {fx, fy + 1, fz + 1}, {fx, fy, fz + 1}}};
                    else if (d.axis == 1)
                        quad = {{{fx, fy, fz}, {fx + 1, fy, fz}, {fx + 1, fy, fz + 1}, {fx, fy, fz + 1}}};
                    else
                        quad = {{{fx, fy, fz}, {fx + 1, fy, fz}, {fx + 1, fy + 1, fz}, {fx, fy + 1, fz}}};
                    for (int i = 0; i < 4; ++i) {
                        verts.insert(quad[i]);
                        auto p = quad[i], q = quad[(i + 1) % 4];
                        if (q < p) std::swap(p, q);
                        edges.insert({p[0], p[1], p[2], q[0], q[1], q[2]});
                    }
                }
            }
    return {(long long)verts.size(), (long long)edges.size(), (long long)faces.size()};
}

} // namespace

TEST_CASE("unit cube surface counts") {
    auto mesh = extract_surface(fixtures::cube());
    CHECK(mesh.F == 6);
    CHECK(mesh.V == 8);
    CHECK(mesh.E == 12);
    CHECK(genus(mesh) == 0);
}

TEST_CASE("diagonal domino is non-manifold at an edge") {
    VoxelSolid s({{0, 0, 0}, {1, 1, 0}});
    CHECK_THROWS_WITH_AS(extract_surface(s), doctest::Contains("non-manifold edge"),
                         UnfoldError);
}

TEST_CASE("vertex-touching cubes are non-manifold at a vertex") {
    VoxelSolid s({{0, 0, 0}, {1, 1, 1}});
    CHECK_THROWS_AS(extract_surface(s), UnfoldError);
}

TEST_CASE("disconnected cells rejected") {
    VoxelSolid s({{0, 0, 0}, {3, 0, 0}});
    try {
        extract_surface(s);
        FAIL("expected");
    } catch (const UnfoldError& e) {
        CHECK(e.code() == Err::Disconnected);
    }
}

TEST_CASE("interior void rejected (disconnected surface)") {
    std::vector<Cell> cells;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                if (!(x == 1 && y == 1 && z == 1)) cells.push_back({x, y, z});
    try {
        extract_surface(VoxelSolid(cells));
        FAIL("expected");
    } catch (const UnfoldError& e) {
        CHECK(e.code() == Err::Disconnected);
    }
}

TEST_CASE("donut-8 counts match brute-force oracle and genus 1") {
    auto s = fixtures::donut8();
    auto brute = brute_surface_counts(s);
    auto mesh = extract_surface(s);
    CHECK(mesh.V == brute.V);
    CHECK(mesh.E == brute.E);
    CHECK(mesh.F == brute.F);
    CHECK(mesh.euler() == 0);
    CHECK(genus(mesh) == 1);
}

TEST_CASE("double donut has genus 2") {
    auto s = fixtures::fig5();
    auto brute = brute_surface_counts(s);
    auto mesh = extract_surface(s);
    CHECK(mesh.euler() == brute.V - brute.E + brute.F);
    CHECK(genus(mesh) == 2);
    CHECK(genus(fixtures::fig6a()) == 2);
}

TEST_CASE("fig4b fixture has genus 3") { CHECK(genus(fixtures::fig4b()) == 3); }

TEST_CASE("fig1 fixture has genus 1") { CHECK(genus(fixtures::fig1()) == 1); }

TEST_CASE("reorient preserves cells for y and permutes for x") {
    auto c = fixtures::cube();
    CHECK(c.reoriented(Axis::Y).cells() == c.cells());

    auto hole = fixtures::box_with_y_hole();
    auto r = hole.reoriented(Axis::X);
    CHECK(r.size() == hole.size());
    CHECK(genus(r) == genus(hole));
    // hole axis now along x: slicing along y must produce 4 slabs
    auto d = decompose(r);
    CHECK(d.slabs.size() == 4);
}

TEST_CASE("reorient x twice returns to original up to translation") {
    auto s = fixtures::fig1();
    auto r1 = s.reoriented(Axis::X);
    // applying the inverse mapping: rotating three more times about z
    auto r4 = r1.reoriented(Axis::X).reoriented(Axis::X).reoriented(Axis::X);
    CHECK(r4.normalized().cells() == s.normalized().cells());
}

TEST_CASE("genus invariant under reorientation (corpus)") {
    for (const auto& s : {fixtures::donut8(), fixtures::fig1(), fixtures::fig5(),
                          fixtures::fig2a(), fixtures::box(2, 2, 1)}) {
        int g = genus(s);
        for (Axis a : {Axis::X, Axis::Y, Axis::Z}) CHECK(genus(s.reoriented(a)) == g);
    }
}

TEST_CASE("surface extraction commutes with axis permutation") {
    auto s = fixtures::fig1();
    for (Axis a : {Axis::X, Axis::Z}) {
        auto r = s.reoriented(a);
        auto m1 = extract_surface(r);
        auto m0 = extract_surface(s);
        CHECK(m1.F == m0.F);
        CHECK(m1.E == m0.E);
        CHECK(m1.V == m0.V);
    }
}

TEST_CASE("outward normals point from solid into empty") {
    auto s = fixtures::donut8();
    auto mesh = extract_surface(s);
    for (const SurfFace& f : mesh.faces) {
        // face at corner with normal axis a, sign s: solid cell is on -s side
        int ix = f.corner.x, iy = f.corner.y, iz = f.corner.z;
        Cell solidCell, emptyCell;
        switch (f.normal) {
            case Axis::X:
                solidCell = {f.sign > 0 ? ix - 1 : ix, iy, iz};
                emptyCell = {f.sign > 0 ? ix : ix - 1, iy, iz};
                break;
            case Axis::Y:
                solidCell = {ix, f.sign > 0 ? iy - 1 : iy, iz};
                emptyCell = {ix, f.sign > 0 ? iy : iy - 1, iz};
                break;
            case Axis::Z:
                solidCell = {ix, iy, f.sign > 0 ? iz - 1 : iz};
                emptyCell = {ix, iy, f.sign > 0 ? iz : iz - 1};
                break;
        }
        CHECK(s.contains(solidCell));
        CHECK(!s.contains(emptyCell));
    }
}

TEST_CASE("voxel text and json formats round-trip") {
    auto s = fixtures::fig5();
    CHECK(VoxelSolid::parse_text(s.to_text()).cells() == s.cells());
    CHECK(VoxelSolid::parse_json(s.to_json()).cells() == s.cells());
    CHECK(VoxelSolid::parse_text("# comment\n0 0 0\n").cells() ==
          std::vector<Cell>{{0, 0, 0}});
    CHECK_THROWS_AS(VoxelSolid::parse_text("1 2\n"), UnfoldError);
}
