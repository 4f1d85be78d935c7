#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "unfold/solid.hpp"

namespace unfold {

// Solid connected component between two consecutive slicing planes.
struct Slab {
    int id;
    int y0, y1; // y-interval (unit thickness for polycube slicing)
    std::vector<XZ> cells;
    int outerBand = -1;
    std::vector<int> innerBands;
};

// Closed cycle of {left,right,top,bottom} faces around a slab or a hole.
// `loop` lists cross-section vertices so that traversal appears
// counterclockwise viewed from y = -infinity; face j spans loop[j]->loop[j+1].
struct Band {
    int id;
    int slab;
    bool inner;
    int y0, y1;
    std::vector<XZ> loop;
    int rimLo = -1, rimHi = -1; // rims at y0 and y1

    int perimeter() const { return (int)loop.size(); }
};

// Band boundary cycle in one slicing plane.
struct Rim {
    int id;
    int band;
    int y;
    bool enclosesFace = false;
    std::vector<XZ> loop; // same vertices as the band loop
};

// Vertical strip on a +-y face region connecting two rims; zero geometric
// height where the rims share a segment.
struct ZBeam {
    int id;
    int rimA, rimB;
    int y;      // plane
    int x0, x1; // x-interval
    int zA, zB; // z of rimA-side edge and rimB-side edge (zA == zB: zero height)
    int patch;  // -1 for zero-height beams
};

// Maximal connected coplanar surface piece in a slicing plane.
struct Patch {
    int id;
    int y;
    int sign; // outward normal +-y
    std::vector<XZ> squares;
    std::set<int> rims; // rims owning boundary edges of the patch
};

struct SlabDecomposition {
    VoxelSolid solid;
    SurfaceMesh mesh;
    std::vector<Slab> slabs;
    std::vector<Band> bands;
    std::vector<Rim> rims;
    std::vector<Patch> patches;
    std::vector<ZBeam> beams;

    const Band& band_of_rim(int rim) const { return bands[rims[rim].band]; }

    // sum of band-face areas and patch areas; must equal mesh area
    long long band_area() const;
    long long patch_area() const;

    std::string dump_json() const;
};

// Slice the surface with y-perpendicular planes through every integer y.
SlabDecomposition slice(const VoxelSolid& solid);

// Compute encloses_face for every rim by the interior lattice scan.
void classify_rims(SlabDecomposition& d);

// Trace all vertical extensions from horizontal rim edges; record canonical
// beams (one widest representative per rim pair per patch, one per maximal
// shared segment for zero-height contacts).
void find_zbeams(SlabDecomposition& d);

// slice + classify_rims + find_zbeams
SlabDecomposition decompose(const VoxelSolid& solid);

// True iff the unit square with corner (x,z) in plane y is a surface face;
// sign receives the outward normal.
bool plane_face(const VoxelSolid& solid, int x, int y, int z, int* sign = nullptr);

// Lattice squares strictly inside a rim loop.
std::vector<XZ> rim_interior_squares(const Rim& rim);

} // namespace unfold
