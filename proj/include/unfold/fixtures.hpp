#pragma once

#include "unfold/solid.hpp"

namespace unfold::fixtures {

// 1x1x1 cube
VoxelSolid cube();

// axis-aligned box of the given cell dimensions
VoxelSolid box(int nx, int ny, int nz);

// 3x3x1 plate with its center cell removed; hole axis along y (genus 1)
VoxelSolid donut8();

// 3x3x3 box with a 1x1 hole straight through along x (genus 1)
VoxelSolid box_with_x_hole();

// 3x3x3 box with a 1x1 hole straight through along y (genus 1)
VoxelSolid box_with_y_hole();

// two boxes stacked along y, offset in x so their rims share segments
VoxelSolid stacked_offset_boxes();

// 7x4x7 box with a y-through tunnel and two front dents: 4 slabs, the second
// carrying three inner bands (genus 1)
VoxelSolid fig1();

// comb: spine with seven teeth; genus 0 and seven leaf bands
VoxelSolid fig2a();

// 5x3x1 plate with two y-holes: genus 2, seven bands when sliced along x
VoxelSolid fig5();

// two rings sharing a wall, stacked variant (genus 2)
VoxelSolid fig6a();

// 5x5x5 box with three disjoint axis tunnels: genus 3, no slicing direction
// yields a face-node
VoxelSolid fig4b();

// two facing jaws joined by a back wall; the surviving z-beam joins a top rim
// point to a bottom rim point, forcing a direction flip
VoxelSolid pliers();

} // namespace unfold::fixtures
