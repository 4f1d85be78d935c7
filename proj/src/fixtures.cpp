#include "unfold/fixtures.hpp"

namespace unfold::fixtures {

VoxelSolid cube() { return box(1, 1, 1); }

VoxelSolid box(int nx, int ny, int nz) {
    std::vector<Cell> cells;
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            for (int z = 0; z < nz; ++z) cells.push_back({x, y, z});
    return VoxelSolid(std::move(cells));
}

VoxelSolid donut8() {
    std::vector<Cell> cells;
    for (int x = 0; x < 3; ++x)
        for (int z = 0; z < 3; ++z)
            if (!(x == 1 && z == 1)) cells.push_back({x, 0, z});
    return VoxelSolid(std::move(cells));
}

VoxelSolid box_with_x_hole() {
    std::vector<Cell> cells;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                if (!(y == 1 && z == 1)) cells.push_back({x, y, z});
    return VoxelSolid(std::move(cells));
}

VoxelSolid box_with_y_hole() {
    std::vector<Cell> cells;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                if (!(x == 1 && z == 1)) cells.push_back({x, y, z});
    return VoxelSolid(std::move(cells));
}

VoxelSolid stacked_offset_boxes() {
    std::vector<Cell> cells;
    for (int x = 0; x < 2; ++x) cells.push_back({x, 0, 0});
    for (int x = 1; x < 3; ++x) cells.push_back({x, 1, 0});
    return VoxelSolid(std::move(cells));
}

VoxelSolid fig1() {
    std::vector<Cell> cells;
    auto removed = [](int x, int y, int z) {
        if (x == 2 && z == 2) return true;                 // tunnel through all y
        if (x == 4 && z == 2 && y <= 1) return true;        // front dent
        if (x == 4 && z == 4 && y <= 1) return true;        // second front dent
        return false;
    };
    for (int x = 0; x < 7; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 7; ++z)
                if (!removed(x, y, z)) cells.push_back({x, y, z});
    return VoxelSolid(std::move(cells));
}

VoxelSolid fig2a() {
    std::vector<Cell> cells;
    for (int x = 0; x < 13; ++x) cells.push_back({x, 0, 0});
    for (int k = 0; k < 7; ++k) cells.push_back({2 * k, 1, 0});
    return VoxelSolid(std::move(cells));
}

VoxelSolid fig5() {
    std::vector<Cell> cells;
    for (int x = 0; x < 5; ++x)
        for (int z = 0; z < 3; ++z)
            if (!((x == 1 || x == 3) && z == 1)) cells.push_back({x, 0, z});
    return VoxelSolid(std::move(cells));
}

VoxelSolid fig6a() {
    std::vector<Cell> cells;
    for (int x = 0; x < 3; ++x)
        for (int z = 0; z < 5; ++z)
            if (!(x == 1 && (z == 1 || z == 3))) cells.push_back({x, 0, z});
    return VoxelSolid(std::move(cells));
}

VoxelSolid pliers() {
    std::vector<Cell> cells;
    for (int x = 0; x < 3; ++x) {
        cells.push_back({x, 0, 0}); // bottom jaw
        cells.push_back({x, 0, 2}); // top jaw
        for (int z = 0; z < 3; ++z) cells.push_back({x, 1, z}); // back wall
    }
    return VoxelSolid(std::move(cells));
}

VoxelSolid fig4b() {
    std::vector<Cell> cells;
    auto removed = [](int x, int y, int z) {
        if (y == 1 && z == 1) return true; // x tunnel
        if (x == 3 && z == 3) return true; // y tunnel
        if (x == 1 && y == 3) return true; // z tunnel
        return false;
    };
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            for (int z = 0; z < 5; ++z)
                if (!removed(x, y, z)) cells.push_back({x, y, z});
    return VoxelSolid(std::move(cells));
}

} // namespace unfold::fixtures
