#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "unfold/geom.hpp"

namespace unfold {

// Finite set of unit lattice cells. Canonical input representation of an
// orthogonal polyhedron; all later arithmetic stays on the integer grid.
class VoxelSolid {
public:
    VoxelSolid() = default;
    explicit VoxelSolid(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    bool contains(const Cell& c) const { return cellset_.count(c) > 0; }
    std::size_t size() const { return cells_.size(); }

    Cell bbox_min() const { return bbmin_; }
    Cell bbox_max() const { return bbmax_; } // exclusive upper corner

    // Throws UnfoldError on empty input, disconnected cells, or a
    // non-manifold boundary (edge or vertex contact without a face fan).
    void validate() const;

    // Rotate so `axis` becomes the slicing axis y, then translate the
    // bounding-box minimum to the origin.
    VoxelSolid reoriented(Axis axis) const;

    // Translate bbox minimum to origin.
    VoxelSolid normalized() const;

    static VoxelSolid parse_text(const std::string& text);
    static VoxelSolid parse_json(const std::string& text);
    static VoxelSolid load_file(const std::string& path);
    std::string to_text() const;
    std::string to_json() const;

private:
    std::vector<Cell> cells_;
    std::set<Cell> cellset_;
    Cell bbmin_{0, 0, 0}, bbmax_{0, 0, 0};
};

// Closed orientable quad mesh of unit grid faces with outward normals.
struct SurfaceMesh {
    std::vector<SurfFace> faces;
    long long V = 0, E = 0, F = 0;

    long long euler() const { return V - E + F; }
};

// All unit faces between a solid and an empty cell. Checks closedness,
// manifold edges/vertices and surface connectivity.
SurfaceMesh extract_surface(const VoxelSolid& solid);

// g = (2 - (V - E + F)) / 2 for a closed connected orientable surface.
int genus(const SurfaceMesh& mesh);
int genus(const VoxelSolid& solid);

} // namespace unfold
