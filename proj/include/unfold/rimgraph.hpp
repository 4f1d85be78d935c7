#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unfold/slab.hpp"

namespace unfold {

// Rim graph G_r: one node per rim, a band edge joining the two rims of each
// band, and a z-edge per canonical z-beam. May be a multigraph (two rims can
// be connected through several patches or shared segments).
struct RimGraph {
    struct Edge {
        int id;
        int a, b;
        bool isBand;
        int beam; // ZBeam id for z-edges, -1 for band edges
    };

    int nodeCount = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> incident; // node -> edge ids
    std::vector<int> faceNodes;             // rims with encloses_face

    int degree(int node) const { return (int)incident[node].size(); }
    std::string dump_dot(const SlabDecomposition& d) const;
    std::string dump_json(const SlabDecomposition& d) const;
};

// Build G_r and assert the structural facts used downstream: face nodes have
// degree exactly one (Prop. 1), the graph is connected and has no nonface
// degree-1 node (Lemma 3), and the rims of each z-patch are mutually
// reachable through z-beam incidences.
RimGraph build_rim_graph(const SlabDecomposition& d);

std::vector<int> face_nodes(const RimGraph& g);

struct Orientation {
    Axis axis;
    VoxelSolid solid; // reoriented + normalized
    SlabDecomposition decomp;
    RimGraph graph;
    int rootRim;
};

// Try axes x, y, z in order; return the first whose rim graph has a
// face-node (root = smallest face-node id). Throws GenusTooHigh when
// genus > 2 (checked first when enforceGenus), NoFaceNodeDirection when all
// three axes fail.
Orientation choose_orientation(const VoxelSolid& solid, bool enforceGenus = true);

// Orientation for one fixed axis; throws NoFaceNodeDirection if that slicing
// direction yields no face-node.
Orientation orient_with_axis(const VoxelSolid& solid, Axis axis);

} // namespace unfold
