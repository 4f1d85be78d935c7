#pragma once

#include <string>
#include <vector>

#include "unfold/rational.hpp"
#include "unfold/rimgraph.hpp"

namespace unfold {

// Spanning tree of G_r produced by the rim-unfolding-tree reduction: all band
// edges retained, cycles broken by removing z-edges at nodes that keep
// degree >= 2.
struct RimTree {
    int root; // rim id (a face-node)
    std::vector<RimGraph::Edge> edges;
    struct Removal {
        int iteration;
        int pickedNode;
        int removedEdge;
    };
    std::vector<Removal> removals;
    std::vector<int> createdLeaves; // leaves that were not leaves in G_r

    std::string dump_json() const;
};

RimTree rim_unfolding_tree(const RimGraph& g, int rootRim);

// Number of degree-1 nodes whose rim does not enclose a face; asserts the
// Theorem 1 bound k <= genus.
int count_nonface_leaves(const RimTree& t, const SlabDecomposition& d, int genus);

// Band-level unfolding tree. Splitting a band introduces synthetic halves
// with rational y-intervals; their shared rim is synthetic (rim id -1).
struct BandNode {
    int id;
    int band; // original band id
    Rat y0, y1;
    int frontRim, backRim; // rim ids, -1 for the synthetic split rim
    Rat frontY, backY;
    bool backRimFace = false;
    int parent = -1;
    int parentBeam = -1; // ZBeam id; -2 synthetic split edge; -1 root
    std::vector<int> frontChildren, backChildren;
    int dir = +1; // +1 ccw, -1 cw
    enum class Kind { Root, Internal, FaceLeaf, NonfaceLeaf } kind = Kind::Internal;

    bool is_leaf() const { return frontChildren.empty() && backChildren.empty(); }
};

struct BandTree {
    int root = -1;
    std::vector<BandNode> nodes;
    int faceLeaves = 0;
    int nonfaceLeaves = 0;

    std::string dump_json(const RimTree& rt) const;
};

// Contract band edges of T_r; children classified front/back by which rim
// their z-edge attaches to.
BandTree contract_to_band_tree(const RimTree& t, const SlabDecomposition& d);

// Cut every non-leaf band lacking back children (and a childless root) at
// mid-height; the back half becomes a back leaf child.
void split_no_back_child_nodes(BandTree& t, const SlabDecomposition& d);

// Preorder direction assignment: root counterclockwise, flip across z-beams
// joining a top rim point to a bottom rim point.
void assign_directions(BandTree& t, const SlabDecomposition& d);

// contract + split + directions + leaf classification
BandTree build_band_tree(const RimTree& t, const SlabDecomposition& d);

// True iff the horizontal rim edge starting at (x,z) in `rim` sits on a +z
// band face (a "top rim point").
bool rim_edge_is_top(const SlabDecomposition& d, int rim, int x, int z);

} // namespace unfold
