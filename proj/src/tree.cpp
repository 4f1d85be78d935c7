#include "unfold/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "json.hpp"

namespace unfold {

namespace {

// Non-bridge edges of a multigraph (the union of all simple cycles).
std::set<int> nonbridge_edges(int n, const std::vector<RimGraph::Edge>& edges) {
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (other, edge id)
    for (const auto& e : edges) {
        adj[e.a].push_back({e.b, e.id});
        adj[e.b].push_back({e.a, e.id});
    }
    std::vector<int> disc(n, -1), low(n, 0);
    std::set<int> bridges;
    int timer = 0;
    // iterative DFS to dodge recursion limits
    struct Frame {
        int v, parentEdge;
        std::size_t i;
    };
    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        std::vector<Frame> st{{s, -1, 0}};
        disc[s] = low[s] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.i < adj[f.v].size()) {
                auto [to, eid] = adj[f.v][f.i++];
                if (eid == f.parentEdge) continue;
                if (disc[to] == -1) {
                    disc[to] = low[to] = timer++;
                    st.push_back({to, eid, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[to]);
                }
            } else {
                int v = f.v, pe = f.parentEdge;
                st.pop_back();
                if (!st.empty()) {
                    int u = st.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] > disc[u]) bridges.insert(pe);
                }
            }
        }
    }
    std::set<int> nb;
    for (const auto& e : edges)
        if (!bridges.count(e.id)) nb.insert(e.id);
    return nb;
}

} // namespace

RimTree rim_unfolding_tree(const RimGraph& g, int rootRim) {
    RimTree t;
    t.root = rootRim;
    t.edges = g.edges;

    std::vector<int> degree(g.nodeCount, 0);
    for (const auto& e : t.edges) {
        degree[e.a]++;
        degree[e.b]++;
    }
    std::vector<bool> wasLeaf(g.nodeCount);
    for (int v = 0; v < g.nodeCount; ++v) wasLeaf[v] = degree[v] == 1;

    std::set<int> pickedNodes;
    int iter = 0;
    while (true) {
        std::set<int> H = nonbridge_edges(g.nodeCount, t.edges);
        if (H.empty()) break;
        ++iter;
        std::size_t before = t.edges.size();

        std::set<int> VH;
        std::map<int, std::vector<int>> incidentH, incidentOut;
        for (const auto& e : t.edges) {
            if (H.count(e.id)) {
                VH.insert(e.a);
                VH.insert(e.b);
                incidentH[e.a].push_back(e.id);
                incidentH[e.b].push_back(e.id);
            } else {
                incidentOut[e.a].push_back(e.id);
                incidentOut[e.b].push_back(e.id);
            }
        }
        int u = -1;
        for (int v : VH)
            if (!incidentOut[v].empty()) { u = v; break; } // smallest node id (set order)
        if (u < 0)
            throw UnfoldError(Err::InternalInvariant,
                              "no node of H has an edge outside H");
        int removeId = -1;
        for (int eid : incidentH[u]) {
            bool isBand = false;
            for (const auto& e : t.edges)
                if (e.id == eid) { isBand = e.isBand; break; }
            if (!isBand && (removeId < 0 || eid < removeId)) removeId = eid;
        }
        if (removeId < 0)
            throw UnfoldError(Err::InternalInvariant,
                              "picked node has no cycle z-edge");
        t.edges.erase(std::remove_if(t.edges.begin(), t.edges.end(),
                                     [&](const RimGraph::Edge& e) { return e.id == removeId; }),
                      t.edges.end());
        if (t.edges.size() != before - 1)
            throw UnfoldError(Err::InternalInvariant, "removal did not shrink edge set");
        t.removals.push_back({iter, u, removeId});
        pickedNodes.insert(u);
    }

    // spanning tree checks
    if ((int)t.edges.size() != g.nodeCount - 1)
        throw UnfoldError(Err::InternalInvariant, "result is not a spanning tree");
    std::vector<int> deg(g.nodeCount, 0);
    for (const auto& e : t.edges) {
        deg[e.a]++;
        deg[e.b]++;
    }
    for (int u : pickedNodes)
        if (deg[u] < 2)
            throw UnfoldError(Err::InternalInvariant,
                              "picked node " + std::to_string(u) + " became a leaf");
    int bandEdges = 0;
    for (const auto& e : t.edges)
        if (e.isBand) ++bandEdges;
    int totalBand = 0;
    for (const auto& e : g.edges)
        if (e.isBand) ++totalBand;
    if (bandEdges != totalBand)
        throw UnfoldError(Err::InternalInvariant, "a band edge was removed");
    for (int v = 0; v < g.nodeCount; ++v)
        if (deg[v] == 1 && !wasLeaf[v]) t.createdLeaves.push_back(v);
    return t;
}

int count_nonface_leaves(const RimTree& t, const SlabDecomposition& d, int genus) {
    std::vector<int> deg(d.rims.size(), 0);
    for (const auto& e : t.edges) {
        deg[e.a]++;
        deg[e.b]++;
    }
    int k = 0;
    for (const Rim& r : d.rims)
        if (deg[r.id] == 1 && !r.enclosesFace) ++k;
    if (k > genus)
        throw UnfoldError(Err::InternalInvariant,
                          "nonface-leaf count " + std::to_string(k) + " exceeds genus " +
                              std::to_string(genus));
    return k;
}

bool rim_edge_is_top(const SlabDecomposition& d, int rim, int x, int z) {
    const Band& b = d.band_of_rim(rim);
    const Slab& s = d.slabs[b.slab];
    std::set<XZ> cells(s.cells.begin(), s.cells.end());
    bool below = cells.count({x, z - 1}) > 0;
    bool above = cells.count({x, z}) > 0;
    if (below == above)
        throw UnfoldError(Err::InternalInvariant, "rim edge not on slab boundary");
    return below; // solid below => +z band face => top rim point
}

BandTree contract_to_band_tree(const RimTree& t, const SlabDecomposition& d) {
    // rim tree adjacency
    std::vector<std::vector<RimGraph::Edge>> adj(d.rims.size());
    for (const auto& e : t.edges) {
        adj[e.a].push_back(e);
        adj[e.b].push_back(e);
    }
    // orient the rim tree from the root: parent rim of each rim
    std::vector<int> parentRim(d.rims.size(), -2);
    std::vector<int> parentEdgeBeam(d.rims.size(), -1);
    std::queue<int> q;
    q.push(t.root);
    parentRim[t.root] = -1;
    std::vector<int> order;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (const auto& e : adj[v]) {
            int o = e.a == v ? e.b : e.a;
            if (parentRim[o] != -2) continue;
            parentRim[o] = v;
            parentEdgeBeam[o] = e.isBand ? -1 : e.beam;
            q.push(o);
        }
    }

    BandTree bt;
    std::map<int, int> bandNode; // band id -> node id
    // create nodes in BFS-rim order so parents precede children
    for (int rimId : order) {
        int bandId = d.rims[rimId].band;
        if (bandNode.count(bandId)) continue;
        BandNode n;
        n.id = (int)bt.nodes.size();
        n.band = bandId;
        const Band& b = d.bands[bandId];
        n.y0 = Rat(b.y0);
        n.y1 = Rat(b.y1);
        // the first-reached rim of the band is its front rim
        n.frontRim = rimId;
        n.backRim = (b.rimLo == rimId) ? b.rimHi : b.rimLo;
        n.frontY = Rat(d.rims[n.frontRim].y);
        n.backY = Rat(d.rims[n.backRim].y);
        n.backRimFace = d.rims[n.backRim].enclosesFace;
        bandNode[bandId] = n.id;
        bt.nodes.push_back(n);
    }
    bt.root = bandNode[d.rims[t.root].band];
    if (bt.nodes[bt.root].frontRim != t.root)
        throw UnfoldError(Err::InternalInvariant, "root band front rim mismatch");

    // attach children via surviving z-edges
    for (const auto& e : t.edges) {
        if (e.isBand) continue;
        // the child side is the rim whose parentRim is the other endpoint
        int childRim, parentSideRim;
        if (parentRim[e.a] == e.b) {
            childRim = e.a;
            parentSideRim = e.b;
        } else if (parentRim[e.b] == e.a) {
            childRim = e.b;
            parentSideRim = e.a;
        } else {
            throw UnfoldError(Err::InternalInvariant, "z-edge not parent-oriented");
        }
        int childNode = bandNode[d.rims[childRim].band];
        int parentNode = bandNode[d.rims[parentSideRim].band];
        BandNode& cn = bt.nodes[childNode];
        BandNode& pn = bt.nodes[parentNode];
        if (cn.frontRim != childRim)
            throw UnfoldError(Err::InternalInvariant, "child attaches on non-front rim");
        cn.parent = parentNode;
        cn.parentBeam = e.beam;
        if (parentSideRim == pn.frontRim)
            pn.frontChildren.push_back(childNode);
        else if (parentSideRim == pn.backRim)
            pn.backChildren.push_back(childNode);
        else
            throw UnfoldError(Err::InternalInvariant, "attachment rim not on parent band");
    }
    return bt;
}

void split_no_back_child_nodes(BandTree& t, const SlabDecomposition& d) {
    (void)d;
    std::size_t count = t.nodes.size();
    for (std::size_t i = 0; i < count; ++i) {
        BandNode& b = t.nodes[i];
        bool needsSplit =
            b.backChildren.empty() && (!b.frontChildren.empty() || (int)i == t.root);
        if (!needsSplit) continue;
        // cut at mid-height: the front half keeps the node id
        Rat mid = (b.y0 + b.y1) / Rat(2);
        BandNode back;
        back.id = (int)t.nodes.size();
        back.band = b.band;
        back.frontRim = -1; // synthetic split rim
        back.backRim = b.backRim;
        back.backRimFace = b.backRimFace;
        back.parent = b.id;
        back.parentBeam = -2;
        // y-interval halves oriented by where the front rim sits
        if (b.frontY == b.y0) {
            // front at low y: front half [y0, mid], back half [mid, y1]
            back.y0 = mid;
            back.y1 = b.y1;
            back.frontY = mid;
            back.backY = b.backY;
            b.y1 = mid;
            b.backY = mid;
        } else {
            back.y0 = b.y0;
            back.y1 = mid;
            back.frontY = mid;
            back.backY = b.backY;
            b.y0 = mid;
            b.backY = mid;
        }
        b.backRim = -1;
        b.backRimFace = false;
        b.backChildren.push_back(back.id);
        t.nodes.push_back(back);
    }
    // classify kinds + leaf counts
    t.faceLeaves = t.nonfaceLeaves = 0;
    for (BandNode& n : t.nodes) {
        if (n.is_leaf() && n.id != t.root) {
            if (n.backRim < 0)
                throw UnfoldError(Err::InternalInvariant, "leaf with synthetic back rim");
            n.kind = n.backRimFace ? BandNode::Kind::FaceLeaf : BandNode::Kind::NonfaceLeaf;
            (n.backRimFace ? t.faceLeaves : t.nonfaceLeaves)++;
        } else if (n.id == t.root) {
            n.kind = BandNode::Kind::Root;
        } else {
            n.kind = BandNode::Kind::Internal;
        }
    }
    // invariant: every non-leaf has a back child
    for (const BandNode& n : t.nodes)
        if (!n.is_leaf() && n.backChildren.empty())
            throw UnfoldError(Err::InternalInvariant,
                              "non-leaf band without back child after splitting");
}

void assign_directions(BandTree& t, const SlabDecomposition& d) {
    std::function<void(int)> walk = [&](int id) {
        BandNode& n = t.nodes[id];
        for (int group = 0; group < 2; ++group) {
            for (int c : group == 0 ? n.backChildren : n.frontChildren) {
                BandNode& cn = t.nodes[c];
                if (cn.parentBeam < 0) {
                    cn.dir = n.dir; // synthetic split edge inherits
                } else {
                    const ZBeam& zb = d.beams[cn.parentBeam];
                    bool topA = rim_edge_is_top(d, zb.rimA, zb.x0, zb.zA);
                    bool topB = rim_edge_is_top(d, zb.rimB, zb.x0, zb.zB);
                    cn.dir = (topA == topB) ? n.dir : -n.dir;
                }
                walk(c);
            }
        }
    };
    t.nodes[t.root].dir = +1;
    walk(t.root);
}

BandTree build_band_tree(const RimTree& t, const SlabDecomposition& d) {
    BandTree bt = contract_to_band_tree(t, d);
    split_no_back_child_nodes(bt, d);
    assign_directions(bt, d);
    return bt;
}

std::string RimTree::dump_json() const {
    nlohmann::json j;
    j["root"] = root;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : edges)
        j["edges"].push_back({{"id", e.id}, {"a", e.a}, {"b", e.b}, {"kind", e.isBand ? "b" : "z"}});
    j["removals"] = nlohmann::json::array();
    for (const auto& r : removals)
        j["removals"].push_back(
            {{"iteration", r.iteration}, {"u", r.pickedNode}, {"edge", r.removedEdge}});
    j["created_leaves"] = createdLeaves;
    return j.dump(2);
}

std::string BandTree::dump_json(const RimTree& rt) const {
    nlohmann::json j;
    j["root"] = root;
    j["face_leaves"] = faceLeaves;
    j["nonface_leaves"] = nonfaceLeaves;
    j["nodes"] = nlohmann::json::array();
    for (const BandNode& n : nodes) {
        nlohmann::json jn;
        jn["id"] = n.id;
        jn["band"] = n.band;
        jn["y"] = {n.y0.str(), n.y1.str()};
        jn["front_rim"] = n.frontRim;
        jn["back_rim"] = n.backRim;
        jn["parent"] = n.parent;
        jn["dir"] = n.dir > 0 ? "ccw" : "cw";
        switch (n.kind) {
            case BandNode::Kind::Root: jn["kind"] = "root"; break;
            case BandNode::Kind::Internal: jn["kind"] = "internal"; break;
            case BandNode::Kind::FaceLeaf: jn["kind"] = "face-leaf"; break;
            case BandNode::Kind::NonfaceLeaf: jn["kind"] = "nonface-leaf"; break;
        }
        jn["front_children"] = n.frontChildren;
        jn["back_children"] = n.backChildren;
        j["nodes"].push_back(jn);
    }
    j["removal_log"] = nlohmann::json::parse(rt.dump_json())["removals"];
    return j.dump(2);
}

} // namespace unfold
