#include "unfold/rimgraph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace unfold {

RimGraph build_rim_graph(const SlabDecomposition& d) {
    RimGraph g;
    g.nodeCount = (int)d.rims.size();
    g.incident.assign(g.nodeCount, {});
    for (const Band& b : d.bands) {
        RimGraph::Edge e{(int)g.edges.size(), b.rimLo, b.rimHi, true, -1};
        g.incident[e.a].push_back(e.id);
        g.incident[e.b].push_back(e.id);
        g.edges.push_back(e);
    }
    for (const ZBeam& zb : d.beams) {
        RimGraph::Edge e{(int)g.edges.size(), zb.rimA, zb.rimB, false, zb.id};
        g.incident[e.a].push_back(e.id);
        g.incident[e.b].push_back(e.id);
        g.edges.push_back(e);
    }
    for (const Rim& r : d.rims)
        if (r.enclosesFace) g.faceNodes.push_back(r.id);

    // Prop. 1: face nodes have degree exactly 1
    for (int f : g.faceNodes)
        if (g.degree(f) != 1)
            throw UnfoldError(Err::InternalInvariant,
                              "face-node rim " + std::to_string(f) + " has degree " +
                                  std::to_string(g.degree(f)));

    // Lemma 3: connected
    std::vector<bool> vis(g.nodeCount, false);
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int eid : g.incident[v]) {
            const auto& e = g.edges[eid];
            int o = e.a == v ? e.b : e.a;
            if (!vis[o]) {
                vis[o] = true;
                ++cnt;
                q.push(o);
            }
        }
    }
    if (cnt != g.nodeCount)
        throw UnfoldError(Err::InternalInvariant, "rim graph disconnected");

    // Lemma 3: no nonface degree-1 node
    for (const Rim& r : d.rims)
        if (!r.enclosesFace && g.degree(r.id) == 1)
            throw UnfoldError(Err::InternalInvariant,
                              "nonface rim " + std::to_string(r.id) + " has degree 1");

    // rims of one patch mutually reachable through z-beam incidences
    for (const Patch& p : d.patches) {
        if (p.rims.size() <= 1) continue;
        std::set<int> rimset = p.rims;
        std::set<int> seen;
        std::queue<int> bq;
        bq.push(*rimset.begin());
        seen.insert(*rimset.begin());
        while (!bq.empty()) {
            int v = bq.front();
            bq.pop();
            for (int eid : g.incident[v]) {
                const auto& e = g.edges[eid];
                if (e.isBand) continue;
                int o = e.a == v ? e.b : e.a;
                if (rimset.count(o) && !seen.count(o)) {
                    seen.insert(o);
                    bq.push(o);
                }
            }
        }
        if (seen.size() != rimset.size())
            throw UnfoldError(Err::InternalInvariant,
                              "rims of patch " + std::to_string(p.id) +
                                  " not z-beam connected");
    }
    return g;
}

std::vector<int> face_nodes(const RimGraph& g) { return g.faceNodes; }

Orientation orient_with_axis(const VoxelSolid& solid, Axis axis) {
    Orientation o;
    o.axis = axis;
    o.solid = solid.reoriented(axis);
    o.decomp = decompose(o.solid);
    o.graph = build_rim_graph(o.decomp);
    if (o.graph.faceNodes.empty())
        throw UnfoldError(Err::NoFaceNodeDirection,
                          std::string("slicing along ") + axis_name(axis) +
                              " yields no face-node");
    o.rootRim = o.graph.faceNodes.front();
    return o;
}

Orientation choose_orientation(const VoxelSolid& solid, bool enforceGenus) {
    if (enforceGenus) {
        int g = genus(solid);
        if (g > 2)
            throw UnfoldError(Err::GenusTooHigh,
                              "genus " + std::to_string(g) + " exceeds 2");
    }
    std::string detail;
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        try {
            return orient_with_axis(solid, a);
        } catch (const UnfoldError& e) {
            if (e.code() != Err::NoFaceNodeDirection) throw;
            detail += std::string(detail.empty() ? "" : "; ") + e.what();
        }
    }
    throw UnfoldError(Err::NoFaceNodeDirection,
                      "no slicing direction yields a face-node (" + detail + ")");
}

std::string RimGraph::dump_dot(const SlabDecomposition& d) const {
    std::ostringstream out;
    out << "graph Gr {\n";
    for (const Rim& r : d.rims)
        out << "  r" << r.id << " [label=\"r" << r.id << " b" << r.band << " y" << r.y
            << (r.enclosesFace ? " F" : "") << "\"];\n";
    for (const Edge& e : edges)
        out << "  r" << e.a << " -- r" << e.b << (e.isBand ? " [style=bold];" : ";") << "\n";
    out << "}\n";
    return out.str();
}

std::string RimGraph::dump_json(const SlabDecomposition& d) const {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const Rim& r : d.rims)
        j["nodes"].push_back({{"rim", r.id},
                              {"band", r.band},
                              {"y", r.y},
                              {"encloses_face", r.enclosesFace}});
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : edges)
        j["edges"].push_back(
            {{"id", e.id}, {"a", e.a}, {"b", e.b}, {"kind", e.isBand ? "b" : "z"}, {"beam", e.beam}});
    j["face_nodes"] = faceNodes;
    return j.dump(2);
}

} // namespace unfold
