#include "unfold/solid.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace unfold {

VoxelSolid::VoxelSolid(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    cellset_ = std::set<Cell>(cells_.begin(), cells_.end());
    if (!cells_.empty()) {
        bbmin_ = bbmax_ = cells_[0];
        for (const Cell& c : cells_) {
            bbmin_.x = std::min(bbmin_.x, c.x);
            bbmin_.y = std::min(bbmin_.y, c.y);
            bbmin_.z = std::min(bbmin_.z, c.z);
            bbmax_.x = std::max(bbmax_.x, c.x + 1);
            bbmax_.y = std::max(bbmax_.y, c.y + 1);
            bbmax_.z = std::max(bbmax_.z, c.z + 1);
        }
    }
}

void VoxelSolid::validate() const {
    if (cells_.empty())
        throw UnfoldError(Err::Parse, "solid is empty");

    // 6-connectivity of the cell set
    std::set<Cell> seen;
    std::queue<Cell> q;
    q.push(cells_[0]);
    seen.insert(cells_[0]);
    const int dx[6] = {1, -1, 0, 0, 0, 0};
    const int dy[6] = {0, 0, 1, -1, 0, 0};
    const int dz[6] = {0, 0, 0, 0, 1, -1};
    while (!q.empty()) {
        Cell c = q.front();
        q.pop();
        for (int k = 0; k < 6; ++k) {
            Cell n{c.x + dx[k], c.y + dy[k], c.z + dz[k]};
            if (contains(n) && !seen.count(n)) {
                seen.insert(n);
                q.push(n);
            }
        }
    }
    if (seen.size() != cells_.size())
        throw UnfoldError(Err::Disconnected, "solid has multiple connected components");

    // Manifold edges: around each lattice edge the 4 incident cells must not
    // form a diagonal pair. Check all edges of all cells, each edge keyed by
    // its minimal corner and direction.
    auto solid = [&](int x, int y, int z) { return contains({x, y, z}); };
    for (const Cell& c : cells_) {
        // edges parallel to X at (y,z) corners
        for (int oy = 0; oy <= 1; ++oy)
            for (int oz = 0; oz <= 1; ++oz) {
                int y = c.y + oy, z = c.z + oz;
                bool a = solid(c.x, y - 1, z - 1), b = solid(c.x, y, z - 1);
                bool d = solid(c.x, y - 1, z), e = solid(c.x, y, z);
                if ((a && e && !b && !d) || (b && d && !a && !e))
                    throw UnfoldError(Err::NonManifold,
                                      "non-manifold edge at x-edge (" + std::to_string(c.x) + "," +
                                          std::to_string(y) + "," + std::to_string(z) + ")");
            }
        for (int ox = 0; ox <= 1; ++ox)
            for (int oz = 0; oz <= 1; ++oz) {
                int x = c.x + ox, z = c.z + oz;
                bool a = solid(x - 1, c.y, z - 1), b = solid(x, c.y, z - 1);
                bool d = solid(x - 1, c.y, z), e = solid(x, c.y, z);
                if ((a && e && !b && !d) || (b && d && !a && !e))
                    throw UnfoldError(Err::NonManifold,
                                      "non-manifold edge at y-edge (" + std::to_string(x) + "," +
                                          std::to_string(c.y) + "," + std::to_string(z) + ")");
            }
        for (int ox = 0; ox <= 1; ++ox)
            for (int oy = 0; oy <= 1; ++oy) {
                int x = c.x + ox, y = c.y + oy;
                bool a = solid(x - 1, y - 1, c.z), b = solid(x, y - 1, c.z);
                bool d = solid(x - 1, y, c.z), e = solid(x, y, c.z);
                if ((a && e && !b && !d) || (b && d && !a && !e))
                    throw UnfoldError(Err::NonManifold,
                                      "non-manifold edge at z-edge (" + std::to_string(x) + "," +
                                          std::to_string(y) + "," + std::to_string(c.z) + ")");
            }
    }

    // Manifold vertices: the solid cells around each lattice vertex must be
    // face-connected within the 2x2x2 neighborhood (one fan).
    std::set<V3> verts;
    for (const Cell& c : cells_)
        for (int ox = 0; ox <= 1; ++ox)
            for (int oy = 0; oy <= 1; ++oy)
                for (int oz = 0; oz <= 1; ++oz) verts.insert({c.x + ox, c.y + oy, c.z + oz});
    for (const V3& v : verts) {
        int idx[2][2][2];
        bool occ[8] = {};
        int n = 0;
        for (int ox = 0; ox <= 1; ++ox)
            for (int oy = 0; oy <= 1; ++oy)
                for (int oz = 0; oz <= 1; ++oz) {
                    idx[ox][oy][oz] = ox * 4 + oy * 2 + oz;
                    occ[idx[ox][oy][oz]] = solid(v.x - 1 + ox, v.y - 1 + oy, v.z - 1 + oz);
                    if (occ[idx[ox][oy][oz]]) ++n;
                }
        if (n == 0) continue;
        // BFS over solid cells of the 2x2x2 block via shared faces
        int start = -1;
        for (int i = 0; i < 8; ++i)
            if (occ[i]) { start = i; break; }
        bool vis[8] = {};
        std::queue<int> bq;
        bq.push(start);
        vis[start] = true;
        int cnt = 1;
        while (!bq.empty()) {
            int i = bq.front();
            bq.pop();
            int ox = i / 4, oy = (i / 2) % 2, oz = i % 2;
            const int nb[3] = {idx[1 - ox][oy][oz], idx[ox][1 - oy][oz], idx[ox][oy][1 - oz]};
            for (int j : nb)
                if (occ[j] && !vis[j]) {
                    vis[j] = true;
                    ++cnt;
                    bq.push(j);
                }
        }
        if (cnt != n)
            throw UnfoldError(Err::NonManifold, "non-manifold vertex at (" + std::to_string(v.x) +
                                                    "," + std::to_string(v.y) + "," +
                                                    std::to_string(v.z) + ")");
    }
}

VoxelSolid VoxelSolid::reoriented(Axis axis) const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const Cell& c : cells_) {
        switch (axis) {
            case Axis::Y: out.push_back(c); break;
            case Axis::X:
                // rotate about z by +90deg: (x,y,z) -> (-y, x, z); +x maps to +y
                out.push_back({-c.y - 1, c.x, c.z});
                break;
            case Axis::Z:
                // rotate about x by -90deg: (x,y,z) -> (x, z, -y); +z maps to +y
                out.push_back({c.x, c.z, -c.y - 1});
                break;
        }
    }
    return VoxelSolid(std::move(out)).normalized();
}

VoxelSolid VoxelSolid::normalized() const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const Cell& c : cells_)
        out.push_back({c.x - bbmin_.x, c.y - bbmin_.y, c.z - bbmin_.z});
    return VoxelSolid(std::move(out));
}

VoxelSolid VoxelSolid::parse_text(const std::string& text) {
    std::vector<Cell> cells;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        long long x, y, z;
        if (!(ls >> x)) continue; // blank or comment-only
        if (!(ls >> y >> z))
            throw UnfoldError(Err::Parse, "line " + std::to_string(lineno) + ": expected 'x y z'");
        std::string rest;
        if (ls >> rest)
            throw UnfoldError(Err::Parse, "line " + std::to_string(lineno) + ": trailing tokens");
        cells.push_back({(int)x, (int)y, (int)z});
    }
    if (cells.empty()) throw UnfoldError(Err::Parse, "no cells in input");
    return VoxelSolid(std::move(cells));
}

VoxelSolid VoxelSolid::parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw UnfoldError(Err::Parse, std::string("bad JSON: ") + e.what());
    }
    if (!j.is_array()) throw UnfoldError(Err::Parse, "expected a JSON array of [x,y,z]");
    std::vector<Cell> cells;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3)
            throw UnfoldError(Err::Parse, "expected [x,y,z] triples");
        cells.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    if (cells.empty()) throw UnfoldError(Err::Parse, "no cells in input");
    return VoxelSolid(std::move(cells));
}

VoxelSolid VoxelSolid::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UnfoldError(Err::Parse, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') return parse_json(text);
    return parse_text(text);
}

std::string VoxelSolid::to_text() const {
    std::ostringstream out;
    for (const Cell& c : cells_) out << c.x << " " << c.y << " " << c.z << "\n";
    return out.str();
}

std::string VoxelSolid::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const Cell& c : cells_) j.push_back({c.x, c.y, c.z});
    return j.dump();
}

SurfaceMesh extract_surface(const VoxelSolid& solid) {
    solid.validate();
    SurfaceMesh mesh;
    for (const Cell& c : solid.cells()) {
        struct Nb {
            Cell n;
            Axis a;
            int sign;
            V3 corner;
        };
        const Nb nbs[6] = {
            {{c.x + 1, c.y, c.z}, Axis::X, +1, {c.x + 1, c.y, c.z}},
            {{c.x - 1, c.y, c.z}, Axis::X, -1, {c.x, c.y, c.z}},
            {{c.x, c.y + 1, c.z}, Axis::Y, +1, {c.x, c.y + 1, c.z}},
            {{c.x, c.y - 1, c.z}, Axis::Y, -1, {c.x, c.y, c.z}},
            {{c.x, c.y, c.z + 1}, Axis::Z, +1, {c.x, c.y, c.z + 1}},
            {{c.x, c.y, c.z - 1}, Axis::Z, -1, {c.x, c.y, c.z}},
        };
        for (const auto& nb : nbs)
            if (!solid.contains(nb.n)) mesh.faces.push_back({nb.a, nb.sign, nb.corner});
    }
    std::sort(mesh.faces.begin(), mesh.faces.end());

    // Count vertices and edges of the closed quad mesh; verify every edge has
    // exactly two incident faces (manifold validation already guarantees this,
    // but the mesh invariant is cheap to recheck).
    std::map<std::pair<V3, V3>, int> edges;
    std::set<V3> verts;
    for (const SurfFace& f : mesh.faces) {
        auto ax = face_axes(f.normal);
        V3 d1{0, 0, 0}, d2{0, 0, 0};
        switch (ax[0]) { case Axis::X: d1.x = 1; break; case Axis::Y: d1.y = 1; break; case Axis::Z: d1.z = 1; break; }
        switch (ax[1]) { case Axis::X: d2.x = 1; break; case Axis::Y: d2.y = 1; break; case Axis::Z: d2.z = 1; break; }
        V3 p0 = f.corner, p1 = f.corner + d1, p2 = f.corner + d1 + d2, p3 = f.corner + d2;
        const V3 quad[4] = {p0, p1, p2, p3};
        for (int i = 0; i < 4; ++i) {
            V3 a = quad[i], b = quad[(i + 1) % 4];
            if (b < a) std::swap(a, b);
            edges[{a, b}]++;
            verts.insert(quad[i]);
        }
    }
    for (const auto& [e, cnt] : edges)
        if (cnt != 2)
            throw UnfoldError(Err::NonManifold, "surface edge with " + std::to_string(cnt) +
                                                    " incident faces");

    // Surface connectivity (rejects interior voids).
    std::map<SurfFace, int> faceIndex;
    for (std::size_t i = 0; i < mesh.faces.size(); ++i) faceIndex[mesh.faces[i]] = (int)i;
    std::map<std::pair<V3, V3>, std::vector<int>> edgeFaces;
    for (std::size_t i = 0; i < mesh.faces.size(); ++i) {
        const SurfFace& f = mesh.faces[i];
        auto ax = face_axes(f.normal);
        V3 d1{0, 0, 0}, d2{0, 0, 0};
        switch (ax[0]) { case Axis::X: d1.x = 1; break; case Axis::Y: d1.y = 1; break; case Axis::Z: d1.z = 1; break; }
        switch (ax[1]) { case Axis::X: d2.x = 1; break; case Axis::Y: d2.y = 1; break; case Axis::Z: d2.z = 1; break; }
        V3 p0 = f.corner, p1 = f.corner + d1, p2 = f.corner + d1 + d2, p3 = f.corner + d2;
        const V3 quad[4] = {p0, p1, p2, p3};
        for (int k = 0; k < 4; ++k) {
            V3 a = quad[k], b = quad[(k + 1) % 4];
            if (b < a) std::swap(a, b);
            edgeFaces[{a, b}].push_back((int)i);
        }
    }
    std::vector<bool> vis(mesh.faces.size(), false);
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    std::size_t cnt = 1;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        const SurfFace& f = mesh.faces[i];
        auto ax = face_axes(f.normal);
        V3 d1{0, 0, 0}, d2{0, 0, 0};
        switch (ax[0]) { case Axis::X: d1.x = 1; break; case Axis::Y: d1.y = 1; break; case Axis::Z: d1.z = 1; break; }
        switch (ax[1]) { case Axis::X: d2.x = 1; break; case Axis::Y: d2.y = 1; break; case Axis::Z: d2.z = 1; break; }
        V3 p0 = f.corner, p1 = f.corner + d1, p2 = f.corner + d1 + d2, p3 = f.corner + d2;
        const V3 quad[4] = {p0, p1, p2, p3};
        for (int k = 0; k < 4; ++k) {
            V3 a = quad[k], b = quad[(k + 1) % 4];
            if (b < a) std::swap(a, b);
            for (int j : edgeFaces[{a, b}])
                if (!vis[j]) {
                    vis[j] = true;
                    ++cnt;
                    q.push(j);
                }
        }
    }
    if (cnt != mesh.faces.size())
        throw UnfoldError(Err::Disconnected,
                          "surface is disconnected (interior void?)");

    mesh.F = (long long)mesh.faces.size();
    mesh.E = (long long)edges.size();
    mesh.V = (long long)verts.size();
    return mesh;
}

int genus(const SurfaceMesh& mesh) {
    long long chi = mesh.euler();
    long long g2 = 2 - chi;
    if (g2 < 0 || g2 % 2 != 0)
        throw UnfoldError(Err::InternalInvariant, "Euler characteristic " + std::to_string(chi) +
                                                      " is not of the form 2-2g");
    return (int)(g2 / 2);
}

int genus(const VoxelSolid& solid) { return genus(extract_surface(solid)); }

} // namespace unfold
