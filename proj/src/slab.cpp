#include "unfold/slab.hpp"

#include <algorithm>
#include <queue>

#include "json.hpp"

namespace unfold {

namespace {

// Connected components (4-neighborhood) of a set of cross-section cells.
std::vector<std::vector<XZ>> components(const std::set<XZ>& cells) {
    std::vector<std::vector<XZ>> out;
    std::set<XZ> seen;
    for (const XZ& start : cells) {
        if (seen.count(start)) continue;
        std::vector<XZ> comp;
        std::queue<XZ> q;
        q.push(start);
        seen.insert(start);
        while (!q.empty()) {
            XZ c = q.front();
            q.pop();
            comp.push_back(c);
            const XZ nbs[4] = {{c.x + 1, c.z}, {c.x - 1, c.z}, {c.x, c.z + 1}, {c.x, c.z - 1}};
            for (const XZ& n : nbs)
                if (cells.count(n) && !seen.count(n)) {
                    seen.insert(n);
                    q.push(n);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

// Trace boundary cycles of a polyomino with the solid on the left of travel.
// Returns cycles as vertex loops; signed area > 0 for the outer cycle.
std::vector<std::vector<XZ>> boundary_cycles(const std::set<XZ>& cells) {
    // directed edges: from -> to
    std::map<XZ, XZ> next;
    for (const XZ& c : cells) {
        if (!cells.count({c.x, c.z - 1})) next[{c.x, c.z}] = {c.x + 1, c.z};         // bottom, +x
        if (!cells.count({c.x + 1, c.z})) next[{c.x + 1, c.z}] = {c.x + 1, c.z + 1}; // right, +z
        if (!cells.count({c.x, c.z + 1})) next[{c.x + 1, c.z + 1}] = {c.x, c.z + 1}; // top, -x
        if (!cells.count({c.x - 1, c.z})) next[{c.x, c.z + 1}] = {c.x, c.z};         // left, -z
    }
    std::vector<std::vector<XZ>> cycles;
    std::set<XZ> used;
    for (const auto& [start, to] : next) {
        if (used.count(start)) continue;
        std::vector<XZ> loop;
        XZ v = start;
        do {
            loop.push_back(v);
            used.insert(v);
            auto it = next.find(v);
            if (it == next.end())
                throw UnfoldError(Err::InternalInvariant, "boundary trace broke");
            v = it->second;
        } while (!(v == start));
        cycles.push_back(std::move(loop));
    }
    return cycles;
}

long long signed_area2(const std::vector<XZ>& loop) {
    long long a2 = 0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const XZ& p = loop[i];
        const XZ& q = loop[(i + 1) % loop.size()];
        a2 += (long long)p.x * q.z - (long long)q.x * p.z;
    }
    return a2;
}

} // namespace

bool plane_face(const VoxelSolid& solid, int x, int y, int z, int* sign) {
    bool before = solid.contains({x, y - 1, z});
    bool after = solid.contains({x, y, z});
    if (before == after) return false;
    if (sign) *sign = before ? +1 : -1;
    return true;
}

std::vector<XZ> rim_interior_squares(const Rim& rim) {
    // vertical (z-direction) edges of the loop indexed by z row
    std::map<int, std::vector<int>> vertAtRow; // z row -> x positions
    int xmin = rim.loop[0].x, xmax = xmin, zmin = rim.loop[0].z, zmax = zmin;
    for (std::size_t i = 0; i < rim.loop.size(); ++i) {
        XZ a = rim.loop[i], b = rim.loop[(i + 1) % rim.loop.size()];
        xmin = std::min(xmin, a.x);
        xmax = std::max(xmax, a.x);
        zmin = std::min(zmin, a.z);
        zmax = std::max(zmax, a.z);
        if (a.x == b.x) vertAtRow[std::min(a.z, b.z)].push_back(a.x);
    }
    std::vector<XZ> out;
    for (int z = zmin; z < zmax; ++z) {
        auto it = vertAtRow.find(z);
        if (it == vertAtRow.end()) continue;
        std::vector<int> xs = it->second;
        std::sort(xs.begin(), xs.end());
        // squares between odd/even crossings are inside
        for (std::size_t k = 0; k + 1 < xs.size(); k += 2)
            for (int x = xs[k]; x < xs[k + 1]; ++x) out.push_back({x, z});
    }
    std::sort(out.begin(), out.end());
    return out;
}

SlabDecomposition slice(const VoxelSolid& solid) {
    SlabDecomposition d;
    d.solid = solid;
    d.mesh = extract_surface(solid);

    // group cells by y row
    std::map<int, std::set<XZ>> rows;
    for (const Cell& c : solid.cells()) rows[c.y].insert({c.x, c.z});

    for (const auto& [y, cells] : rows) {
        for (auto& comp : components(cells)) {
            Slab s;
            s.id = (int)d.slabs.size();
            s.y0 = y;
            s.y1 = y + 1;
            s.cells = comp;
            std::set<XZ> compSet(comp.begin(), comp.end());
            auto cycles = boundary_cycles(compSet);
            // outer first (positive area), then holes sorted by min vertex
            std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
                long long sa = signed_area2(a), sb = signed_area2(b);
                if ((sa > 0) != (sb > 0)) return sa > 0;
                return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
            });
            int outers = 0;
            for (auto& cyc : cycles)
                if (signed_area2(cyc) > 0) ++outers;
            if (outers != 1)
                throw UnfoldError(Err::InternalInvariant, "slab with " + std::to_string(outers) +
                                                              " outer boundary cycles");
            for (auto& cyc : cycles) {
                Band b;
                b.id = (int)d.bands.size();
                b.slab = s.id;
                b.inner = signed_area2(cyc) < 0;
                b.y0 = s.y0;
                b.y1 = s.y1;
                if (b.inner) std::reverse(cyc.begin(), cyc.end()); // appears-ccw storage
                b.loop = std::move(cyc);
                // rotate so the loop starts at its minimal vertex (determinism)
                auto mn = std::min_element(b.loop.begin(), b.loop.end());
                std::rotate(b.loop.begin(), mn, b.loop.end());
                if (b.inner)
                    s.innerBands.push_back(b.id);
                else
                    s.outerBand = b.id;
                for (int side = 0; side < 2; ++side) {
                    Rim r;
                    r.id = (int)d.rims.size();
                    r.band = b.id;
                    r.y = side == 0 ? b.y0 : b.y1;
                    r.loop = b.loop;
                    (side == 0 ? b.rimLo : b.rimHi) = r.id;
                    d.rims.push_back(std::move(r));
                }
                d.bands.push_back(std::move(b));
            }
            d.slabs.push_back(std::move(s));
        }
    }

    // patches: connected components of coplanar +-y surface squares per plane
    std::map<int, std::set<XZ>> planeSquares; // y -> squares
    for (const SurfFace& f : d.mesh.faces)
        if (f.normal == Axis::Y) planeSquares[f.corner.y].insert({f.corner.x, f.corner.z});
    for (const auto& [y, sqs] : planeSquares) {
        for (auto& comp : components(sqs)) {
            Patch p;
            p.id = (int)d.patches.size();
            p.y = y;
            int sign = 0;
            plane_face(solid, comp[0].x, y, comp[0].z, &sign);
            p.sign = sign;
            for (const XZ& s2 : comp) {
                int s3 = 0;
                plane_face(solid, s2.x, y, s2.z, &s3);
                if (s3 != sign)
                    throw UnfoldError(Err::InternalInvariant, "mixed-normal z-patch");
            }
            p.squares = comp;
            d.patches.push_back(std::move(p));
        }
    }

    // partition bookkeeping
    if (d.band_area() + d.patch_area() != (long long)d.mesh.faces.size())
        throw UnfoldError(Err::InternalInvariant, "band + patch area != surface area");
    return d;
}

long long SlabDecomposition::band_area() const {
    long long a = 0;
    for (const Band& b : bands) a += (long long)b.perimeter() * (b.y1 - b.y0);
    return a;
}

long long SlabDecomposition::patch_area() const {
    long long a = 0;
    for (const Patch& p : patches) a += (long long)p.squares.size();
    return a;
}

void classify_rims(SlabDecomposition& d) {
    for (Rim& r : d.rims) {
        bool ok = true;
        for (const XZ& s : rim_interior_squares(r))
            if (!plane_face(d.solid, s.x, r.y, s.z)) {
                ok = false;
                break;
            }
        r.enclosesFace = ok;
    }
}

void find_zbeams(SlabDecomposition& d) {
    // index: (y, normalized edge) -> rims containing it
    std::map<std::tuple<int, XZ, XZ>, std::vector<int>> edgeRims;
    for (const Rim& r : d.rims)
        for (std::size_t i = 0; i < r.loop.size(); ++i) {
            XZ a = r.loop[i], b = r.loop[(i + 1) % r.loop.size()];
            if (b < a) std::swap(a, b);
            edgeRims[{r.y, a, b}].push_back(r.id);
        }
    // index: (y, square) -> patch id
    std::map<std::tuple<int, XZ>, int> squarePatch;
    for (const Patch& p : d.patches)
        for (const XZ& s : p.squares) squarePatch[{p.y, s}] = p.id;

    struct Trace {
        int rimA, rimB, y, x, zA, zB, patch;
    };
    std::vector<Trace> traces;
    std::set<std::tuple<int, int, int, int>> zeroSeen; // (y, x, z, rimPairKey)

    for (const Rim& r : d.rims) {
        for (std::size_t i = 0; i < r.loop.size(); ++i) {
            XZ a = r.loop[i], b = r.loop[(i + 1) % r.loop.size()];
            if (a.z != b.z) continue; // horizontal edges only
            int x = std::min(a.x, b.x);
            int z = a.z;
            auto key = std::make_tuple(r.y, XZ{x, z}, XZ{x + 1, z});
            const auto& owners = edgeRims[key];
            if (owners.size() == 2) {
                // shared segment between two rims: zero-height beam
                int other = owners[0] == r.id ? owners[1] : owners[0];
                if (other == r.id) continue; // same rim twice: impossible for simple loops
                int lo = std::min(r.id, other), hi = std::max(r.id, other);
                if (!zeroSeen.insert({r.y, x, z, lo * 100000 + hi}).second) continue;
                traces.push_back({lo, hi, r.y, x, z, z, -1});
                continue;
            }
            // otherwise the other side is a patch square above or below
            int dir = 0;
            if (squarePatch.count({r.y, XZ{x, z}}))
                dir = +1; // patch square with corner (x,z) sits above the edge
            if (squarePatch.count({r.y, XZ{x, z - 1}})) {
                if (dir != 0) {
                    // both sides are patch squares: edge would have 3 faces
                    throw UnfoldError(Err::InternalInvariant, "rim edge with patches on both sides");
                }
                dir = -1;
            }
            if (dir == 0)
                throw UnfoldError(Err::InternalInvariant, "rim edge with no second face");
            int patch = squarePatch[{r.y, XZ{x, dir > 0 ? z : z - 1}}];
            // march through the patch column
            int zc = dir > 0 ? z : z - 1;
            while (squarePatch.count({r.y, XZ{x, zc + dir}}) &&
                   squarePatch[{r.y, XZ{x, zc + dir}}] == patch)
                zc += dir;
            int zExit = dir > 0 ? zc + 1 : zc;
            auto exitKey = std::make_tuple(r.y, XZ{x, zExit}, XZ{x + 1, zExit});
            auto it = edgeRims.find(exitKey);
            if (it == edgeRims.end() || it->second.size() != 1)
                throw UnfoldError(Err::InternalInvariant, "patch column exit edge not on one rim");
            int rimB = it->second[0];
            if (rimB == r.id) continue; // extension returns to r: no beam
            traces.push_back({r.id, rimB, r.y, x, z, zExit, patch});
        }
    }

    // merge x-adjacent traces with identical (pair, patch, z-span); traces from
    // both rims of a pair describe the same beam (swap so rimA < rimB first)
    for (Trace& t : traces)
        if (t.rimB < t.rimA) {
            std::swap(t.rimA, t.rimB);
            std::swap(t.zA, t.zB);
        }
    std::sort(traces.begin(), traces.end(), [](const Trace& a, const Trace& b) {
        return std::tie(a.rimA, a.rimB, a.patch, a.zA, a.zB, a.x) <
               std::tie(b.rimA, b.rimB, b.patch, b.zA, b.zB, b.x);
    });
    traces.erase(std::unique(traces.begin(), traces.end(),
                             [](const Trace& a, const Trace& b) {
                                 return std::tie(a.rimA, a.rimB, a.patch, a.zA, a.zB, a.x) ==
                                        std::tie(b.rimA, b.rimB, b.patch, b.zA, b.zB, b.x);
                             }),
                 traces.end());

    struct Candidate {
        int rimA, rimB, y, x0, x1, zA, zB, patch;
    };
    std::vector<Candidate> cands;
    for (const Trace& t : traces) {
        if (!cands.empty()) {
            Candidate& c = cands.back();
            if (c.rimA == t.rimA && c.rimB == t.rimB && c.patch == t.patch && c.zA == t.zA &&
                c.zB == t.zB && c.x1 == t.x) {
                c.x1 = t.x + 1;
                continue;
            }
        }
        cands.push_back({t.rimA, t.rimB, t.y, t.x, t.x + 1, t.zA, t.zB, t.patch});
    }

    // one canonical beam per (pair, patch): the widest, then lexicographically
    // smallest; zero-height candidates (patch == -1) keep one per maximal
    // contiguous segment
    std::map<std::tuple<int, int, int>, Candidate> best;
    d.beams.clear();
    for (const Candidate& c : cands) {
        if (c.patch < 0) {
            ZBeam zb{(int)d.beams.size(), c.rimA, c.rimB, c.y, c.x0, c.x1, c.zA, c.zB, -1};
            d.beams.push_back(zb);
            continue;
        }
        auto key = std::make_tuple(c.rimA, c.rimB, c.patch);
        auto it = best.find(key);
        if (it == best.end()) {
            best.emplace(key, c);
        } else {
            const Candidate& old = it->second;
            int wNew = c.x1 - c.x0, wOld = old.x1 - old.x0;
            if (std::make_tuple(-wNew, c.x0, c.zA) < std::make_tuple(-wOld, old.x0, old.zA))
                it->second = c;
        }
    }
    for (const auto& [key, c] : best)
        d.beams.push_back({(int)d.beams.size(), c.rimA, c.rimB, c.y, c.x0, c.x1, c.zA, c.zB,
                           c.patch});
    // zero-height beams first per plane: the tree reduction removes low edge
    // ids first, so positive-height beams survive preferentially
    std::sort(d.beams.begin(), d.beams.end(), [](const ZBeam& a, const ZBeam& b) {
        bool za = a.zA != a.zB, zb = b.zA != b.zB;
        return std::tie(a.y, za, a.rimA, a.rimB, a.x0, a.zA) <
               std::tie(b.y, zb, b.rimA, b.rimB, b.x0, b.zA);
    });
    for (std::size_t i = 0; i < d.beams.size(); ++i) d.beams[i].id = (int)i;

    // patch -> incident rims (boundary edge owners), for the Lemma 3 aids
    std::map<std::tuple<int, XZ>, int> sq = squarePatch;
    for (Patch& p : d.patches) {
        p.rims.clear();
        std::set<XZ> sqs(p.squares.begin(), p.squares.end());
        for (const XZ& s : p.squares) {
            struct E {
                XZ a, b;
                XZ nb;
            };
            const E es[4] = {
                {{s.x, s.z}, {s.x + 1, s.z}, {s.x, s.z - 1}},
                {{s.x, s.z + 1}, {s.x + 1, s.z + 1}, {s.x, s.z + 1}},
                {{s.x, s.z}, {s.x, s.z + 1}, {s.x - 1, s.z}},
                {{s.x + 1, s.z}, {s.x + 1, s.z + 1}, {s.x + 1, s.z}},
            };
            for (const E& e : es) {
                if (sqs.count(e.nb)) continue;
                auto it = edgeRims.find({p.y, e.a, e.b});
                if (it == edgeRims.end())
                    throw UnfoldError(Err::InternalInvariant, "patch boundary edge not on a rim");
                for (int rid : it->second) p.rims.insert(rid);
            }
        }
    }

    // Prop. 1 consequence: a face rim has no beam to another rim
    for (const ZBeam& zb : d.beams)
        if (d.rims[zb.rimA].enclosesFace || d.rims[zb.rimB].enclosesFace)
            throw UnfoldError(Err::InternalInvariant, "face rim with incident z-beam");
}

SlabDecomposition decompose(const VoxelSolid& solid) {
    SlabDecomposition d = slice(solid);
    classify_rims(d);
    find_zbeams(d);
    return d;
}

std::string SlabDecomposition::dump_json() const {
    nlohmann::json j;
    j["slabs"] = nlohmann::json::array();
    for (const Slab& s : slabs) {
        nlohmann::json js;
        js["id"] = s.id;
        js["y"] = {s.y0, s.y1};
        js["outer_band"] = s.outerBand;
        js["inner_bands"] = s.innerBands;
        j["slabs"].push_back(js);
    }
    j["bands"] = nlohmann::json::array();
    for (const Band& b : bands) {
        nlohmann::json jb;
        jb["id"] = b.id;
        jb["slab"] = b.slab;
        jb["kind"] = b.inner ? "inner" : "outer";
        jb["rims"] = {b.rimLo, b.rimHi};
        nlohmann::json loop = nlohmann::json::array();
        for (const XZ& v : b.loop) loop.push_back({v.x, v.z});
        jb["loop"] = loop;
        j["bands"].push_back(jb);
    }
    j["rims"] = nlohmann::json::array();
    for (const Rim& r : rims) {
        nlohmann::json jr;
        jr["id"] = r.id;
        jr["band"] = r.band;
        jr["y"] = r.y;
        jr["encloses_face"] = r.enclosesFace;
        j["rims"].push_back(jr);
    }
    j["zbeams"] = nlohmann::json::array();
    for (const ZBeam& zb : beams) {
        nlohmann::json jz;
        jz["id"] = zb.id;
        jz["rims"] = {zb.rimA, zb.rimB};
        jz["y"] = zb.y;
        jz["x"] = {zb.x0, zb.x1};
        jz["z"] = {zb.zA, zb.zB};
        jz["patch"] = zb.patch;
        j["zbeams"].push_back(jz);
    }
    return j.dump(2);
}

} // namespace unfold
