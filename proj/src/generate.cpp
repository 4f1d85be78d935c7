#include "unfold/generate.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace unfold {

namespace {

bool solid_ok(const std::vector<Cell>& cells, int targetGenus) {
    try {
        VoxelSolid s(cells);
        return genus(s) == targetGenus;
    } catch (const UnfoldError&) {
        return false;
    }
}

// axis-permuted cell within the extent box
Cell orient_cell(int u, int v, int w, int axis) {
    switch (axis) {
        case 0: return {w, u, v};
        case 1: return {u, w, v};
        default: return {u, v, w};
    }
}

// rectangular frame (a x b outer, 1-cell wall) extruded t cells along `axis`
std::vector<Cell> make_ring(int a, int b, int t, int axis) {
    std::vector<Cell> cells;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) {
            bool wall = u == 0 || u == a - 1 || v == 0 || v == b - 1;
            if (!wall) continue;
            for (int w = 0; w < t; ++w) cells.push_back(orient_cell(u, v, w, axis));
        }
    return cells;
}

// two frames sharing a wall column
std::vector<Cell> make_double_ring(int a, int c, int b, int t, int axis) {
    std::set<Cell> cells;
    for (const Cell& k : make_ring(a, b, t, axis)) cells.insert(k);
    for (int u = 0; u < c; ++u)
        for (int v = 0; v < b; ++v) {
            bool wall = u == 0 || u == c - 1 || v == 0 || v == b - 1;
            if (!wall) continue;
            for (int w = 0; w < t; ++w) cells.insert(orient_cell(u + a - 1, v, w, axis));
        }
    return {cells.begin(), cells.end()};
}

} // namespace

VoxelSolid generate_polycube(std::uint64_t seed, int maxExtent, int targetGenus,
                             int maxAttempts) {
    if (targetGenus < 0 || targetGenus > 2)
        throw UnfoldError(Err::Parse, "target genus must be 0, 1 or 2");
    if (maxExtent < 1 || (targetGenus >= 1 && maxExtent < 3) ||
        (targetGenus == 2 && maxExtent < 5))
        throw UnfoldError(Err::Parse, "extent too small for the requested genus");

    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL + targetGenus);
    auto rint = [&](int lo, int hi) { // inclusive
        return lo + (int)(rng() % (std::uint64_t)(hi - lo + 1));
    };

    for (int attempt = 0; attempt < maxAttempts; ++attempt) {
        std::vector<Cell> cells;
        if (targetGenus == 0) {
            cells.push_back({rint(0, maxExtent - 1), rint(0, maxExtent - 1),
                             rint(0, maxExtent - 1)});
        } else if (targetGenus == 1) {
            int a = rint(3, maxExtent), b = rint(3, maxExtent);
            int t = rint(1, std::max(1, maxExtent - 2));
            cells = make_ring(a, b, t, rint(0, 2));
        } else {
            int b = rint(3, maxExtent);
            int rest = maxExtent + 1; // a + c - 1 <= maxExtent
            int a = rint(3, rest - 3);
            int c = rint(3, rest - a);
            int t = rint(1, std::max(1, maxExtent - 2));
            cells = make_double_ring(a, c, b, t, rint(0, 2));
        }
        if (!solid_ok(cells, targetGenus)) continue;

        // random manifold- and genus-preserving growth
        int growth = rint(0, 2 * maxExtent);
        std::set<Cell> cur(cells.begin(), cells.end());
        for (int step = 0; step < growth; ++step) {
            std::vector<Cell> frontier;
            const int dx[6] = {1, -1, 0, 0, 0, 0};
            const int dy[6] = {0, 0, 1, -1, 0, 0};
            const int dz[6] = {0, 0, 0, 0, 1, -1};
            for (const Cell& c : cur)
                for (int k = 0; k < 6; ++k) {
                    Cell n{c.x + dx[k], c.y + dy[k], c.z + dz[k]};
                    if (cur.count(n)) continue;
                    if (n.x < 0 || n.y < 0 || n.z < 0 || n.x >= maxExtent ||
                        n.y >= maxExtent || n.z >= maxExtent)
                        continue;
                    frontier.push_back(n);
                }
            if (frontier.empty()) break;
            std::sort(frontier.begin(), frontier.end());
            frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
            Cell pick = frontier[rng() % frontier.size()];
            std::vector<Cell> trial(cur.begin(), cur.end());
            trial.push_back(pick);
            if (solid_ok(trial, targetGenus)) cur.insert(pick);
        }
        std::vector<Cell> out(cur.begin(), cur.end());
        if (solid_ok(out, targetGenus)) return VoxelSolid(std::move(out)).normalized();
    }
    throw UnfoldError(Err::GenerationTimeout,
                      "could not generate genus-" + std::to_string(targetGenus) +
                          " polycube within attempt budget");
}

} // namespace unfold
