#pragma once

#include <cstdint>

#include "unfold/solid.hpp"

namespace unfold {

// Deterministic seeded growth of a manifold polycube with the requested
// genus (0, 1 or 2), rejection-sampling until the genus matches. Throws
// GenerationTimeout after a bounded number of rejected attempts.
VoxelSolid generate_polycube(std::uint64_t seed, int maxExtent, int targetGenus,
                             int maxAttempts = 400);

} // namespace unfold
