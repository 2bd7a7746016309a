// caps.hpp -- size limits for the exhaustive checks
#pragma once

namespace roughmatroid::caps {

/// Largest universe a matroid (or induced matroid) may be built over.
inline constexpr int construction = 20;

/// Largest universe for exhaustive subset-pair sweeps (rank axioms,
/// rank extension, proposition sweeps).
inline constexpr int pairwise = 12;

/// Largest universe verify_all will sweep.
inline constexpr int sweep = 12;

/// Largest universe for the single-subset approximation properties.
inline constexpr int pawlak_single = 16;

/// Largest universe for the pair approximation properties (4L/4H/6L/6H).
inline constexpr int pawlak_pair = 10;

}  // namespace roughmatroid::caps
