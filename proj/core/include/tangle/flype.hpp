#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tangle/cascade.hpp"
#include "tangle/enumerate.hpp"

namespace tangle {

/// A crossing (the pivot) next to a 2-tangle (the core). The pivot's darts
/// `slot` and `slot+1` (counterclockwise) run into the core; the other two
/// leave the region. A simple closed curve around pivot and core crosses the
/// edges of `cut`, listed counterclockwise by their darts inside the region.
struct FlypeSite {
  VertexMask core = 0;
  VertexId pivot = 0;
  int slot = 0;
  std::array<DartId, 4> cut{};
  friend bool operator==(const FlypeSite&, const FlypeSite&) = default;
};

/// All flype sites whose region avoids the boundary circle. Cores with a
/// single crossing are skipped: moving the pivot across one crossing gives
/// back the same projection.
std::vector<FlypeSite> flype_sites(const PlanarMap& map);

/// Moves the pivot to the opposite side of the core and mirrors the core.
/// Throws std::invalid_argument if `site` is not a flype site of `map`.
PlanarMap apply_flype(const PlanarMap& map, const FlypeSite& site);

/// Canonical codes of every projection reachable by flypes, sorted.
std::vector<CascadeCode> flype_class(const CascadeCode& code);

/// Flype orbits of one complete level of canonical codes.
struct FlypeOrbits {
  /// Orbits as indices into the level; each orbit sorted by code, so the
  /// first member is the representative.
  std::vector<std::vector<std::size_t>> orbits;
  CountsTable counts{ProjectionClass::Alternating, {}};
  std::uint64_t moves = 0;
  /// Moves that changed (n, k), broke primality or left the level.
  std::uint64_t violations = 0;
};

FlypeOrbits flype_orbits(int n, std::span<const CascadeCode> level);

/// Alternating-tangle counts for n = 1..n_max.
CountsTable alternating_counts(int n_max, int workers = 1);

}  // namespace tangle
