#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "tangle/cascade.hpp"
#include "tangle/planar_map.hpp"
#include "tangle/rootcode.hpp"

namespace testing {

using namespace tangle;

/// Every code accepted by the width rules, all patterns and shifts.
inline std::vector<CascadeCode> all_valid_codes(int n) {
  std::vector<CascadeCode> out;
  CascadeCode code;
  std::function<void(int)> grow = [&](int w) {
    if (code.crossings() == n) {
      out.push_back(code);
      return;
    }
    for (Pattern p : kPatterns) {
      const int next = w + width_delta(p);
      if (w < up_degree(p) || next < 2) continue;
      const int shifts = code.steps.empty() ? 1 : w;
      for (int m = 0; m < shifts; ++m) {
        code.steps.push_back({p, m});
        grow(next);
        code.steps.pop_back();
      }
    }
  };
  grow(4);
  return out;
}

/// Some nonempty set of crossings is joined to the rest of the disk
/// (legs included) by at most two edges.
inline bool brute_composite(const PlanarMap& m) {
  const int n = m.crossings();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int cut = 0;
    for (int v = 0; v < n; ++v) {
      if (!((s >> v) & 1)) continue;
      for (int j = 0; j < 4; ++j) {
        const DartId d = 4 * v + j;
        if (m.is_leg(d) || !((s >> m.neighbor(d)) & 1)) ++cut;
      }
    }
    if (cut <= 2) return true;
  }
  return false;
}

/// Crossing graph connectivity by plain depth-first search.
inline bool brute_connected(const PlanarMap& m) {
  std::vector<char> seen(m.crossings());
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int j = 0; j < 4; ++j) {
      const DartId d = 4 * v + j;
      if (m.is_leg(d) || seen[m.neighbor(d)]) continue;
      seen[m.neighbor(d)] = 1;
      stack.push_back(m.neighbor(d));
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

/// Whether some isomorphism a -> b sends leg p to leg r+p (r-p when
/// reflecting; reflection reverses every rotation). Grows the dart
/// correspondence from leg 0.
inline bool oracle_maps_by(const PlanarMap& a, const PlanarMap& b, int r, bool reflect) {
  if (a.crossings() != b.crossings() || a.leg_count() != b.leg_count()) return false;
  const int w = a.leg_count();
  auto image = [&](int p) { return ((reflect ? r - p : r + p) % w + w) % w; };
  std::vector<DartId> fwd(a.dart_count(), -1), back(b.dart_count(), -1);
  std::vector<std::pair<DartId, DartId>> todo{{a.leg_dart(0), b.leg_dart(image(0))}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    if (fwd[x] == y && back[y] == x) continue;
    if (fwd[x] != -1 || back[y] != -1 || a.is_leg(x) != b.is_leg(y)) return false;
    fwd[x] = y;
    back[y] = x;
    if (a.is_leg(x)) {
      if (image(a.leg_position(x)) != b.leg_position(y)) return false;
    } else {
      todo.push_back({a.twin(x), b.twin(y)});
    }
    todo.push_back({PlanarMap::rot_next(x), reflect ? PlanarMap::rot_prev(y) : PlanarMap::rot_next(y)});
  }
  return std::none_of(fwd.begin(), fwd.end(), [](DartId d) { return d == -1; });
}

/// Whether b is obtained from a by a dihedral motion of the legs.
inline bool oracle_equivalent(const PlanarMap& a, const PlanarMap& b) {
  for (int r = 0; r < a.leg_count(); ++r)
    for (bool reflect : {false, true})
      if (oracle_maps_by(a, b, r, reflect)) return true;
  return false;
}

inline PlanarMap random_relabel(const PlanarMap& m, std::mt19937& rng) {
  std::vector<VertexId> perm(m.crossings());
  for (int i = 0; i < m.crossings(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(m, perm);
}

/// Two crossings sharing one edge, six legs.
inline PlanarMap two_crossings_six_legs() {
  std::vector<DartId> twin(8);
  std::vector<DartId> legs{1, 2, 3, 5, 6, 7};
  twin[0] = 4;
  twin[4] = 0;
  for (int p = 0; p < 6; ++p) twin[legs[p]] = PlanarMap::leg_marker(p);
  return PlanarMap(twin, legs);
}

/// Two crossings joined by two parallel edges, four legs.
inline PlanarMap bigon() {
  std::vector<DartId> twin(8);
  std::vector<DartId> legs{2, 3, 6, 7};
  twin[0] = 5;
  twin[5] = 0;
  twin[1] = 4;
  twin[4] = 1;
  for (int p = 0; p < 4; ++p) twin[legs[p]] = PlanarMap::leg_marker(p);
  return PlanarMap(twin, legs);
}

/// Path v0 - v1 - v2 with single edges; v1 is a cut vertex.
inline PlanarMap chain_of_three() {
  std::vector<DartId> twin(12);
  std::vector<DartId> legs{1, 2, 3, 5, 9, 10, 11, 7};
  twin[0] = 4;
  twin[4] = 0;
  twin[6] = 8;
  twin[8] = 6;
  for (int p = 0; p < 8; ++p) twin[legs[p]] = PlanarMap::leg_marker(p);
  return PlanarMap(twin, legs);
}

}  // namespace testing
