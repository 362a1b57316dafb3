#include "tangle/flype.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "tangle/canonical.hpp"
#include "tangle/rootcode.hpp"

namespace tangle {

namespace {

bool in(VertexMask m, VertexId v) { return (m >> v) & 1; }

/// Next dart leaving `core` counterclockwise around the core's boundary.
DartId exit_core(const PlanarMap& map, VertexMask core, DartId d) {
  DartId x = PlanarMap::rot_next(d);
  for (int guard = 0; !map.is_leg(x) && in(core, map.neighbor(x)); ++guard) {
    if (guard > map.dart_count()) throw std::logic_error("core boundary walk does not terminate");
    x = PlanarMap::rot_next(map.twin(x));
  }
  return x;
}

bool reaches_boundary(const PlanarMap& map, VertexMask outside) {
  VertexMask reached = outside & boundary_vertices(map);
  VertexMask frontier = reached;
  while (frontier) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const VertexMask fresh = map.adjacency(v) & outside & ~reached;
    reached |= fresh;
    frontier |= fresh;
  }
  return reached == outside;
}

std::string key_of(const PlanarMap& map) {
  const auto inv = invariant_root_code(map);
  return std::string(inv.full.begin(), inv.full.end());
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<FlypeSite> flype_sites(const PlanarMap& map) {
  std::vector<FlypeSite> sites;
  const int n = map.crossings();
  const VertexMask all = map.all_vertices();
  for (VertexMask core = 1; core < all; ++core) {
    if (std::popcount(core) < 2) continue;
    int cut = 0;
    for (VertexMask rest = core; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      for (int j = 0; j < 4; ++j) {
        const DartId d = 4 * v + j;
        if (map.is_leg(d) || !in(core, map.neighbor(d))) ++cut;
      }
    }
    if (cut != 4 || !is_connected(map, core) || !reaches_boundary(map, all & ~core)) continue;

    for (VertexId c = 0; c < n; ++c) {
      if (in(core, c)) continue;
      int into = 0;
      int slot = -1;
      for (int j = 0; j < 4; ++j) {
        const DartId d = 4 * c + j;
        if (!map.is_leg(d) && in(core, map.neighbor(d))) {
          ++into;
          const DartId e = PlanarMap::rot_next(d);
          if (!map.is_leg(e) && in(core, map.neighbor(e))) slot = j;
        }
      }
      if (into != 2 || slot < 0) continue;
      const DartId se = 4 * c + slot;
      const DartId ne = PlanarMap::rot_next(se);
      const DartId t1 = map.twin(ne);
      const DartId t2 = map.twin(se);
      if (exit_core(map, core, t1) != t2) continue;
      const DartId t3 = exit_core(map, core, t2);
      const DartId t4 = exit_core(map, core, t3);
      if (exit_core(map, core, t4) != t1) continue;
      sites.push_back({core, c, slot, {PlanarMap::rot_next(ne), PlanarMap::rot_next(PlanarMap::rot_next(ne)), t3, t4}});
    }
  }
  return sites;
}

PlanarMap apply_flype(const PlanarMap& map, const FlypeSite& site) {
  const VertexMask core = site.core;
  const VertexId c = site.pivot;
  if (in(core, c) || c >= map.crossings()) throw std::invalid_argument("pivot lies inside the core");
  const DartId se = 4 * c + site.slot;
  const DartId ne = PlanarMap::rot_next(se);
  const DartId nw = PlanarMap::rot_next(ne);
  const DartId sw = PlanarMap::rot_next(nw);
  for (DartId d : {se, ne})
    if (map.is_leg(d) || !in(core, map.neighbor(d))) throw std::invalid_argument("pivot is not attached to the core");
  const DartId t1 = map.twin(ne);
  const DartId t2 = map.twin(se);
  const DartId t3 = exit_core(map, core, t2);
  const DartId t4 = exit_core(map, core, t3);
  if (exit_core(map, core, t1) != t2 || exit_core(map, core, t4) != t1)
    throw std::invalid_argument("site does not bound a 2-tangle");

  const DartId west_top = map.twin(nw);
  const DartId west_bottom = map.twin(sw);
  const DartId east_bottom = map.twin(t3);
  const DartId east_top = map.twin(t4);

  // Mirroring the core reverses the rotation at each of its crossings.
  auto mirror = [&](DartId d) {
    return in(core, PlanarMap::vertex_of(d)) ? (d & ~3) | ((4 - PlanarMap::slot_of(d)) & 3) : d;
  };
  std::vector<DartId> twin(map.dart_count());
  std::vector<DartId> legs(map.legs().begin(), map.legs().end());
  for (DartId d = 0; d < map.dart_count(); ++d) {
    const DartId t = map.twin(d);
    twin[mirror(d)] = t < 0 ? t : mirror(t);
  }
  for (int p = 0; p < map.leg_count(); ++p) legs[p] = mirror(legs[p]);

  auto join = [&](DartId a, DartId b) {
    twin[a] = b;
    if (b < 0)
      legs[-1 - b] = a;
    else
      twin[b] = a;
  };
  join(mirror(t2), west_top);
  join(mirror(t1), west_bottom);
  join(mirror(t3), nw);
  join(mirror(t4), sw);
  join(ne, east_top);
  join(se, east_bottom);
  return PlanarMap(std::move(twin), std::move(legs));
}

std::vector<CascadeCode> flype_class(const CascadeCode& code) {
  std::set<CascadeCode> seen{code};
  std::deque<CascadeCode> queue{code};
  while (!queue.empty()) {
    const CascadeCode current = std::move(queue.front());
    queue.pop_front();
    const PlanarMap map = expand(current);
    for (const FlypeSite& site : flype_sites(map)) {
      CascadeCode next = canonical_code(apply_flype(map, site));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

FlypeOrbits flype_orbits(int n, std::span<const CascadeCode> level) {
  FlypeOrbits result;
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(level.size());
  for (std::size_t i = 0; i < level.size(); ++i) index.emplace(key_of(expand(level[i])), i);

  DisjointSets sets(level.size());
  for (std::size_t i = 0; i < level.size(); ++i) {
    const PlanarMap map = expand(level[i]);
    for (const FlypeSite& site : flype_sites(map)) {
      ++result.moves;
      const PlanarMap moved = apply_flype(map, site);
      if (moved.crossings() != n || moved.half_legs() != map.half_legs() || !is_prime_connected(moved)) {
        ++result.violations;
        continue;
      }
      auto it = index.find(key_of(moved));
      if (it == index.end()) {
        ++result.violations;
        continue;
      }
      sets.unite(i, it->second);
    }
  }

  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < level.size(); ++i) {
    const std::size_t root = sets.find(i);
    auto [it, fresh] = slot.emplace(root, result.orbits.size());
    if (fresh) result.orbits.emplace_back();
    result.orbits[it->second].push_back(i);
  }
  for (auto& orbit : result.orbits) {
    std::sort(orbit.begin(), orbit.end(), [&](std::size_t a, std::size_t b) { return level[a] < level[b]; });
    result.counts.add(n, expand(level[orbit.front()]).half_legs());
  }
  return result;
}

CountsTable alternating_counts(int n_max, int workers) {
  CountsTable table{ProjectionClass::Alternating, {}};
  enumerate_all({n_max, workers, false}, [&](int n, const std::vector<CascadeCode>& level) {
    for (const auto& [cell, count] : flype_orbits(n, level).counts.cells) table.add(cell.first, cell.second, count);
  });
  return table;
}

}  // namespace tangle
