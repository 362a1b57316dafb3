#include "tangle/planar_map.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

namespace tangle {

namespace detail {

int popcount(VertexMask m) { return std::popcount(m); }

std::vector<DartId> leg_cycle(std::span<const DartId> twin, DartId start) {
  const int darts = static_cast<int>(twin.size());
  int total_legs = 0;
  for (DartId t : twin) total_legs += t < 0 ? 1 : 0;

  std::vector<DartId> order;
  order.reserve(total_legs);
  std::vector<char> seen(darts, 0);
  DartId leg = start;
  do {
    if (seen[leg]) return {};
    seen[leg] = 1;
    order.push_back(leg);
    DartId x = PlanarMap::rot_next(leg);
    int guard = 0;
    while (twin[x] >= 0) {
      x = PlanarMap::rot_next(twin[x]);
      if (++guard > darts) return {};
    }
    leg = x;
  } while (leg != start);
  if (static_cast<int>(order.size()) != total_legs) return {};
  return order;
}

}  // namespace detail

PlanarMap::PlanarMap(std::vector<DartId> twin, std::vector<DartId> legs)
    : twin_(std::move(twin)), legs_(std::move(legs)) {
  const int darts = static_cast<int>(twin_.size());
  if (darts == 0 || darts % 4 != 0) throw StructuralError("dart count must be a positive multiple of 4");
  if (crossings() > kMaxCrossings) throw StructuralError("too many crossings");
  if (legs_.empty() || legs_.size() % 2 != 0) throw StructuralError("leg count must be positive and even");

  int marked = 0;
  for (DartId d = 0; d < darts; ++d) {
    const DartId t = twin_[d];
    if (t < 0) {
      const int pos = -1 - t;
      if (pos >= leg_count() || legs_[pos] != d) throw StructuralError("leg table does not match dart " + std::to_string(d));
      ++marked;
      continue;
    }
    if (t >= darts || t == d || twin_[t] != d) throw StructuralError("twin is not an involution at dart " + std::to_string(d));
  }
  if (marked != leg_count()) throw StructuralError("leg table lists darts that are not legs");

  // Every leg's outer-face successor must be the next leg counterclockwise.
  for (int p = 0; p < leg_count(); ++p) {
    DartId x = rot_next(legs_[p]);
    int guard = 0;
    while (twin_[x] >= 0) {
      x = rot_next(twin_[x]);
      if (++guard > darts) throw StructuralError("face walk does not terminate");
    }
    if (x != legs_[(p + 1) % leg_count()]) throw StructuralError("leg order is not the boundary order");
  }

  // Euler characteristic of the sphere obtained by collapsing the boundary
  // circle to a point: V - E + F = 2 with V = n + 1 and E = 2n + k.
  const FaceStructure fs = face_structure(*this);
  if (static_cast<int>(fs.faces.size()) != crossings() + half_legs() + 1)
    throw StructuralError("rotation system is not a planar disk map");
}

int PlanarMap::legs_at(VertexId v) const {
  int c = 0;
  for (int j = 0; j < 4; ++j) c += twin_[4 * v + j] < 0 ? 1 : 0;
  return c;
}

VertexMask PlanarMap::adjacency(VertexId v) const {
  VertexMask m = 0;
  for (int j = 0; j < 4; ++j) {
    const DartId t = twin_[4 * v + j];
    if (t >= 0 && vertex_of(t) != v) m |= VertexMask{1} << vertex_of(t);
  }
  return m;
}

std::string PlanarMap::serialize() const {
  std::ostringstream os;
  os << crossings() << ' ' << half_legs() << '\n';
  for (int v = 0; v < crossings(); ++v) {
    for (int j = 0; j < 4; ++j) {
      const DartId d = 4 * v + j;
      os << (j ? " " : "");
      if (is_leg(d))
        os << 'L' << leg_position(d);
      else
        os << twin_[d];
    }
    os << '\n';
  }
  return os.str();
}

std::pair<int, int> FaceStructure::sides(const PlanarMap& map, DartId d) const {
  if (!map.is_leg(d)) return {face_of_dart[d], face_of_dart[map.twin(d)]};
  const int p = map.leg_position(d);
  return {face_of_dart[d], face_of_dart[map.leg_dart((p + 1) % map.leg_count())]};
}

FaceStructure face_structure(const PlanarMap& map) {
  FaceStructure fs;
  const int darts = map.dart_count();
  const int legs = map.leg_count();
  fs.face_of_dart.assign(darts, -1);

  auto successor = [&](DartId d) {
    if (!map.is_leg(d)) return PlanarMap::rot_next(map.twin(d));
    const int p = map.leg_position(d);
    return PlanarMap::rot_next(map.leg_dart((p + legs - 1) % legs));
  };
  auto trace = [&](DartId start) {
    Face f;
    DartId d = start;
    do {
      fs.face_of_dart[d] = static_cast<int>(fs.faces.size());
      f.darts.push_back(d);
      if (map.is_leg(d)) {
        f.is_boundary = true;
        f.edge_degree += 2;
      } else {
        f.edge_degree += 1;
      }
      d = successor(d);
    } while (d != start);
    fs.faces.push_back(std::move(f));
  };

  for (int i = 0; i < legs; ++i) {
    const DartId d = map.leg_dart((i + 1) % legs);
    if (fs.face_of_dart[d] < 0) trace(d);
  }
  fs.boundary_count = static_cast<int>(fs.faces.size());
  for (DartId d = 0; d < darts; ++d)
    if (fs.face_of_dart[d] < 0) trace(d);
  return fs;
}

std::vector<Face> faces(const PlanarMap& map) { return face_structure(map).faces; }

bool is_connected(const PlanarMap& map, VertexMask mask) {
  if (mask == 0) return true;
  VertexMask reached = mask & (~mask + 1);
  VertexMask frontier = reached;
  while (frontier) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const VertexMask fresh = map.adjacency(v) & mask & ~reached;
    reached |= fresh;
    frontier |= fresh;
  }
  return reached == mask;
}

bool is_connected(const PlanarMap& map) { return is_connected(map, map.all_vertices()); }

VertexMask boundary_vertices(const PlanarMap& map) {
  VertexMask m = 0;
  for (int p = 0; p < map.leg_count(); ++p) m |= VertexMask{1} << PlanarMap::vertex_of(map.leg_dart(p));
  return m;
}

VertexMask cut_vertices(const PlanarMap& map) {
  const VertexMask all = map.all_vertices();
  VertexMask cuts = 0;
  if (map.crossings() <= 2) return cuts;
  for (int v = 0; v < map.crossings(); ++v) {
    const VertexMask rest = all & ~(VertexMask{1} << v);
    if (!is_connected(map, rest)) cuts |= VertexMask{1} << v;
  }
  return cuts;
}

bool is_composite(const PlanarMap& map, const FaceStructure& fs) {
  if (map.half_legs() < 2) return true;
  // A closed curve meeting the projection twice crosses two edges that
  // separate the same pair of faces.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(map.dart_count());
  for (DartId d = 0; d < map.dart_count(); ++d) {
    if (!map.is_leg(d) && map.twin(d) < d) continue;
    auto [a, b] = fs.sides(map, d);
    if (a == b) return true;
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end();
}

bool is_composite(const PlanarMap& map) { return is_composite(map, face_structure(map)); }

bool is_reduced(const PlanarMap& map) {
  bool parallel = false;
  for (int v = 0; v < map.crossings() && !parallel; ++v) {
    VertexMask seen = 0;
    for (int j = 0; j < 4; ++j) {
      const DartId d = 4 * v + j;
      if (map.is_leg(d)) continue;
      const VertexMask bit = VertexMask{1} << map.neighbor(d);
      if (seen & bit) {
        parallel = true;
        break;
      }
      seen |= bit;
    }
  }
  bool bigon = false;
  for (const Face& f : faces(map))
    if (!f.is_boundary && f.edge_degree == 2) bigon = true;
  if (parallel != bigon) throw std::logic_error("parallel edges and 2-faces disagree:\n" + map.serialize());
  return !parallel;
}

bool is_prime_connected(const PlanarMap& map) { return is_connected(map) && !is_composite(map); }

PlanarMap relabel(const PlanarMap& map, std::span<const VertexId> perm) {
  std::vector<DartId> twin(map.dart_count());
  std::vector<DartId> legs(map.leg_count());
  auto image = [&](DartId d) { return 4 * perm[PlanarMap::vertex_of(d)] + PlanarMap::slot_of(d); };
  for (DartId d = 0; d < map.dart_count(); ++d) {
    twin[image(d)] = map.is_leg(d) ? map.twin(d) : image(map.twin(d));
  }
  for (int p = 0; p < map.leg_count(); ++p) legs[p] = image(map.leg_dart(p));
  return PlanarMap(std::move(twin), std::move(legs));
}

Removal remove_vertex(const PlanarMap& map, VertexId v) {
  const int n = map.crossings();
  if (n < 2) throw StructuralError("cannot remove the only crossing");
  Removal r;
  r.old_to_new.assign(map.dart_count(), -1);
  for (DartId d = 0; d < map.dart_count(); ++d) {
    const VertexId u = PlanarMap::vertex_of(d);
    if (u == v) continue;
    r.old_to_new[d] = d - (u > v ? 4 : 0);
  }

  std::vector<DartId> twin(4 * (n - 1));
  std::vector<char> attached(twin.size(), 0);
  DartId start = -1;
  int start_pos = map.leg_count();
  for (DartId d = 0; d < map.dart_count(); ++d) {
    const DartId nd = r.old_to_new[d];
    if (nd < 0) continue;
    if (map.is_leg(d)) {
      twin[nd] = -1;
      if (map.leg_position(d) < start_pos) {
        start_pos = map.leg_position(d);
        start = nd;
      }
    } else if (map.neighbor(d) == v) {
      twin[nd] = -1;
      attached[nd] = 1;
    } else {
      twin[nd] = r.old_to_new[map.twin(d)];
    }
  }
  if (start < 0) {
    for (DartId d = 0; d < static_cast<int>(twin.size()); ++d)
      if (attached[d]) {
        start = d;
        break;
      }
  }
  if (start < 0) throw StructuralError("removal leaves no legs");

  std::vector<DartId> order = detail::leg_cycle(twin, start);
  if (order.empty()) throw StructuralError("removal produced an inconsistent boundary");
  const int legs = static_cast<int>(order.size());
  std::vector<char> is_attached_pos(legs, 0);
  for (int p = 0; p < legs; ++p) {
    twin[order[p]] = PlanarMap::leg_marker(p);
    if (attached[order[p]]) is_attached_pos[p] = 1;
  }
  int first = 0;
  for (int p = 0; p < legs; ++p) {
    if (is_attached_pos[p] && !is_attached_pos[(p + legs - 1) % legs]) {
      first = p;
      break;
    }
  }
  for (int i = 0; i < legs; ++i) {
    const int p = (first + i) % legs;
    if (is_attached_pos[p]) r.attached_positions.push_back(p);
  }
  r.map = PlanarMap(std::move(twin), std::move(order));
  return r;
}

PlanarMap single_crossing() {
  return PlanarMap({PlanarMap::leg_marker(0), PlanarMap::leg_marker(1), PlanarMap::leg_marker(2),
                    PlanarMap::leg_marker(3)},
                   {0, 1, 2, 3});
}

}  // namespace tangle
