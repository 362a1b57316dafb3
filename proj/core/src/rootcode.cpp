#include "tangle/rootcode.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace tangle {

namespace {

int relative_slot(DartId d, DartId entry, Direction dir) {
  const int a = PlanarMap::slot_of(d);
  const int b = PlanarMap::slot_of(entry);
  return dir == Direction::Ccw ? (a - b + 4) & 3 : (b - a + 4) & 3;
}

std::array<std::uint8_t, 4> min_rotation(const std::array<std::uint8_t, 4>& line) {
  std::array<std::uint8_t, 4> best = line;
  for (int s = 1; s < 4; ++s) {
    const std::array<std::uint8_t, 4> r{line[s], line[(s + 1) & 3], line[(s + 2) & 3], line[(s + 3) & 3]};
    if (r < best) best = r;
  }
  return best;
}

bool face_code_less(const std::vector<int>& degree, int a, Direction da, int b, Direction db) {
  const int w = static_cast<int>(degree.size());
  const int sa = da == Direction::Ccw ? 1 : w - 1;
  const int sb = db == Direction::Ccw ? 1 : w - 1;
  for (int t = 0; t < w; ++t) {
    const int x = degree[(a + sa * t) % w];
    const int y = degree[(b + sb * t) % w];
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

int root_face(const FaceStructure& fs, const Root& root) {
  return root.direction == Direction::Ccw ? fs.face_of_dart[PlanarMap::rot_next(root.dart)]
                                          : fs.face_of_dart[root.dart];
}

DartId Labeling::dart(int i, int j) const {
  DartId d = entry[i];
  for (int s = 0; s < j; ++s) d = step(d, direction);
  return d;
}

Labeling label_vertices(const PlanarMap& map, const Root& root) {
  const int n = map.crossings();
  Labeling lab;
  lab.direction = root.direction;
  lab.label.assign(n, 0);
  lab.order.reserve(n);
  lab.entry.reserve(n);

  lab.label[root.vertex()] = 1;
  lab.order.push_back(root.vertex());
  lab.entry.push_back(root.dart);
  for (std::size_t qi = 0; qi < lab.order.size(); ++qi) {
    DartId d = lab.entry[qi];
    for (int j = 0; j < 4; ++j, d = step(d, root.direction)) {
      if (map.is_leg(d)) continue;
      const VertexId w = map.neighbor(d);
      if (lab.label[w]) continue;
      lab.label[w] = static_cast<int>(lab.order.size()) + 1;
      lab.order.push_back(w);
      lab.entry.push_back(map.twin(d));
    }
  }
  if (static_cast<int>(lab.order.size()) != n) throw StructuralError("cannot label a disconnected map");
  return lab;
}

namespace {

void encode(const PlanarMap& map, const Labeling& lab, std::vector<std::uint8_t>* adjacency,
            std::vector<std::uint8_t>* full) {
  const int n = map.crossings();
  if (adjacency) adjacency->resize(4 * n);
  if (full) full->resize(4 * n);
  for (int i = 0; i < n; ++i) {
    std::array<std::uint8_t, 4> line{};
    DartId d = lab.entry[i];
    for (int j = 0; j < 4; ++j, d = step(d, lab.direction)) {
      if (map.is_leg(d)) {
        line[j] = 0;
        if (full) (*full)[4 * i + j] = 0;
        continue;
      }
      const DartId t = map.twin(d);
      const int other = lab.label[PlanarMap::vertex_of(t)];
      line[j] = static_cast<std::uint8_t>(other);
      if (full)
        (*full)[4 * i + j] =
            static_cast<std::uint8_t>(1 + 4 * (other - 1) + relative_slot(t, lab.entry[other - 1], lab.direction));
    }
    if (adjacency) {
      const auto m = min_rotation(line);
      std::copy(m.begin(), m.end(), adjacency->begin() + 4 * i);
    }
  }
}

}  // namespace

RootCode root_code(const PlanarMap& map, const Root& root) {
  RootCode rc;
  encode(map, label_vertices(map, root), &rc.entries, nullptr);
  return rc;
}

std::string to_string(const RootCode& code) {
  std::string out;
  for (std::size_t i = 0; i < code.entries.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(code.entries[i]);
  }
  return out;
}

std::vector<std::uint8_t> full_code(const PlanarMap& map, const Root& root) {
  std::vector<std::uint8_t> f;
  encode(map, label_vertices(map, root), nullptr, &f);
  return f;
}

std::vector<int> face_code(const FaceStructure& fs, const Root& root) {
  const int f = root_face(fs, root);
  const int w = fs.boundary_count;
  if (f >= w) throw std::invalid_argument("root face is not a boundary face");
  std::vector<int> code(w);
  const int s = root.direction == Direction::Ccw ? 1 : w - 1;
  for (int t = 0; t < w; ++t) code[t] = fs.faces[(f + s * t) % w].edge_degree;
  return code;
}

std::vector<int> face_code(const PlanarMap& map, const Root& root) { return face_code(face_structure(map), root); }

namespace detail {

// R-set without the non-emptiness check; used on unfiltered children.
std::vector<Root> r_set(const PlanarMap& map, const FaceStructure& fs) {
  std::vector<Root> out;
  if (fs.boundary_count != map.leg_count()) return out;
  const VertexMask eligible = boundary_vertices(map) & ~cut_vertices(map);
  int max_legs = 0;
  for (int v = 0; v < map.crossings(); ++v)
    if (eligible >> v & 1) max_legs = std::max(max_legs, map.legs_at(v));
  if (max_legs == 0) return out;

  const int w = fs.boundary_count;
  std::vector<int> degree(w);
  for (int i = 0; i < w; ++i) degree[i] = fs.faces[i].edge_degree;

  int best_face = -1;
  Direction best_dir = Direction::Ccw;
  for (int v = 0; v < map.crossings(); ++v) {
    if (!(eligible >> v & 1) || map.legs_at(v) != max_legs) continue;
    for (int j = 0; j < 4; ++j) {
      for (Direction dir : {Direction::Ccw, Direction::Cw}) {
        const Root r{4 * v + j, dir};
        const int f = root_face(fs, r);
        if (f >= w) continue;
        if (best_face < 0 || face_code_less(degree, f, dir, best_face, best_dir)) {
          out.clear();
          best_face = f;
          best_dir = dir;
          out.push_back(r);
        } else if (!face_code_less(degree, best_face, best_dir, f, dir)) {
          out.push_back(r);
        }
      }
    }
  }
  return out;
}

}  // namespace detail

std::vector<Root> candidate_roots(const PlanarMap& map, const FaceStructure& fs) {
  auto out = detail::r_set(map, fs);
  if (out.empty()) throw std::logic_error("empty R-set: map has no non-cut boundary crossing");
  return out;
}

std::vector<Root> candidate_roots(const PlanarMap& map) { return candidate_roots(map, face_structure(map)); }

InvariantCode invariant_root_code(const PlanarMap& map, std::span<const Root> r_set) {
  InvariantCode inv;
  if (r_set.empty()) throw std::logic_error("invariant root-code of an empty R-set");
  std::vector<std::uint8_t> code;
  for (const Root& r : r_set) {
    encode(map, label_vertices(map, r), &code, nullptr);
    if (inv.canonical_roots.empty() || code < inv.code.entries) {
      inv.code.entries = code;
      inv.canonical_roots.assign(1, r);
    } else if (code == inv.code.entries) {
      inv.canonical_roots.push_back(r);
    }
  }

  encode(map, label_vertices(map, inv.canonical_roots.front()), nullptr, &inv.full);
  if (inv.canonical_roots.size() > 1) {
    std::vector<Root> tied = std::move(inv.canonical_roots);
    inv.canonical_roots.assign(1, tied.front());
    std::vector<std::uint8_t> f;
    for (std::size_t i = 1; i < tied.size(); ++i) {
      encode(map, label_vertices(map, tied[i]), nullptr, &f);
      if (f < inv.full) {
        inv.full = f;
        inv.canonical_roots.assign(1, tied[i]);
      } else if (f == inv.full) {
        inv.canonical_roots.push_back(tied[i]);
      }
    }
  }
  return inv;
}

InvariantCode invariant_root_code(const PlanarMap& map, const FaceStructure& fs) {
  const auto r = candidate_roots(map, fs);
  return invariant_root_code(map, std::span<const Root>(r));
}

InvariantCode invariant_root_code(const PlanarMap& map) { return invariant_root_code(map, face_structure(map)); }

int DihedralElement::apply(int position) const {
  const int p = reflect ? rotation - position : rotation + position;
  return ((p % legs) + legs) % legs;
}

DihedralElement DihedralElement::compose(const DihedralElement& inner) const {
  const int r = (reflect ? -inner.rotation : inner.rotation) + rotation;
  return {legs, ((r % legs) + legs) % legs, reflect != inner.reflect};
}

DihedralElement DihedralElement::inverse() const {
  if (reflect) return *this;
  return {legs, (legs - rotation) % legs, false};
}

std::vector<DihedralElement> dihedral_group(int legs) {
  std::vector<DihedralElement> g;
  for (bool reflect : {false, true})
    for (int r = 0; r < legs; ++r) g.push_back({legs, r, reflect});
  return g;
}

PlanarMap transform(const PlanarMap& map, const DihedralElement& g) {
  std::vector<DartId> twin(map.dart_count());
  std::vector<DartId> legs(map.leg_count());
  auto image = [&](DartId d) {
    return g.reflect ? (d & ~3) | ((4 - PlanarMap::slot_of(d)) & 3) : d;
  };
  for (DartId d = 0; d < map.dart_count(); ++d) {
    if (map.is_leg(d)) {
      const int q = g.apply(map.leg_position(d));
      twin[image(d)] = PlanarMap::leg_marker(q);
      legs[q] = image(d);
    } else {
      twin[image(d)] = image(map.twin(d));
    }
  }
  return PlanarMap(std::move(twin), std::move(legs));
}

std::vector<DartId> root_isomorphism(const PlanarMap& a, const Root& from, const PlanarMap& b, const Root& to) {
  const Labeling la = label_vertices(a, from);
  const Labeling lb = label_vertices(b, to);
  std::vector<DartId> image(a.dart_count(), -1);
  for (int i = 0; i < a.crossings(); ++i) {
    DartId x = la.entry[i];
    DartId y = lb.entry[i];
    for (int j = 0; j < 4; ++j) {
      image[x] = y;
      x = step(x, la.direction);
      y = step(y, lb.direction);
    }
  }
  return image;
}

DihedralElement leg_action(const PlanarMap& a, const PlanarMap& b, std::span<const DartId> dart_map,
                           bool reflects) {
  const int w = a.leg_count();
  if (b.leg_count() != w) throw std::logic_error("leg counts differ");
  const int q0 = b.leg_position(dart_map[a.leg_dart(0)]);
  const DihedralElement g{w, q0, reflects};
  for (int p = 0; p < w; ++p) {
    const DartId e = dart_map[a.leg_dart(p)];
    if (!b.is_leg(e) || b.leg_position(e) != g.apply(p)) throw std::logic_error("isomorphism is not dihedral on legs");
  }
  return g;
}

std::vector<DihedralElement> symmetries(const PlanarMap& map, const InvariantCode& inv) {
  std::vector<DihedralElement> out;
  const Root& ref = inv.canonical_roots.front();
  for (const Root& r : inv.canonical_roots) {
    const auto iso = root_isomorphism(map, ref, map, r);
    out.push_back(leg_action(map, map, iso, r.direction != ref.direction));
  }
  return out;
}

std::vector<DihedralElement> symmetries(const PlanarMap& map) { return symmetries(map, invariant_root_code(map)); }

}  // namespace tangle
