#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tangle/planar_map.hpp"

namespace tangle {

enum class Direction : std::uint8_t { Ccw, Cw };

constexpr DartId step(DartId d, Direction dir) {
  return dir == Direction::Ccw ? PlanarMap::rot_next(d) : PlanarMap::rot_prev(d);
}

/// A root (vertex, edge, face). The edge is `dart`; the face is the one in
/// the corner that follows `dart` in the labeling direction.
struct Root {
  DartId dart = 0;
  Direction direction = Direction::Ccw;

  VertexId vertex() const { return PlanarMap::vertex_of(dart); }
  friend auto operator<=>(const Root&, const Root&) = default;
};

int root_face(const FaceStructure& fs, const Root& root);

/// Vertex numbering induced by a root. Labels are 1-based as in the
/// adjacency lists; `order[i]` is the vertex labeled i+1 and `entry[i]` the
/// dart its neighbour scan starts from.
struct Labeling {
  Direction direction = Direction::Ccw;
  std::vector<int> label;
  std::vector<VertexId> order;
  std::vector<DartId> entry;

  /// j-th dart of the vertex labeled i+1, counted from its entry dart.
  DartId dart(int i, int j) const;
};

/// Throws StructuralError if the map is disconnected.
Labeling label_vertices(const PlanarMap& map, const Root& root);

/// Flat adjacency list under a root labeling: 4n entries, 0 for legs, each
/// block of four rotated to its lexicographic minimum.
struct RootCode {
  std::vector<std::uint8_t> entries;
  friend auto operator<=>(const RootCode&, const RootCode&) = default;
};

RootCode root_code(const PlanarMap& map, const Root& root);
std::string to_string(const RootCode& code);

/// Complete rooted-map code: for each labeled vertex, its darts from the
/// entry dart on, each recorded as 0 (leg) or 1 + 4*(label-1) + slot of
/// the twin relative to the neighbour's entry. Equal codes for two roots
/// means an isomorphism carrying one root to the other.
std::vector<std::uint8_t> full_code(const PlanarMap& map, const Root& root);

/// Degrees of the 2k boundary faces from the root face in labeling order.
/// Throws std::invalid_argument if the root face is not a boundary face.
std::vector<int> face_code(const PlanarMap& map, const Root& root);
std::vector<int> face_code(const FaceStructure& fs, const Root& root);

/// The R-set: roots at non-cut boundary vertices of maximal leg count whose
/// root face lies on the boundary and whose face-code is minimal.
std::vector<Root> candidate_roots(const PlanarMap& map);
std::vector<Root> candidate_roots(const PlanarMap& map, const FaceStructure& fs);

struct InvariantCode {
  RootCode code;
  /// Roots attaining `code`; ties are settled by the full code, so all of
  /// them are images of one another under automorphisms.
  std::vector<Root> canonical_roots;
  std::vector<std::uint8_t> full;
};

InvariantCode invariant_root_code(const PlanarMap& map);
InvariantCode invariant_root_code(const PlanarMap& map, const FaceStructure& fs);
/// Same, restricted to an already computed R-set.
InvariantCode invariant_root_code(const PlanarMap& map, std::span<const Root> r_set);

/// Element of the dihedral group acting on the 2k leg positions:
/// p -> rotation + p, or p -> rotation - p when reflecting.
struct DihedralElement {
  int legs = 4;
  int rotation = 0;
  bool reflect = false;

  int apply(int position) const;
  DihedralElement compose(const DihedralElement& inner) const;  // this after inner
  DihedralElement inverse() const;
  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

std::vector<DihedralElement> dihedral_group(int legs);

/// Moves the legs of a map by g; reflections mirror every rotation.
PlanarMap transform(const PlanarMap& map, const DihedralElement& g);

/// Dart correspondence carrying root `from` of `a` onto root `to` of `b`
/// (indexed by darts of `a`). Both roots must have equal full codes.
std::vector<DartId> root_isomorphism(const PlanarMap& a, const Root& from, const PlanarMap& b, const Root& to);

/// Boundary action induced by a dart isomorphism between maps with the same
/// number of legs.
DihedralElement leg_action(const PlanarMap& a, const PlanarMap& b, std::span<const DartId> dart_map,
                           bool reflects);

/// Automorphisms of the map, given by their action on the legs.
std::vector<DihedralElement> symmetries(const PlanarMap& map);
std::vector<DihedralElement> symmetries(const PlanarMap& map, const InvariantCode& inv);

namespace detail {
/// R-set without the non-emptiness check, for maps not yet known to be prime.
std::vector<Root> r_set(const PlanarMap& map, const FaceStructure& fs);
}  // namespace detail

}  // namespace tangle
