#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tangle {

/// Raised when a rotation system does not describe a planar map of the disk.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VertexId = int;
using DartId = int;

/// Bit set over crossings; maps are limited to kMaxCrossings vertices.
using VertexMask = std::uint32_t;
inline constexpr int kMaxCrossings = 31;

/// A tangle projection as a combinatorial map of the disk.
///
/// Every crossing owns four darts numbered 4*v .. 4*v+3 in counterclockwise
/// rotation order. An internal dart is paired with its twin; a leg dart runs
/// to the boundary circle and carries its position among the 2k legs, which
/// are numbered counterclockwise.
class PlanarMap {
 public:
  PlanarMap() = default;

  /// Builds and validates a map. `twin[d]` is either another dart or
  /// `leg_marker(p)` for a leg at boundary position p; `legs[p]` lists the
  /// dart of leg p. Throws StructuralError unless the map is a planar disk
  /// map whose crossings all reach the boundary.
  PlanarMap(std::vector<DartId> twin, std::vector<DartId> legs);

  static constexpr DartId leg_marker(int position) { return -1 - position; }

  static constexpr VertexId vertex_of(DartId d) { return d >> 2; }
  static constexpr int slot_of(DartId d) { return d & 3; }
  static constexpr DartId rot_next(DartId d) { return (d & ~3) | ((d + 1) & 3); }
  static constexpr DartId rot_prev(DartId d) { return (d & ~3) | ((d + 3) & 3); }

  int crossings() const { return static_cast<int>(twin_.size()) / 4; }
  int leg_count() const { return static_cast<int>(legs_.size()); }
  /// Half the number of legs (the k of a k-tangle).
  int half_legs() const { return leg_count() / 2; }
  int dart_count() const { return static_cast<int>(twin_.size()); }

  bool is_leg(DartId d) const { return twin_[d] < 0; }
  DartId twin(DartId d) const { return twin_[d]; }
  int leg_position(DartId d) const { return -1 - twin_[d]; }
  DartId leg_dart(int position) const { return legs_[position]; }
  /// Neighbouring crossing along an internal dart.
  VertexId neighbor(DartId d) const { return vertex_of(twin_[d]); }

  int legs_at(VertexId v) const;
  /// Bit mask of crossings joined to v by an internal edge (loops excluded).
  VertexMask adjacency(VertexId v) const;
  VertexMask all_vertices() const {
    return crossings() >= 32 ? ~VertexMask{0} : (VertexMask{1} << crossings()) - 1;
  }

  std::span<const DartId> twins() const { return twin_; }
  std::span<const DartId> legs() const { return legs_; }

  /// Line-oriented dump used for byte-level comparisons and debugging.
  std::string serialize() const;

  friend bool operator==(const PlanarMap&, const PlanarMap&) = default;

 private:
  std::vector<DartId> twin_;
  std::vector<DartId> legs_;
};

struct Face {
  /// Darts walked along the face border, each dart leaving its crossing.
  std::vector<DartId> darts;
  bool is_boundary = false;
  /// Projection edges on the border, legs included.
  int edge_degree = 0;
};

/// Face decomposition with dart-to-face lookup.
///
/// Boundary face i lies between legs i and i+1; boundary faces occupy
/// indices 0..2k-1 and internal faces follow.
struct FaceStructure {
  std::vector<Face> faces;
  std::vector<int> face_of_dart;
  int boundary_count = 0;

  /// Faces on either side of the edge through dart d; for a leg at position
  /// p these are boundary faces p-1 and p.
  std::pair<int, int> sides(const PlanarMap& map, DartId d) const;
};

FaceStructure face_structure(const PlanarMap& map);
std::vector<Face> faces(const PlanarMap& map);

bool is_connected(const PlanarMap& map);
/// Connectivity of the crossing graph restricted to `mask`.
bool is_connected(const PlanarMap& map, VertexMask mask);

VertexMask boundary_vertices(const PlanarMap& map);
VertexMask cut_vertices(const PlanarMap& map);

/// True when a closed curve inside the disk meets the projection exactly
/// twice and encloses a crossing. Maps with a single pair of legs are always
/// composite.
bool is_composite(const PlanarMap& map);
bool is_composite(const PlanarMap& map, const FaceStructure& fs);

/// No two crossings share more than one edge. Throws std::logic_error if the
/// parallel-edge test and the 2-face test disagree.
bool is_reduced(const PlanarMap& map);

bool is_prime_connected(const PlanarMap& map);

/// Relabels crossings: crossing v becomes `perm[v]`.
PlanarMap relabel(const PlanarMap& map, std::span<const VertexId> perm);

/// Removes crossing v. Darts that pointed at v become legs; returned in
/// `attached` in counterclockwise leg order of the result. `old_to_new`
/// maps every surviving dart of `map` to its id in the result.
struct Removal {
  PlanarMap map;
  std::vector<int> attached_positions;
  std::vector<DartId> old_to_new;
};
Removal remove_vertex(const PlanarMap& map, VertexId v);

/// The 1-crossing map with four legs.
PlanarMap single_crossing();

namespace detail {
/// Orders leg darts of a rotation system by walking the outer face.
/// `twin` uses any negative value for legs. Returns an empty vector if the
/// walk does not visit every leg exactly once.
std::vector<DartId> leg_cycle(std::span<const DartId> twin, DartId start);
int popcount(VertexMask m);
}  // namespace detail

}  // namespace tangle
