#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tangle/rootcode.hpp"

using namespace tangle;
using namespace testing;

namespace {

std::vector<PlanarMap> prime_maps(int n) {
  std::vector<PlanarMap> out;
  for (const CascadeCode& c : all_valid_codes(n)) {
    PlanarMap m = expand(c);
    if (!brute_composite(m)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("labeling") {
  const PlanarMap one = single_crossing();
  for (DartId d = 0; d < 4; ++d) {
    const Labeling l = label_vertices(one, {d, Direction::Cw});
    CHECK(l.label == std::vector<int>{1});
  }
  const PlanarMap two = two_crossings_six_legs();
  CHECK(label_vertices(two, {1, Direction::Ccw}).label == std::vector<int>{1, 2});
  CHECK(label_vertices(two, {5, Direction::Ccw}).label == std::vector<int>{2, 1});

  for (int n = 1; n <= 5; ++n)
    for (const PlanarMap& m : prime_maps(n))
      for (DartId d = 0; d < m.dart_count(); d += 3)
        for (Direction dir : {Direction::Ccw, Direction::Cw}) {
          const Labeling l = label_vertices(m, {d, dir});
          std::vector<int> sorted = l.label;
          std::sort(sorted.begin(), sorted.end());
          for (int i = 0; i < n; ++i) REQUIRE(sorted[i] == i + 1);
          CHECK(l.label[PlanarMap::vertex_of(d)] == 1);
          // Every vertex but the root is labeled after some neighbour.
          for (int v = 0; v < n; ++v) {
            if (l.label[v] == 1) continue;
            bool earlier = false;
            for (int j = 0; j < 4; ++j) {
              const DartId x = 4 * v + j;
              earlier |= !m.is_leg(x) && l.label[m.neighbor(x)] < l.label[v];
            }
            CHECK(earlier);
          }
        }
}

TEST_CASE("root codes of small maps") {
  CHECK(to_string(root_code(single_crossing(), {0, Direction::Ccw})) == "0 0 0 0");
  CHECK(to_string(root_code(two_crossings_six_legs(), {0, Direction::Ccw})) == "0 0 0 2 0 0 0 1");
  CHECK(to_string(root_code(bigon(), {0, Direction::Ccw})) == "0 0 2 2 0 0 1 1");

  for (int n = 1; n <= 4; ++n)
    for (const PlanarMap& m : prime_maps(n)) {
      const RootCode rc = root_code(m, {0, Direction::Cw});
      REQUIRE(rc.entries.size() == static_cast<std::size_t>(4 * n));
      for (int i = 0; i < n; ++i) {
        std::vector<std::uint8_t> line(rc.entries.begin() + 4 * i, rc.entries.begin() + 4 * i + 4);
        for (int r = 1; r < 4; ++r) {
          std::vector<std::uint8_t> rotated(line.begin() + r, line.end());
          rotated.insert(rotated.end(), line.begin(), line.begin() + r);
          CHECK(line <= rotated);
        }
      }
    }
}

TEST_CASE("face codes") {
  CHECK(face_code(single_crossing(), {0, Direction::Ccw}) == std::vector<int>{2, 2, 2, 2});
  const PlanarMap two = two_crossings_six_legs();
  const auto fs = face_structure(two);
  // Dart 0 is the shared edge; the corner after it counterclockwise is a
  // degree-3 boundary face.
  const Root r{0, Direction::Ccw};
  REQUIRE(fs.faces[root_face(fs, r)].edge_degree == 3);
  CHECK(face_code(two, r) == std::vector<int>{3, 2, 2, 3, 2, 2});

  const auto base = face_code(two, {1, Direction::Ccw});
  const auto turned = face_code(two, {2, Direction::Ccw});
  std::vector<int> shifted(base.begin() + 1, base.end());
  shifted.push_back(base.front());
  CHECK(turned == shifted);

  const PlanarMap b = bigon();
  // Clockwise from dart 1 of the bigon lies the internal 2-face.
  CHECK_THROWS_AS(face_code(b, {1, Direction::Cw}), std::invalid_argument);
}

TEST_CASE("candidate roots") {
  CHECK(candidate_roots(single_crossing()).size() == 8);
  const auto r = candidate_roots(two_crossings_six_legs());
  CHECK_FALSE(r.empty());
  std::set<VertexId> vertices;
  for (const Root& root : r) vertices.insert(root.vertex());
  CHECK(vertices.size() == 2);

  for (int n = 1; n <= 5; ++n)
    for (const PlanarMap& m : prime_maps(n)) {
      const auto roots = candidate_roots(m);
      REQUIRE_FALSE(roots.empty());
      const VertexMask cut = cut_vertices(m);
      for (const Root& root : roots) {
        CHECK(m.legs_at(root.vertex()) > 0);
        CHECK_FALSE(((cut >> root.vertex()) & 1) != 0);
      }
    }
}

TEST_CASE("invariant root code") {
  const InvariantCode one = invariant_root_code(single_crossing());
  CHECK(to_string(one.code) == "0 0 0 0");
  CHECK(one.canonical_roots.size() == 8);

  std::set<RootCode> n3;
  for (const PlanarMap& m : prime_maps(3)) n3.insert(invariant_root_code(m).code);
  CHECK(n3.size() == 6);

  std::mt19937 rng(11);
  for (int n = 1; n <= 4; ++n)
    for (const PlanarMap& m : prime_maps(n)) {
      const InvariantCode inv = invariant_root_code(m);
      for (const DihedralElement& g : dihedral_group(m.leg_count())) {
        const PlanarMap moved = random_relabel(transform(m, g), rng);
        REQUIRE(oracle_maps_by(m, moved, g.rotation, g.reflect));
        const InvariantCode other = invariant_root_code(moved);
        CHECK(other.code == inv.code);
        CHECK(other.full == inv.full);
      }
    }
}

TEST_CASE("dihedral group") {
  for (int legs : {4, 6, 10}) {
    const auto group = dihedral_group(legs);
    CHECK(group.size() == static_cast<std::size_t>(2 * legs));
    for (const auto& a : group) {
      CHECK(a.compose(a.inverse()) == DihedralElement{legs, 0, false});
      for (const auto& b : group)
        for (int p = 0; p < legs; ++p) CHECK(a.compose(b).apply(p) == a.apply(b.apply(p)));
    }
  }
}

TEST_CASE("symmetry groups") {
  CHECK(symmetries(single_crossing()).size() == 8);
  const auto bigon_sym = symmetries(bigon());
  CHECK(std::find(bigon_sym.begin(), bigon_sym.end(), DihedralElement{4, 2, false}) != bigon_sym.end());

  for (int n = 1; n <= 5; ++n)
    for (const PlanarMap& m : prime_maps(n)) {
      const auto sym = symmetries(m);
      int expected = 0;
      for (const DihedralElement& g : dihedral_group(m.leg_count())) expected += oracle_maps_by(m, m, g.rotation, g.reflect);
      CHECK(sym.size() == static_cast<std::size_t>(expected));
      CHECK((4 * m.half_legs()) % sym.size() == 0);
      for (const auto& a : sym) {
        // Each element really is an automorphism.
        CHECK(oracle_maps_by(m, m, a.rotation, a.reflect));
        for (const auto& b : sym) CHECK(std::find(sym.begin(), sym.end(), a.compose(b)) != sym.end());
      }
    }
}
