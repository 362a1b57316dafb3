#include "tangle/canonical.hpp"

#include <algorithm>
#include <optional>

namespace tangle {

namespace {

Pattern pattern_for_up_degree(int up) {
  switch (up) {
    case 1: return Pattern::P;
    case 2: return Pattern::X;
    case 3: return Pattern::Q;
  }
  throw std::logic_error("peeled crossing has " + std::to_string(up) + " edges into the remainder");
}

}  // namespace

Peel peel(const PlanarMap& map, const InvariantCode& inv) {
  Peel p;
  p.vertex = inv.canonical_roots.front().vertex();
  int changes = 0;
  for (int j = 0; j < 4; ++j) {
    const DartId a = 4 * p.vertex + j;
    changes += map.is_leg(a) != map.is_leg(PlanarMap::rot_next(a)) ? 1 : 0;
  }
  if (changes != 2) throw std::logic_error("legs of the peeled crossing are not contiguous");
  p.pattern = pattern_for_up_degree(4 - map.legs_at(p.vertex));

  Removal r = remove_vertex(map, p.vertex);
  const int w = r.map.leg_count();
  for (std::size_t i = 1; i < r.attached_positions.size(); ++i)
    if (r.attached_positions[i] != (r.attached_positions[i - 1] + 1) % w)
      throw std::logic_error("peeled crossing is not attached to consecutive legs");
  p.remainder = std::move(r.map);
  p.attached = std::move(r.attached_positions);
  return p;
}

Step placement(const PlanarMap& remainder, const InvariantCode& remainder_inv, std::span<const int> attached,
               Pattern pattern, const Expansion& expansion, const InvariantCode& expansion_inv) {
  if (remainder_inv.full != expansion_inv.full)
    throw std::logic_error("remainder is not isomorphic to the expanded parent code");
  const int w = expansion.map.leg_count();
  const Root& from = remainder_inv.canonical_roots.front();
  std::optional<int> best;
  std::vector<char> hit(w);
  for (const Root& to : expansion_inv.canonical_roots) {
    const auto iso = root_isomorphism(remainder, from, expansion.map, to);
    std::fill(hit.begin(), hit.end(), 0);
    for (int p : attached) hit[expansion.map.leg_position(iso[remainder.leg_dart(p)])] = 1;
    int start = 0;
    for (int q = 0; q < w; ++q)
      if (hit[q] && !hit[(q + w - 1) % w]) start = q;
    const int shift = ((start - expansion.reference) % w + w) % w;
    if (!best || shift < *best) best = shift;
  }
  return {pattern, *best};
}

CascadeCode canonical_code(const PlanarMap& map) {
  if (!is_connected(map)) throw std::invalid_argument("projection is not connected");
  if (is_composite(map)) throw std::invalid_argument("projection is composite");

  struct Level {
    Peel peel;
    InvariantCode remainder_inv;
  };
  std::vector<Level> levels;
  levels.reserve(map.crossings());
  InvariantCode inv = invariant_root_code(map);
  const PlanarMap* current = &map;
  while (current->crossings() > 1) {
    Level level{peel(*current, inv), {}};
    level.remainder_inv = invariant_root_code(level.peel.remainder);
    inv = level.remainder_inv;
    levels.push_back(std::move(level));
    current = &levels.back().peel.remainder;
  }

  CascadeCode code;
  Expansion e{single_crossing(), 0};
  InvariantCode e_inv = invariant_root_code(e.map);
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const Step s = placement(it->peel.remainder, it->remainder_inv, it->peel.attached, it->peel.pattern, e, e_inv);
    code.steps.push_back(s);
    e = attach(e.map, s.pattern, e.reference + s.shift);
    e_inv = invariant_root_code(e.map);
  }
  return code;
}

bool is_canonical(const CascadeCode& code) {
  try {
    return canonical_code(expand(code)) == code;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

CascadeCode parent(const CascadeCode& code) {
  if (code.steps.empty()) throw std::invalid_argument("the single-crossing projection has no parent");
  CascadeCode p = code;
  p.steps.pop_back();
  return p;
}

Genealogy genealogy(const CascadeCode& code) {
  Genealogy g;
  for (std::size_t len = 0; len <= code.steps.size(); ++len) {
    CascadeCode prefix{std::vector<Step>(code.steps.begin(), code.steps.begin() + len)};
    if (!is_canonical(prefix))
      throw NonCanonicalError(prefix.crossings(), "prefix " + to_string(prefix) + " is not canonical");
    g.prefixes.push_back(std::move(prefix));
  }
  return g;
}

}  // namespace tangle
