#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "tangle/cascade.hpp"
#include "tangle/rootcode.hpp"

namespace tangle {

/// Raised for codes whose prefixes are not canonical.
class NonCanonicalError : public std::invalid_argument {
 public:
  NonCanonicalError(int crossings, const std::string& what) : std::invalid_argument(what), crossings_(crossings) {}
  /// Crossing count of the first prefix that fails to re-canonicalize.
  int crossings() const { return crossings_; }

 private:
  int crossings_;
};

/// Removal of a canonical root-vertex from a prime connected map.
struct Peel {
  VertexId vertex = 0;
  Pattern pattern = Pattern::X;
  PlanarMap remainder;
  /// Legs of `remainder` that were joined to the removed crossing, in
  /// counterclockwise order.
  std::vector<int> attached;
};

/// Peels the crossing of the first canonical root. Throws std::logic_error if
/// that crossing cannot sit at the bottom of a cascade (cut vertex).
Peel peel(const PlanarMap& map, const InvariantCode& inv);

/// Smallest (pattern, shift) placing the peeled crossing below `expansion`,
/// over all isomorphisms between `remainder` and the expanded map.
Step placement(const PlanarMap& remainder, const InvariantCode& remainder_inv, std::span<const int> attached,
               Pattern pattern, const Expansion& expansion, const InvariantCode& expansion_inv);

/// Canonical cascade code of a prime connected projection. Throws
/// std::invalid_argument for composite or disconnected maps.
CascadeCode canonical_code(const PlanarMap& map);

bool is_canonical(const CascadeCode& code);

/// Code of the parent projection (the code without its last pair).
CascadeCode parent(const CascadeCode& code);

struct Genealogy {
  /// Codes of P_1 .. P_n; element i has i pairs.
  std::vector<CascadeCode> prefixes;
};

/// Throws NonCanonicalError naming the first prefix that is not canonical.
Genealogy genealogy(const CascadeCode& code);

}  // namespace tangle
