#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tangle/cascade.hpp"
#include "tangle/rootcode.hpp"

namespace tangle {

enum class ProjectionClass { Projections, Alternating, Reduced, WeakFiltered };

std::string_view class_name(ProjectionClass c);
/// Accepts "proj", "alt", "reduced" and "weakfilter".
ProjectionClass parse_class(std::string_view name);

/// Counts indexed by (n, k).
struct CountsTable {
  ProjectionClass cls = ProjectionClass::Projections;
  std::map<std::pair<int, int>, std::uint64_t> cells;

  void add(int n, int k, std::uint64_t count = 1) { cells[{n, k}] += count; }
  std::uint64_t at(int n, int k) const;
  std::uint64_t total(int n) const;
  int max_n() const;
};

/// Place for a new bottom crossing: `pattern` grabs legs position ..
/// position+up-1 counterclockwise.
struct ExtensionSite {
  Pattern pattern = Pattern::X;
  int position = 0;
  friend bool operator==(const ExtensionSite&, const ExtensionSite&) = default;
};

/// One site per orbit of the 6k raw sites under `symmetries`, choosing in
/// each orbit the site with the smallest shift relative to `reference`.
std::vector<ExtensionSite> extension_sites(const PlanarMap& map, int reference,
                                           std::span<const DihedralElement> symmetries);

/// Canonical codes of all prime projections whose parent is `parent_code`.
/// Each child's code is recomputed from its map before it is returned.
/// Throws std::invalid_argument if `parent_code` is not canonical.
std::vector<CascadeCode> children(const CascadeCode& parent_code);

/// Weak-equivalence candidate: no crossing carries two or more legs. The
/// single crossing is accepted as the trivial class.
bool weak_filter(const PlanarMap& map);

struct EnumerateOptions {
  int max_n = 1;
  int workers = 1;
  /// Recompute every accepted child's canonical code from scratch and drop
  /// the child if it differs.
  bool verify = false;
};

/// Called once per completed level, in increasing n.
using LevelSink = std::function<void(int n, const std::vector<CascadeCode>& codes)>;

struct EnumerationResult {
  CountsTable projections{ProjectionClass::Projections, {}};
  CountsTable reduced{ProjectionClass::Reduced, {}};
  CountsTable weak{ProjectionClass::WeakFiltered, {}};
  /// Children dropped as repeats within one parent's batch.
  std::uint64_t duplicates = 0;
  /// Children dropped because their recomputed canonical code differed.
  std::uint64_t verify_failures = 0;
  /// Parents (n < max_n) without any child.
  std::uint64_t dead_ends = 0;
};

/// Breadth-first canonical augmentation from the single crossing.
EnumerationResult enumerate_all(const EnumerateOptions& options, const LevelSink& sink = {});

/// Continues from a complete level of canonical codes with `n` crossings.
/// Counts for that level are included; earlier levels are not.
EnumerationResult enumerate_from(int n, std::vector<CascadeCode> level, const EnumerateOptions& options,
                                 const LevelSink& sink = {});

/// Class counts of one level without generating anything.
void tally_level(EnumerationResult& result, int n, std::span<const CascadeCode> codes);

}  // namespace tangle
