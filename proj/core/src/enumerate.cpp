#include "tangle/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "tangle/canonical.hpp"

namespace tangle {

std::string_view class_name(ProjectionClass c) {
  switch (c) {
    case ProjectionClass::Projections: return "proj";
    case ProjectionClass::Alternating: return "alt";
    case ProjectionClass::Reduced: return "reduced";
    case ProjectionClass::WeakFiltered: return "weakfilter";
  }
  return "?";
}

ProjectionClass parse_class(std::string_view name) {
  for (auto c : {ProjectionClass::Projections, ProjectionClass::Alternating, ProjectionClass::Reduced,
                 ProjectionClass::WeakFiltered})
    if (class_name(c) == name) return c;
  throw std::invalid_argument("unknown class '" + std::string(name) + "'");
}

std::uint64_t CountsTable::at(int n, int k) const {
  auto it = cells.find({n, k});
  return it == cells.end() ? 0 : it->second;
}

std::uint64_t CountsTable::total(int n) const {
  std::uint64_t t = 0;
  for (auto it = cells.lower_bound({n, 0}); it != cells.end() && it->first.first == n; ++it) t += it->second;
  return t;
}

int CountsTable::max_n() const { return cells.empty() ? 0 : cells.rbegin()->first.first; }

namespace {

int interval_start(const DihedralElement& g, int position, int up) {
  return g.reflect ? g.apply(position + up - 1) : g.apply(position);
}

int shift_of(int position, int reference, int legs) { return ((position - reference) % legs + legs) % legs; }

struct Generated {
  CascadeCode code;
  int k = 0;
  bool reduced = false;
  bool weak = false;
};

struct BatchStats {
  std::uint64_t duplicates = 0;
  std::uint64_t verify_failures = 0;
  std::uint64_t dead_ends = 0;
};

void generate(const CascadeCode& parent_code, bool verify, std::vector<Generated>& out, BatchStats& stats) {
  const Expansion e = expand_with_reference(parent_code);
  const InvariantCode inv = invariant_root_code(e.map);
  const auto sym = symmetries(e.map, inv);
  const VertexId fresh = e.map.crossings();
  const int w = e.map.leg_count();
  const std::size_t first = out.size();

  for (const ExtensionSite& site : extension_sites(e.map, e.reference, sym)) {
    const Expansion child = attach(e.map, site.pattern, site.position);
    const FaceStructure fs = face_structure(child.map);
    const auto r = detail::r_set(child.map, fs);
    auto at_fresh = [&](const Root& root) { return root.vertex() == fresh; };
    if (std::none_of(r.begin(), r.end(), at_fresh)) continue;
    if (is_composite(child.map, fs)) continue;
    const InvariantCode child_inv = invariant_root_code(child.map, std::span<const Root>(r));
    if (std::none_of(child_inv.canonical_roots.begin(), child_inv.canonical_roots.end(), at_fresh)) continue;

    const int up = up_degree(site.pattern);
    int shift = w;
    for (const DihedralElement& g : sym)
      shift = std::min(shift, shift_of(interval_start(g, site.position, up), e.reference, w));

    CascadeCode code = parent_code;
    code.steps.push_back({site.pattern, shift});
    const bool repeat = std::any_of(out.begin() + first, out.end(), [&](const Generated& g) { return g.code == code; });
    if (repeat) {
      ++stats.duplicates;
      continue;
    }
    if (verify && canonical_code(child.map) != code) {
      ++stats.verify_failures;
      continue;
    }
    out.push_back({std::move(code), child.map.half_legs(), is_reduced(child.map), weak_filter(child.map)});
  }
  if (out.size() == first) ++stats.dead_ends;
}

void tally(EnumerationResult& result, int n, int k, bool reduced, bool weak) {
  result.projections.add(n, k);
  if (reduced) result.reduced.add(n, k);
  if (weak) result.weak.add(n, k);
}

std::vector<Generated> next_level(const std::vector<CascadeCode>& level, const EnumerateOptions& options,
                                  BatchStats& stats) {
  constexpr std::size_t kChunk = 64;
  const std::size_t chunks = (level.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<Generated>> results(chunks);
  std::vector<BatchStats> chunk_stats(chunks);
  std::atomic<std::size_t> cursor{0};

  auto worker = [&] {
    for (std::size_t c = cursor++; c < chunks; c = cursor++) {
      const std::size_t end = std::min(level.size(), (c + 1) * kChunk);
      for (std::size_t i = c * kChunk; i < end; ++i) generate(level[i], options.verify, results[c], chunk_stats[c]);
    }
  };
  const int threads = static_cast<int>(std::min<std::size_t>(std::max(1, options.workers), std::max<std::size_t>(chunks, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<Generated> merged;
  std::size_t total = 0;
  for (const auto& r : results) total += r.size();
  merged.reserve(total);
  for (std::size_t c = 0; c < chunks; ++c) {
    std::move(results[c].begin(), results[c].end(), std::back_inserter(merged));
    stats.duplicates += chunk_stats[c].duplicates;
    stats.verify_failures += chunk_stats[c].verify_failures;
    stats.dead_ends += chunk_stats[c].dead_ends;
  }
  return merged;
}

void run(int n, std::vector<CascadeCode> level, const EnumerateOptions& options, const LevelSink& sink,
         EnumerationResult& result) {
  for (; n < options.max_n; ++n) {
    BatchStats stats;
    std::vector<Generated> generated = next_level(level, options, stats);
    result.duplicates += stats.duplicates;
    result.verify_failures += stats.verify_failures;
    result.dead_ends += stats.dead_ends;

    level.clear();
    level.shrink_to_fit();
    level.reserve(generated.size());
    for (Generated& g : generated) {
      tally(result, n + 1, g.k, g.reduced, g.weak);
      level.push_back(std::move(g.code));
    }
    generated.clear();
    generated.shrink_to_fit();
    if (sink) sink(n + 1, level);
  }
}

}  // namespace

std::vector<ExtensionSite> extension_sites(const PlanarMap& map, int reference,
                                           std::span<const DihedralElement> symmetries) {
  const int w = map.leg_count();
  std::vector<ExtensionSite> sites;
  for (Pattern pattern : kPatterns) {
    const int up = up_degree(pattern);
    if (up > w) continue;
    for (int p = 0; p < w; ++p) {
      const int own = shift_of(p, reference, w);
      const bool least = std::all_of(symmetries.begin(), symmetries.end(), [&](const DihedralElement& g) {
        return shift_of(interval_start(g, p, up), reference, w) >= own;
      });
      if (least) sites.push_back({pattern, p});
    }
  }
  return sites;
}

std::vector<CascadeCode> children(const CascadeCode& parent_code) {
  if (!is_canonical(parent_code)) throw std::invalid_argument("parent code " + to_string(parent_code) + " is not canonical");
  std::vector<Generated> out;
  BatchStats stats;
  generate(parent_code, true, out, stats);
  std::vector<CascadeCode> codes;
  for (Generated& g : out) codes.push_back(std::move(g.code));
  return codes;
}

bool weak_filter(const PlanarMap& map) {
  if (map.crossings() == 1) return true;
  for (int v = 0; v < map.crossings(); ++v)
    if (map.legs_at(v) >= 2) return false;
  return true;
}

void tally_level(EnumerationResult& result, int n, std::span<const CascadeCode> codes) {
  for (const CascadeCode& c : codes) {
    const PlanarMap m = expand(c);
    tally(result, n, m.half_legs(), is_reduced(m), weak_filter(m));
  }
}

EnumerationResult enumerate_from(int n, std::vector<CascadeCode> level, const EnumerateOptions& options,
                                 const LevelSink& sink) {
  EnumerationResult result;
  tally_level(result, n, level);
  run(n, std::move(level), options, sink, result);
  return result;
}

EnumerationResult enumerate_all(const EnumerateOptions& options, const LevelSink& sink) {
  if (options.max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  EnumerationResult result;
  std::vector<CascadeCode> level{CascadeCode{}};
  tally_level(result, 1, level);
  if (sink) sink(1, level);
  run(1, std::move(level), options, sink, result);
  return result;
}

}  // namespace tangle
