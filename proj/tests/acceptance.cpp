// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any
// failure.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "tangle/canonical.hpp"
#include "tangle/catalog.hpp"
#include "tangle/enumerate.hpp"
#include "tangle/flype.hpp"

using namespace tangle;
using namespace testing;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << name << " (" << detail << ")" << std::endl;
  if (!ok) ++failures;
}

std::string totals(const CountsTable& t, int n_max) {
  std::string s;
  for (int n = 1; n <= n_max; ++n) s += (n > 1 ? " " : "") + std::to_string(t.total(n));
  return s;
}

std::string diff_detail(const std::vector<CellDiff>& diffs) {
  if (diffs.empty()) return "";
  return "; first mismatch " + to_string(diffs.front()) + ", " + std::to_string(diffs.size()) + " cells differ";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  int workers = 1;
  if (argc > 1) workers = std::max(1, std::atoi(argv[1]));

  // One enumeration to n = 9 feeds criteria 1, 2, 3, 6 and 7.
  auto t0 = std::chrono::steady_clock::now();
  std::map<int, std::vector<CascadeCode>> kept;
  CountsTable alternating{ProjectionClass::Alternating, {}};
  std::uint64_t flype_moves = 0, flype_violations = 0;
  std::size_t level_duplicates = 0;
  const EnumerationResult run = enumerate_all({9, workers, false}, [&](int n, const std::vector<CascadeCode>& level) {
    if (n <= 8) {
      std::set<CascadeCode> unique(level.begin(), level.end());
      level_duplicates += level.size() - unique.size();
      const FlypeOrbits orbits = flype_orbits(n, level);
      for (const auto& [cell, count] : orbits.counts.cells) alternating.add(cell.first, cell.second, count);
      flype_moves += orbits.moves;
      flype_violations += orbits.violations;
    }
    if (n <= 7) kept[n] = level;
  });
  const double enum_time = seconds_since(t0);

  {
    const auto diffs = compare_counts(reference_table(ProjectionClass::Projections), run.projections, 9);
    report(1, "projection counts n <= 9", diffs.empty(),
           "totals " + totals(run.projections, 9) + diff_detail(diffs) + ", " + secs(enum_time));
  }
  {
    const auto diffs = compare_counts(reference_table(ProjectionClass::Alternating), alternating, 8);
    report(2, "alternating counts n <= 8", diffs.empty(), "totals " + totals(alternating, 8) + diff_detail(diffs));
  }
  {
    const auto diffs = compare_counts(reference_table(ProjectionClass::Reduced), run.reduced, 9);
    report(3, "reduced counts n <= 9", diffs.empty(), "totals " + totals(run.reduced, 9) + diff_detail(diffs));
  }

  // Criterion 4: every valid code, bucketed by invariant root code, with the
  // buckets cross-checked by a direct isomorphism search.
  {
    t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::size_t codes = 0;
    std::ostringstream detail;
    for (int n = 1; n <= 5; ++n) {
      std::map<std::pair<int, RootCode>, PlanarMap> buckets;
      for (const CascadeCode& c : all_valid_codes(n)) {
        ++codes;
        PlanarMap m = expand(c);
        if (brute_composite(m)) continue;
        auto [it, fresh] = buckets.emplace(std::make_pair(m.half_legs(), invariant_root_code(m).code), m);
        if (!fresh && !oracle_equivalent(it->second, m)) ok = false;
      }
      CountsTable oracle{ProjectionClass::Projections, {}};
      std::map<int, std::vector<const PlanarMap*>> by_k;
      for (const auto& [key, m] : buckets) {
        oracle.add(n, key.first);
        by_k[key.first].push_back(&m);
      }
      for (const auto& [k, reps] : by_k)
        for (std::size_t i = 0; i < reps.size(); ++i)
          for (std::size_t j = i + 1; j < reps.size(); ++j)
            if (oracle_equivalent(*reps[i], *reps[j])) ok = false;
      for (int k = 2; k <= n + 1; ++k)
        if (oracle.at(n, k) != run.projections.at(n, k)) ok = false;
      detail << (n > 1 ? " " : "") << oracle.total(n);
    }
    report(4, "exhaustive oracle n <= 5", ok,
           "buckets " + detail.str() + " from " + std::to_string(codes) + " codes, " + secs(seconds_since(t0)));
  }

  // Criterion 5: invariance under all dihedral motions (and crossing
  // relabelings) for n <= 5, and 1000 samples at n = 8.
  {
    t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20240611);
    bool ok = true;
    std::size_t checked = 0;
    auto check = [&](const PlanarMap& m, const DihedralElement& g, const InvariantCode& inv, const CascadeCode& canon) {
      const PlanarMap moved = random_relabel(transform(m, g), rng);
      const InvariantCode other = invariant_root_code(moved);
      if (other.code != inv.code || other.full != inv.full || canonical_code(moved) != canon) ok = false;
      ++checked;
    };
    for (int n = 1; n <= 5; ++n)
      for (const CascadeCode& c : all_valid_codes(n)) {
        const PlanarMap m = expand(c);
        if (brute_composite(m)) continue;
        const InvariantCode inv = invariant_root_code(m);
        const CascadeCode canon = canonical_code(m);
        for (const DihedralElement& g : dihedral_group(m.leg_count())) check(m, g, inv, canon);
      }
    std::vector<CascadeCode> eight;
    enumerate_from(7, kept.at(7), {8, workers, false}, [&](int n, const std::vector<CascadeCode>& level) {
      if (n == 8) eight = level;
    });
    std::uniform_int_distribution<std::size_t> pick(0, eight.size() - 1);
    for (int i = 0; i < 1000; ++i) {
      const CascadeCode& c = eight[pick(rng)];
      const PlanarMap m = expand(c);
      const auto group = dihedral_group(m.leg_count());
      std::uniform_int_distribution<std::size_t> element(0, group.size() - 1);
      check(m, group[element(rng)], invariant_root_code(m), c);
    }
    report(5, "dihedral invariance", ok,
           std::to_string(checked) + " transformed maps, " + secs(seconds_since(t0)));
  }

  // Criterion 6: nesting.
  {
    t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::size_t codes = 0;
    for (const auto& [n, level] : kept)
      for (const CascadeCode& c : level) {
        ++codes;
        CascadeCode prefix = c;
        while (true) {
          if (canonical_code(expand(prefix)) != prefix) ok = false;
          if (prefix.steps.empty()) break;
          prefix.steps.pop_back();
        }
      }
    report(6, "every prefix is canonical, n <= 7", ok,
           std::to_string(codes) + " codes, " + secs(seconds_since(t0)));
  }

  // Criterion 7: structural invariants.
  {
    const bool ok = level_duplicates == 0 && run.duplicates == 0 && run.dead_ends == 0 && flype_violations == 0;
    std::size_t childless = 0;
    for (const auto& [n, level] : kept)
      if (n < 7)
        for (const CascadeCode& c : level) childless += children(c).empty();
    report(7, "no duplicates, no dead ends, flypes preserve (n, k) and primality", ok && childless == 0,
           "duplicates " + std::to_string(level_duplicates + run.duplicates) + ", dead ends " +
               std::to_string(run.dead_ends + childless) + ", flype moves " + std::to_string(flype_moves) +
               ", violations " + std::to_string(flype_violations));
  }

  // Criterion 8: weak filter postcondition.
  {
    bool ok = true;
    std::size_t maps = 0, accepted = 0;
    for (int n = 1; n <= 5; ++n)
      for (const CascadeCode& c : all_valid_codes(n)) {
        const PlanarMap m = expand(c);
        if (brute_composite(m)) continue;
        ++maps;
        bool expected = true;
        for (int v = 0; v < n && n > 1; ++v) {
          int legs = 0;
          for (int j = 0; j < 4; ++j) legs += m.twin(4 * v + j) < 0;
          if (legs >= 2) expected = false;
        }
        const bool got = weak_filter(m);
        accepted += got;
        if (got != expected) ok = false;
      }
    report(8, "weak filter postcondition n <= 5", ok,
           std::to_string(accepted) + " of " + std::to_string(maps) + " prime maps accepted");
  }

  std::cout << (failures ? "FAILED " : "ALL PASSED ") << 8 - failures << "/8" << std::endl;
  return failures ? 1 : 0;
}
