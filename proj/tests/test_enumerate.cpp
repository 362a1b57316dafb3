#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"
#include "tangle/canonical.hpp"
#include "tangle/enumerate.hpp"

using namespace tangle;
using namespace testing;

namespace {

std::map<int, std::vector<CascadeCode>> levels_up_to(int n_max) {
  std::map<int, std::vector<CascadeCode>> levels;
  enumerate_all({n_max, 1, false}, [&](int n, const std::vector<CascadeCode>& level) { levels[n] = level; });
  return levels;
}

}  // namespace

TEST_CASE("class names") {
  for (auto c : {ProjectionClass::Projections, ProjectionClass::Alternating, ProjectionClass::Reduced,
                 ProjectionClass::WeakFiltered})
    CHECK(parse_class(class_name(c)) == c);
  CHECK_THROWS_AS(parse_class("knots"), std::invalid_argument);
}

TEST_CASE("extension sites") {
  const PlanarMap one = single_crossing();
  CHECK(extension_sites(one, 0, symmetries(one)).size() == 3);

  const PlanarMap x = expand(parse_code("2;X 0"));
  const auto x_sites = extension_sites(x, 0, symmetries(x));
  CHECK(x_sites.size() < 12);

  // Orbit count by brute force over the boundary symmetries.
  auto orbit_count = [](const PlanarMap& m) {
    const auto sym = symmetries(m);
    const int w = m.leg_count();
    std::set<std::set<std::pair<int, int>>> orbits;
    for (Pattern p : kPatterns)
      for (int pos = 0; pos < w; ++pos) {
        std::set<std::pair<int, int>> orbit;
        const int up = up_degree(p);
        for (const auto& g : sym) {
          std::set<int> image;
          for (int i = 0; i < up; ++i) image.insert(g.apply(pos + i));
          for (int q = 0; q < w; ++q)
            if (image.count(q) && !image.count((q + w - 1) % w)) orbit.insert({static_cast<int>(p), q});
        }
        orbits.insert(orbit);
      }
    return orbits.size();
  };

  bool saw_asymmetric = false;
  for (const auto& [n, level] : levels_up_to(5))
    for (const CascadeCode& c : level) {
      const Expansion e = expand_with_reference(c);
      const auto sym = symmetries(e.map);
      const auto sites = extension_sites(e.map, e.reference, sym);
      CHECK(sites.size() == orbit_count(e.map));
      if (sym.size() == 1) {
        saw_asymmetric = true;
        CHECK(sites.size() == static_cast<std::size_t>(3 * e.map.leg_count()));
      }
    }
  CHECK(saw_asymmetric);
}

TEST_CASE("children") {
  const auto first = children(CascadeCode{});
  REQUIRE(first.size() == 2);
  CHECK(std::set<CascadeCode>(first.begin(), first.end()) ==
        std::set<CascadeCode>{parse_code("2;X 0"), parse_code("2;P 0")});

  std::size_t third = 0;
  for (const CascadeCode& p : first) third += children(p).size();
  CHECK(third == 6);

  const auto levels = levels_up_to(3);
  std::map<int, int> by_k;
  for (const CascadeCode& p : levels.at(3))
    for (const CascadeCode& c : children(p)) {
      CHECK(parent(c) == p);
      CHECK(is_canonical(c));
      ++by_k[expand(c).half_legs()];
    }
  CHECK(by_k == std::map<int, int>{{2, 6}, {3, 8}, {4, 8}, {5, 5}});

  CHECK_THROWS_AS(children(parse_code("2;Q 0")), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
  const EnumerationResult r = enumerate_all({5, 1, true});
  const std::vector<std::uint64_t> proj{1, 2, 6, 27, 136}, reduced{1, 1, 3, 8, 31};
  for (int n = 1; n <= 5; ++n) {
    CHECK(r.projections.total(n) == proj[n - 1]);
    CHECK(r.reduced.total(n) == reduced[n - 1]);
  }
  CHECK(r.projections.at(4, 2) == 6);
  CHECK(r.projections.at(4, 5) == 5);
  CHECK(r.duplicates == 0);
  CHECK(r.verify_failures == 0);
  CHECK(r.dead_ends == 0);
}

TEST_CASE("worker count does not change the output") {
  std::vector<CascadeCode> single, multi;
  enumerate_all({6, 1, false}, [&](int n, const auto& level) {
    if (n == 6) single = level;
  });
  enumerate_all({6, 3, false}, [&](int n, const auto& level) {
    if (n == 6) multi = level;
  });
  CHECK(single.size() == 871);
  CHECK(single == multi);
}

TEST_CASE("resuming from a level gives the same counts") {
  std::vector<CascadeCode> four;
  const EnumerationResult full = enumerate_all({6, 1, false}, [&](int n, const auto& level) {
    if (n == 4) four = level;
  });
  const EnumerationResult resumed = enumerate_from(4, four, {6, 1, false});
  for (int n = 4; n <= 6; ++n) {
    CHECK(resumed.projections.total(n) == full.projections.total(n));
    CHECK(resumed.reduced.total(n) == full.reduced.total(n));
  }
  CHECK(resumed.projections.total(3) == 0);
}

TEST_CASE("weak filter") {
  CHECK(weak_filter(single_crossing()));
  CHECK_FALSE(weak_filter(expand(parse_code("2;X 0"))));
  CHECK_FALSE(weak_filter(expand(parse_code("2;P 0"))));
  for (const auto& [n, level] : levels_up_to(5))
    for (const CascadeCode& c : level)
      if (!c.steps.empty() && c.steps.back().pattern == Pattern::P) CHECK_FALSE(weak_filter(expand(c)));
}
