#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/planar_map.hpp"

namespace tangle {

/// Level patterns of a cascade diagram. Q stands for the three-up, one-down
/// pattern (the Greek Pi glyph). The four-down start pattern is implicit.
enum class Pattern : std::uint8_t { X = 0, P = 1, Q = 2 };

constexpr int up_degree(Pattern p) {
  switch (p) {
    case Pattern::X: return 2;
    case Pattern::P: return 1;
    case Pattern::Q: return 3;
  }
  return 0;
}
constexpr int down_degree(Pattern p) { return 4 - up_degree(p); }
constexpr int width_delta(Pattern p) { return down_degree(p) - up_degree(p); }
constexpr char pattern_tag(Pattern p) { return "XPQ"[static_cast<int>(p)]; }

inline constexpr Pattern kPatterns[] = {Pattern::X, Pattern::P, Pattern::Q};

struct Step {
  Pattern pattern = Pattern::X;
  int shift = 0;
  friend auto operator<=>(const Step&, const Step&) = default;
};

/// Ordered (pattern, shift) pairs for levels 2..n; level 1 is the implicit
/// four-legged start crossing.
struct CascadeCode {
  std::vector<Step> steps;

  int crossings() const { return static_cast<int>(steps.size()) + 1; }
  friend auto operator<=>(const CascadeCode&, const CascadeCode&) = default;
};

class CodeError : public std::invalid_argument {
 public:
  enum class Kind { ShiftOutOfRange, WidthUnderflow, NonzeroFirstShift, Syntax };
  CodeError(Kind kind, int level, const std::string& what)
      : std::invalid_argument(what), kind_(kind), level_(level) {}
  Kind kind() const { return kind_; }
  /// 1-based crossing level of the offending pair (0 for syntax errors).
  int level() const { return level_; }

 private:
  Kind kind_;
  int level_;
};

/// Widths w_1..w_n of the strand bundle below each level. Throws CodeError.
std::vector<int> validate(const CascadeCode& code);
std::vector<int> width_profile(const CascadeCode& code);

/// A map together with the strand position the next shift is measured from.
struct Expansion {
  PlanarMap map;
  int reference = 0;
};

/// Adds one crossing below legs position..position+up-1 (cyclic).
Expansion attach(const PlanarMap& map, Pattern pattern, int position);

Expansion expand_with_reference(const CascadeCode& code);
PlanarMap expand(const CascadeCode& code);

/// Text form `n;A m;A m...`, e.g. `6;X 0;X 0;P 1;X 5;X 2` or `1;`.
std::string to_string(const CascadeCode& code);
CascadeCode parse_code(std::string_view text);

}  // namespace tangle
