#include "tangle/cascade.hpp"

#include <charconv>

namespace tangle {

std::vector<int> validate(const CascadeCode& code) {
  std::vector<int> widths{4};
  widths.reserve(code.steps.size() + 1);
  for (std::size_t i = 0; i < code.steps.size(); ++i) {
    const Step& s = code.steps[i];
    const int level = static_cast<int>(i) + 2;
    const int w = widths.back();
    if (i == 0 && s.shift != 0)
      throw CodeError(CodeError::Kind::NonzeroFirstShift, level, "first shift must be 0");
    if (s.shift < 0 || s.shift >= w)
      throw CodeError(CodeError::Kind::ShiftOutOfRange, level,
                      "shift " + std::to_string(s.shift) + " out of range at level " + std::to_string(level) +
                          " (width " + std::to_string(w) + ")");
    const int next = w + width_delta(s.pattern);
    if (w < up_degree(s.pattern) || next < 2)
      throw CodeError(CodeError::Kind::WidthUnderflow, level,
                      "width underflow at level " + std::to_string(level));
    widths.push_back(next);
  }
  return widths;
}

std::vector<int> width_profile(const CascadeCode& code) { return validate(code); }

Expansion attach(const PlanarMap& map, Pattern pattern, int position) {
  const int w = map.leg_count();
  const int up = up_degree(pattern);
  const int down = down_degree(pattern);
  const int v = map.crossings();
  position %= w;

  std::vector<DartId> twin(map.twins().begin(), map.twins().end());
  twin.resize(twin.size() + 4);

  // Counterclockwise around the new crossing: up-edges from right to left,
  // then down-edges from left to right.
  for (int i = 0; i < up; ++i) {
    const DartId leg = map.leg_dart((position + up - 1 - i) % w);
    twin[4 * v + i] = leg;
    twin[leg] = 4 * v + i;
  }

  std::vector<DartId> legs;
  legs.reserve(w - up + down);
  int reference = 0;
  auto push_down = [&] {
    reference = static_cast<int>(legs.size()) + (pattern == Pattern::P ? 1 : 0);
    for (int j = 0; j < down; ++j) legs.push_back(4 * v + up + j);
  };
  if (position + up <= w) {
    for (int p = 0; p < position; ++p) legs.push_back(map.leg_dart(p));
    push_down();
    for (int p = position + up; p < w; ++p) legs.push_back(map.leg_dart(p));
  } else {
    for (int p = position + up - w; p < position; ++p) legs.push_back(map.leg_dart(p));
    push_down();
  }
  for (int p = 0; p < static_cast<int>(legs.size()); ++p) twin[legs[p]] = PlanarMap::leg_marker(p);
  return {PlanarMap(std::move(twin), std::move(legs)), reference};
}

Expansion expand_with_reference(const CascadeCode& code) {
  validate(code);
  Expansion e{single_crossing(), 0};
  for (const Step& s : code.steps) e = attach(e.map, s.pattern, e.reference + s.shift);
  return e;
}

PlanarMap expand(const CascadeCode& code) { return expand_with_reference(code).map; }

std::string to_string(const CascadeCode& code) {
  std::string out = std::to_string(code.crossings()) + ";";
  for (std::size_t i = 0; i < code.steps.size(); ++i) {
    if (i) out += ';';
    out += pattern_tag(code.steps[i].pattern);
    out += ' ';
    out += std::to_string(code.steps[i].shift);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw CodeError(CodeError::Kind::Syntax, 0, "malformed code '" + std::string(whole) + "'");
  return value;
}

}  // namespace

CascadeCode parse_code(std::string_view text) {
  const std::string_view whole = trim(text);
  const auto semi = whole.find(';');
  if (semi == std::string_view::npos)
    throw CodeError(CodeError::Kind::Syntax, 0, "missing ';' in code '" + std::string(whole) + "'");
  const int n = parse_int(whole.substr(0, semi), whole);
  if (n < 1) throw CodeError(CodeError::Kind::Syntax, 0, "crossing count must be positive");

  CascadeCode code;
  std::string_view rest = whole.substr(semi + 1);
  while (!trim(rest).empty()) {
    const auto next = rest.find(';');
    std::string_view item = trim(rest.substr(0, next));
    rest = next == std::string_view::npos ? std::string_view{} : rest.substr(next + 1);
    if (item.size() < 3 || item[1] != ' ')
      throw CodeError(CodeError::Kind::Syntax, 0, "malformed pair '" + std::string(item) + "'");
    Step s;
    switch (item[0]) {
      case 'X': s.pattern = Pattern::X; break;
      case 'P': s.pattern = Pattern::P; break;
      case 'Q': s.pattern = Pattern::Q; break;
      default: throw CodeError(CodeError::Kind::Syntax, 0, "unknown pattern '" + std::string(1, item[0]) + "'");
    }
    s.shift = parse_int(item.substr(2), whole);
    code.steps.push_back(s);
  }
  if (code.crossings() != n)
    throw CodeError(CodeError::Kind::Syntax, 0,
                    "code declares " + std::to_string(n) + " crossings but lists " +
                        std::to_string(code.steps.size()) + " pairs");
  return code;
}

}  // namespace tangle
