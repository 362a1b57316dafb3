#include "tangle/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace tangle {

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

// Strand bookkeeping for one level: where each strand below the previous
// level goes, and which of the new strands leave the new crossing.
struct Transition {
  Pattern pattern = Pattern::X;
  std::vector<int> grabbed;       // old positions entering the crossing
  std::vector<int> moved_from;    // per new position: old position, or -1 for a down strand
  int first_down = 0;
};

std::vector<Transition> transitions(const CascadeCode& code) {
  std::vector<Transition> out;
  int w = 4;
  int reference = 0;
  for (const Step& s : code.steps) {
    const int up = up_degree(s.pattern);
    const int down = down_degree(s.pattern);
    const int p = (reference + s.shift) % w;
    Transition t{s.pattern, {}, {}, 0};
    for (int i = 0; i < up; ++i) t.grabbed.push_back((p + i) % w);
    auto push_down = [&] {
      t.first_down = static_cast<int>(t.moved_from.size());
      reference = t.first_down + (s.pattern == Pattern::P ? 1 : 0);
      t.moved_from.insert(t.moved_from.end(), down, -1);
    };
    if (p + up <= w) {
      for (int q = 0; q < p; ++q) t.moved_from.push_back(q);
      push_down();
      for (int q = p + up; q < w; ++q) t.moved_from.push_back(q);
    } else {
      for (int q = p + up - w; q < p; ++q) t.moved_from.push_back(q);
      push_down();
    }
    w = static_cast<int>(t.moved_from.size());
    out.push_back(std::move(t));
  }
  return out;
}

class Svg {
 public:
  Svg(double width, double height, const std::string& title) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
            num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    out_ += "<title>" + title + "</title>\n";
    out_ += "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" stroke-linecap=\"round\">\n";
  }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
    return buf;
  }

  void raw(const std::string& s) { out_ += s; }
  void line(const char* cls, Point a, Point b) {
    out_ += "<line class=\"" + std::string(cls) + "\" x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" +
            num(b.x) + "\" y2=\"" + num(b.y) + "\"/>\n";
  }
  void crossing(int level, char tag, Point c) {
    out_ += "<g class=\"crossing\" data-level=\"" + std::to_string(level) + "\" data-pattern=\"" + tag + "\">";
    out_ += "<circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"6\" fill=\"white\"/>";
    out_ += "<text x=\"" + num(c.x + 9) + "\" y=\"" + num(c.y - 7) +
            "\" font-family=\"monospace\" font-size=\"10\" stroke=\"none\" fill=\"black\">" + tag + "</text></g>\n";
  }
  void open_level(int level, int width) {
    out_ += "<g class=\"level\" data-level=\"" + std::to_string(level) + "\" data-width=\"" + std::to_string(width) +
            "\">\n";
  }
  void close_group() { out_ += "</g>\n"; }
  std::string finish() {
    out_ += "</g>\n</svg>\n";
    return std::move(out_);
  }

 private:
  std::string out_;
};

char glyph(Pattern p) { return pattern_tag(p); }

std::string render_cascade(const CascadeCode& code, const std::vector<int>& widths) {
  constexpr double kMargin = 30, kSpacing = 36, kRow = 80, kGlyph = 30;
  const int max_w = *std::max_element(widths.begin(), widths.end());
  const double width = 2 * kMargin + kSpacing * max_w;
  const double height = 2 * kMargin + kRow * static_cast<double>(widths.size());
  auto x_of = [&](int j, int w) { return width / 2 + (j - (w - 1) / 2.0) * kSpacing; };
  auto top = [&](std::size_t level) { return kMargin + kRow * static_cast<double>(level - 1); };

  Svg svg(width, height, to_string(code));
  const auto steps = transitions(code);
  for (std::size_t level = 1; level <= widths.size(); ++level) {
    const int w = widths[level - 1];
    const double y_top = top(level);
    const double y_glyph = y_top + kGlyph / 2;
    const double y_band = y_top + kGlyph;
    const double y_end = level == widths.size() ? height - kMargin : y_top + kRow;
    if (level == 1) {
      const Point c{width / 2, y_glyph};
      for (int j = 0; j < 4; ++j) svg.line("connector", c, {x_of(j, 4), y_band});
      svg.crossing(1, 'O', c);
    } else {
      const Transition& t = steps[level - 2];
      const int w_prev = widths[level - 2];
      const int down = down_degree(t.pattern);
      double cx = 0;
      for (int j = 0; j < down; ++j) cx += x_of(t.first_down + j, w);
      const Point c{cx / down, y_glyph};
      for (int old : t.grabbed) svg.line("connector", {x_of(old, w_prev), y_top}, c);
      for (int j = 0; j < w; ++j) {
        const Point bottom{x_of(j, w), y_band};
        if (t.moved_from[j] < 0)
          svg.line("connector", c, bottom);
        else
          svg.line("connector", {x_of(t.moved_from[j], w_prev), y_top}, bottom);
      }
      svg.crossing(static_cast<int>(level), glyph(t.pattern), c);
    }
    svg.open_level(static_cast<int>(level), w);
    for (int j = 0; j < w; ++j) svg.line("strand", {x_of(j, w), y_band}, {x_of(j, w), y_end});
    svg.close_group();
  }
  svg.line("boundary", {kMargin / 2, height - kMargin}, {width - kMargin / 2, height - kMargin});
  return svg.finish();
}

std::string render_disk(const CascadeCode& code, const std::vector<int>& widths) {
  constexpr double kGap = 40, kMargin = 20, kInset = 0.3;
  const auto n = static_cast<double>(widths.size());
  const double outer = kGap * n;
  const double size = 2 * (outer + kMargin);
  const Point centre{size / 2, size / 2};
  auto angle = [](int j, int w) { return 2 * std::numbers::pi * (j + 0.5) / w; };
  auto polar = [&](double r, double a) { return Point{centre.x + r * std::cos(a), centre.y - r * std::sin(a)}; };
  auto ring = [&](std::size_t level) { return kGap * static_cast<double>(level - 1); };

  Svg svg(size, size, to_string(code));
  for (std::size_t level = 2; level <= widths.size(); ++level)
    svg.raw("<circle class=\"ring\" cx=\"" + Svg::num(centre.x) + "\" cy=\"" + Svg::num(centre.y) + "\" r=\"" +
            Svg::num(ring(level)) + "\" stroke=\"#bbbbbb\" stroke-dasharray=\"3 3\"/>\n");
  svg.raw("<circle class=\"boundary\" cx=\"" + Svg::num(centre.x) + "\" cy=\"" + Svg::num(centre.y) + "\" r=\"" +
          Svg::num(outer) + "\"/>\n");

  const auto steps = transitions(code);
  for (std::size_t level = 1; level <= widths.size(); ++level) {
    const int w = widths[level - 1];
    const double r = ring(level);
    const double r_out = r + kInset * kGap;
    const double r_next = level == widths.size() ? outer : ring(level + 1) - kInset * kGap;
    if (level == 1) {
      for (int j = 0; j < 4; ++j) svg.line("connector", centre, polar(r_out, angle(j, 4)));
      svg.crossing(1, 'O', centre);
    } else {
      const Transition& t = steps[level - 2];
      const int w_prev = widths[level - 2];
      const int down = down_degree(t.pattern);
      double a = 0;
      for (int j = 0; j < down; ++j) a += angle(t.first_down + j, w);
      const Point c = polar(r, a / down);
      const double r_in = r - kInset * kGap;
      for (int old : t.grabbed) svg.line("connector", polar(r_in, angle(old, w_prev)), c);
      for (int j = 0; j < w; ++j) {
        const Point end = polar(r_out, angle(j, w));
        if (t.moved_from[j] < 0)
          svg.line("connector", c, end);
        else
          svg.line("connector", polar(r_in, angle(t.moved_from[j], w_prev)), end);
      }
      svg.crossing(static_cast<int>(level), glyph(t.pattern), c);
    }
    svg.open_level(static_cast<int>(level), w);
    for (int j = 0; j < w; ++j) svg.line("strand", polar(r_out, angle(j, w)), polar(r_next, angle(j, w)));
    svg.close_group();
  }
  return svg.finish();
}

}  // namespace

RenderStyle parse_style(std::string_view name) {
  if (name == "cascade") return RenderStyle::Cascade;
  if (name == "disk") return RenderStyle::Disk;
  throw std::invalid_argument("unknown style '" + std::string(name) + "'");
}

std::string render_svg(const CascadeCode& code, RenderStyle style) {
  const std::vector<int> widths = validate(code);
  return style == RenderStyle::Cascade ? render_cascade(code, widths) : render_disk(code, widths);
}

}  // namespace tangle
