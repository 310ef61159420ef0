// SPDX-License-Identifier: Apache-2.0
#include "mysticum/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <variant>

#include "mysticum/ranges.hpp"

namespace mysticum {

namespace {

constexpr const char* kEven = "#2a8c3c";
constexpr const char* kOdd = "#2456c4";
constexpr const char* kFixed = "#555555";
constexpr const char* kCarrier = "#000000";

const char* height_colour(int h) { return h % 2 == 0 ? kEven : kOdd; }

struct Item {
  std::variant<Point, Line> element;
  std::string label;
  const char* colour;
};

struct Vec2 {
  double x;
  double y;
};

std::optional<Vec2> affine(const Point& p) {
  if (p[2] == 0) return std::nullopt;
  const double z = p[2].convert_to<double>();
  return Vec2{p[0].convert_to<double>() / z, p[1].convert_to<double>() / z};
}

struct LineEq {
  double a;
  double b;
  double c;
  // Returns false for the line at infinity.
  bool normalise() {
    const double n = std::hypot(a, b);
    if (n == 0) return false;
    a /= n;
    b /= n;
    c /= n;
    return true;
  }
};

LineEq equation(const Line& l) {
  return {l[0].convert_to<double>(), l[1].convert_to<double>(),
          l[2].convert_to<double>()};
}

struct Box {
  double x0, y0, x1, y1;

  void include(Vec2 p) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  Vec2 centre() const { return {(x0 + x1) / 2, (y0 + y1) / 2}; }
  double diagonal() const { return std::hypot(x1 - x0, y1 - y0); }
  bool contains(Vec2 p) const {
    return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
  }
};

// Liang-Barsky against the box, for a normalised line.
std::optional<std::pair<Vec2, Vec2>> clip(const LineEq& l, const Box& box) {
  const Vec2 foot{-l.a * l.c, -l.b * l.c};
  const Vec2 dir{-l.b, l.a};
  double lo = -1e300;
  double hi = 1e300;
  auto slab = [&](double origin, double d, double min, double max) {
    if (std::abs(d) < 1e-300) return origin >= min && origin <= max;
    double t0 = (min - origin) / d;
    double t1 = (max - origin) / d;
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
    return lo <= hi;
  };
  if (!slab(foot.x, dir.x, box.x0, box.x1)) return std::nullopt;
  if (!slab(foot.y, dir.y, box.y0, box.y1)) return std::nullopt;
  return std::pair{Vec2{foot.x + lo * dir.x, foot.y + lo * dir.y},
                   Vec2{foot.x + hi * dir.x, foot.y + hi * dir.y}};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // Avoid "-0.00".
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(' ');
  const auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

template <typename Map>
void add_all(std::vector<Item>& items, const Map& map, const char* colour,
             const std::string& suffix = "") {
  for (const auto& [label, elem] : map) {
    items.push_back({elem, to_string(label) + suffix, colour});
  }
}

void add_layer_family(std::vector<Item>& items, const Multimysticum& m,
                      bool pascal, const std::string& height_text) {
  std::vector<int> heights;
  if (height_text.empty()) {
    heights = {0};
  } else if (height_text == "*") {
    for (int h = 0; h <= m.height(); ++h) heights.push_back(h);
  } else {
    heights = {std::stoi(height_text)};
  }
  for (int h : heights) {
    const Layer& layer = m.layer(h);
    const std::string suffix = "^(" + std::to_string(h) + ")";
    if (pascal) {
      add_all(items, layer.pascals, height_colour(h), suffix);
    } else {
      add_all(items, layer.kirkmans, height_colour(h), suffix);
    }
  }
}

void add_range(std::vector<Item>& items, const Multimysticum& m,
               const std::string& spec_text) {
  const RangeSpec spec = parse_range_spec(spec_text);
  const ExtractedRange r = extract_range(m, spec, m.height());
  if (const auto* l = std::get_if<Line>(&r.carrier)) {
    items.push_back({*l, carrier_name(spec), kCarrier});
  } else {
    items.push_back({std::get<Point>(r.carrier), carrier_name(spec), kCarrier});
  }
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    // The first two elements belong to the fixed part, then heights 0.. .
    const char* colour = i < 2 ? kFixed : height_colour(static_cast<int>(i) - 2);
    if (spec.is_point_range()) {
      items.push_back({r.points[i], r.names[i], colour});
    } else {
      items.push_back({r.lines[i], r.names[i], colour});
    }
  }
}

std::vector<Item> select(const Multimysticum& m, const std::string& selection) {
  std::vector<Item> items;
  const BaseMysticum& b = m.base();
  std::stringstream in(selection);
  std::string token;
  while (std::getline(in, token, ',')) {
    token = trim(token);
    if (token.empty()) continue;
    if (token.rfind("range:", 0) == 0) {
      add_range(items, m, trim(token.substr(6)));
      continue;
    }
    const auto at = token.find('@');
    const std::string family = token.substr(0, at);
    const std::string height =
        at == std::string::npos ? std::string() : token.substr(at + 1);
    try {
      if (family == "pascal" || family == "kirkman") {
        add_layer_family(items, m, family == "pascal", height);
        continue;
      }
      if (family == "linking" || family == "meeting") {
        if (height.empty()) throw std::invalid_argument("needs @height");
        const InterLayer& il = m.interlayer(std::stoi(height));
        if (il.is_linking() != (family == "linking")) {
          throw ParityMismatch(family + " elements live at " +
                               (family == "linking" ? "even" : "odd") +
                               " heights");
        }
        const char* colour = height_colour(il.lower_height);
        if (il.is_linking()) {
          for (const auto& [l, e] : il.linking) {
            items.push_back({e, to_string(InterLabel{l, il.lower_height}), colour});
          }
        } else {
          for (const auto& [l, e] : il.meeting) {
            items.push_back({e, to_string(InterLabel{l, il.lower_height}), colour});
          }
        }
        continue;
      }
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const ParityMismatch*>(&e) ||
          dynamic_cast<const HeightNotBuilt*>(&e)) {
        throw;
      }
      throw std::invalid_argument("bad height in '" + token + "'");
    }
    if (!height.empty()) {
      throw std::invalid_argument("'" + family + "' takes no height");
    }
    if (family == "steiner") add_all(items, b.steiner, kFixed);
    else if (family == "cayley") add_all(items, b.cayley, kFixed);
    else if (family == "plucker") add_all(items, b.plucker, kFixed);
    else if (family == "salmon") add_all(items, b.salmon, kFixed);
    else if (family == "ordinary") add_all(items, b.ordinary, kFixed);
    else if (family == "ladd") add_all(items, m.ladd_lines(), kFixed);
    else if (family == "veronese") add_all(items, m.veronese_nodes(), kFixed);
    else throw std::invalid_argument("unknown selection '" + token + "'");
  }
  if (items.empty()) throw std::invalid_argument("selection is empty");
  return items;
}

}  // namespace

std::string render_svg(const Multimysticum& m, const RenderOptions& options) {
  if (options.width <= 0 || options.height <= 0) {
    throw std::invalid_argument("SVG size must be positive");
  }
  const std::vector<Item> items = select(m, options.labels);
  const BaseMysticum& b = m.base();

  // Base box: the sextuple and the ordinary points.
  std::optional<Box> base_box;
  auto grow = [](std::optional<Box>& box, Vec2 p) {
    if (!box) box = Box{p.x, p.y, p.x, p.y};
    else box->include(p);
  };
  for (const auto& p : b.sextuple.points()) {
    if (auto a = affine(p)) grow(base_box, *a);
  }
  for (const auto& [l, p] : b.ordinary) {
    if (auto a = affine(p)) grow(base_box, *a);
  }
  const double reach = 50 * std::max(base_box->diagonal(), 1.0);
  const Vec2 centre = base_box->centre();
  auto within_reach = [&](Vec2 p) {
    return std::hypot(p.x - centre.x, p.y - centre.y) <= reach;
  };

  Box box = *base_box;
  for (const auto& item : items) {
    if (const auto* p = std::get_if<Point>(&item.element)) {
      if (auto a = affine(*p); a && within_reach(*a)) box.include(*a);
    }
  }
  for (const auto& item : items) {
    if (const auto* l = std::get_if<Line>(&item.element)) {
      LineEq eq = equation(*l);
      if (!eq.normalise()) continue;
      const double d = eq.a * centre.x + eq.b * centre.y + eq.c;
      const Vec2 foot{centre.x - d * eq.a, centre.y - d * eq.b};
      if (!box.contains(foot) && within_reach(foot)) box.include(foot);
    }
  }
  // Margin and aspect ratio.
  {
    const double pad = 0.05 * std::max(box.diagonal(), 1.0);
    box = {box.x0 - pad, box.y0 - pad, box.x1 + pad, box.y1 + pad};
    const double want = static_cast<double>(options.width) / options.height;
    const double w = box.x1 - box.x0;
    const double h = box.y1 - box.y0;
    if (w / h < want) {
      const double extra = (h * want - w) / 2;
      box.x0 -= extra;
      box.x1 += extra;
    } else {
      const double extra = (w / want - h) / 2;
      box.y0 -= extra;
      box.y1 += extra;
    }
  }
  const double scale = options.width / (box.x1 - box.x0);
  auto sx = [&](double x) { return num((x - box.x0) * scale); };
  auto sy = [&](double y) { return num((box.y1 - y) * scale); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << options.width << "\" height=\"" << options.height << "\" viewBox=\"0 0 "
      << options.width << ' ' << options.height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  // Conic x = y^2, sampled over the visible y range.
  svg << "<polyline class=\"conic\" fill=\"none\" stroke=\"#000000\" "
         "stroke-width=\"1.5\" points=\"";
  constexpr int kSamples = 400;
  for (int i = 0; i <= kSamples; ++i) {
    const double y = box.y0 + (box.y1 - box.y0) * i / kSamples;
    svg << (i ? " " : "") << sx(y * y) << ',' << sy(y);
  }
  svg << "\"/>\n";

  svg << "<g class=\"lines\" stroke-width=\"0.8\">\n";
  for (const auto& item : items) {
    const auto* l = std::get_if<Line>(&item.element);
    if (!l) continue;
    LineEq eq = equation(*l);
    if (!eq.normalise()) continue;
    const auto seg = clip(eq, box);
    if (!seg) continue;
    svg << "<line x1=\"" << sx(seg->first.x) << "\" y1=\"" << sy(seg->first.y)
        << "\" x2=\"" << sx(seg->second.x) << "\" y2=\"" << sy(seg->second.y)
        << "\" stroke=\"" << item.colour << "\"><title>" << escape(item.label)
        << "</title></line>\n";
  }
  svg << "</g>\n<g class=\"points\" font-family=\"sans-serif\" font-size=\"9\">\n";
  for (const auto& item : items) {
    const auto* p = std::get_if<Point>(&item.element);
    if (!p) continue;
    const auto a = affine(*p);
    if (!a || !box.contains(*a)) continue;
    svg << "<circle cx=\"" << sx(a->x) << "\" cy=\"" << sy(a->y)
        << "\" r=\"2.5\" fill=\"" << item.colour << "\"><title>"
        << escape(item.label) << "</title></circle>\n"
        << "<text x=\"" << sx(a->x) << "\" y=\"" << sy(a->y) << "\" dx=\"4\" dy=\"-4\" fill=\""
        << item.colour << "\">" << escape(item.label) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace mysticum
