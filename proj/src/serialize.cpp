#include "multistat/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace multistat {

using nlohmann::ordered_json;

std::string canonical_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  VarTable names = p.support();
  auto key = [](const std::string& v) {
    size_t d = v.find_first_of("0123456789");
    bool numeric = d != std::string::npos && v.find_first_not_of("0123456789", d) == std::string::npos;
    return std::make_tuple(v.substr(0, numeric ? d : v.size()), numeric ? std::stoull(v.substr(d)) : 0ull, v);
  };
  std::sort(names.begin(), names.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return p.over(make_table(names)).primitive_part().to_string();
}

std::string rational_json(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::string reduced_system_json(const std::string& model, const ReducedSystem& rs) {
  ordered_json j;
  j["model"] = model;
  j["variables"] = rs.positive_variables;
  j["parameters"] = rs.positive_parameters;
  j["equations"] = ordered_json::array();
  for (const auto& e : rs.equations) j["equations"].push_back(canonical_text(e));
  j["inequalities"] = ordered_json::array();
  for (const auto& e : rs.inequalities) j["inequalities"].push_back(canonical_text(e));
  j["trace"] = ordered_json::array();
  for (const auto& s : rs.trace) {
    ordered_json t;
    t["variable"] = s.variable;
    t["pivot_equation"] = s.pivot_equation.to_string();
    t["numerator"] = s.numerator.to_string();
    t["denominator"] = s.denominator.to_string();
    t["pivot_sign"] = s.pivot_sign;
    j["trace"].push_back(t);
  }
  return j.dump(2) + "\n";
}

namespace {

std::string seconds_text(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << s;
  return out.str();
}

std::string record_text(const FixedPointRecord& r, const std::string& v, int digits) {
  auto it = r.enclosures.find(v);
  return it == r.enclosures.end() ? "" : to_decimal(it->second.midpoint(), digits);
}

}  // namespace

std::string grid_csv(const GridResult& grid) {
  std::ostringstream out;
  for (const auto& p : grid.params) out << p << ",";
  out << "count,status,seconds\n";
  for (const auto& e : grid.entries) {
    for (const auto& q : e.point) out << to_exact_decimal(q) << ",";
    out << e.count << "," << to_string(e.status) << "," << seconds_text(e.seconds) << "\n";
  }
  return out.str();
}

std::string grid_json(const GridResult& grid) {
  ordered_json j;
  j["params"] = grid.params;
  j["entries"] = ordered_json::array();
  for (const auto& e : grid.entries) {
    ordered_json o;
    o["point"] = ordered_json::array();
    for (const auto& q : e.point) o["point"].push_back(rational_json(q));
    o["count"] = e.count;
    o["status"] = to_string(e.status);
    o["seconds"] = e.seconds;
    j["entries"].push_back(o);
  }
  return j.dump(2) + "\n";
}

std::string fixed_points_csv(const std::vector<FixedPointRecord>& records, const std::vector<std::string>& vars,
                             int digits) {
  std::ostringstream out;
  for (const auto& v : vars) out << v << ",";
  out << "positivity,stability,rhp_count\n";
  for (const auto& r : records) {
    for (const auto& v : vars) out << record_text(r, v, digits) << ",";
    out << to_string(r.positivity) << ",";
    if (r.stability) {
      out << to_string(r.stability->classification) << ",";
      if (r.stability->rhp_count) out << *r.stability->rhp_count;
    } else {
      out << ",";
    }
    out << "\n";
  }
  return out.str();
}

std::string fixed_points_json(const std::vector<FixedPointRecord>& records, const std::vector<std::string>& vars,
                              int digits) {
  ordered_json j = ordered_json::array();
  for (const auto& r : records) {
    ordered_json o;
    ordered_json values, boxes;
    for (const auto& v : vars) {
      auto it = r.enclosures.find(v);
      if (it == r.enclosures.end()) continue;
      values[v] = to_decimal(it->second.midpoint(), digits);
      boxes[v] = {rational_json(it->second.lo()), rational_json(it->second.hi())};
    }
    o["values"] = values;
    o["enclosures"] = boxes;
    o["positivity"] = to_string(r.positivity);
    if (r.stability) {
      o["stability"] = to_string(r.stability->classification);
      if (r.stability->rhp_count) o["rhp_count"] = *r.stability->rhp_count;
    }
    j.push_back(o);
  }
  return j.dump(2) + "\n";
}

std::string region_json(const OpenCad& cad, const RegionReport& report) {
  ordered_json j;
  j["base_axis"] = cad.base_axis;
  j["stack_axis"] = cad.stack_axis;
  j["projection"] = ordered_json::array();
  for (const auto& p : cad.projection) j["projection"].push_back(canonical_text(p));
  j["base_roots"] = ordered_json::array();
  for (const auto& r : cad.base_roots) j["base_roots"].push_back(r.to_decimal(8));
  j["quadrant_cells"] = report.quadrant_cells;
  ordered_json tally;
  for (const auto& [c, n] : report.tally) tally[to_string(c)] = n;
  j["tally"] = tally;
  j["cells"] = ordered_json::array();
  for (const auto& c : cad.cells) {
    ordered_json o;
    o["base_index"] = c.base_index;
    o["stack_index"] = c.stack_index;
    o["sample"] = {rational_json(c.base_sample), rational_json(c.stack_sample)};
    o["class"] = to_string(c.classification);
    o["count"] = c.count;
    j["cells"].push_back(o);
  }
  return j.dump(2) + "\n";
}

namespace {

struct Canvas {
  const PlotFrame& f;
  static constexpr double margin = 48;

  double px(double x) const {
    double span = f.x_max - f.x_min;
    return margin + (span > 0 ? (x - f.x_min) / span : 0.5) * (f.width - 2 * margin);
  }
  double py(double y) const {
    double span = f.y_max - f.y_min;
    return f.height - margin - (span > 0 ? (y - f.y_min) / span : 0.5) * (f.height - 2 * margin);
  }
};

std::string num(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << v;
  return out.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

void open_svg(std::ostringstream& out, const PlotFrame& f) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f.width << "\" height=\"" << f.height
      << "\" viewBox=\"0 0 " << f.width << " " << f.height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << f.width << "\" height=\"" << f.height << "\" fill=\"white\"/>\n";
}

void axes(std::ostringstream& out, const PlotFrame& f) {
  Canvas c{f};
  double x0 = c.px(f.x_min), x1 = c.px(f.x_max), y0 = c.py(f.y_min), y1 = c.py(f.y_max);
  out << "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n"
      << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(y0) << "\"/>\n"
      << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x0) << "\" y2=\"" << num(y1) << "\"/>\n"
      << "</g>\n";
  out << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(f.height - 12.0) << "\" text-anchor=\"middle\">"
      << escape(f.x_label) << "</text>\n";
  out << "<text x=\"14\" y=\"" << num((y0 + y1) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << num((y0 + y1) / 2) << ")\">" << escape(f.y_label) << "</text>\n";
  for (double v : {f.x_min, f.x_max})
    out << "<text x=\"" << num(c.px(v)) << "\" y=\"" << num(y0 + 16) << "\" text-anchor=\"middle\">" << num(v)
        << "</text>\n";
  for (double v : {f.y_min, f.y_max})
    out << "<text x=\"" << num(x0 - 4) << "\" y=\"" << num(c.py(v) + 4) << "\" text-anchor=\"end\">" << num(v)
        << "</text>\n";
  out << "</g>\n";
}

}  // namespace

std::string scatter_svg(const std::vector<ScatterPoint>& points, const PlotFrame& frame) {
  std::ostringstream out;
  open_svg(out, frame);
  if (!points.empty()) axes(out, frame);
  Canvas c{frame};
  out << "<g class=\"points\" stroke=\"black\" stroke-width=\"0.5\">\n";
  for (const auto& p : points) {
    double x = c.px(p.x), y = c.py(p.y);
    if (p.count == 1) {
      out << "<circle class=\"disc\" cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"4\" fill=\"#f2d024\"/>\n";
    } else if (p.count == 3) {
      out << "<rect class=\"box\" x=\"" << num(x - 4) << "\" y=\"" << num(y - 4)
          << "\" width=\"8\" height=\"8\" fill=\"#2060d0\"/>\n";
    } else {
      out << "<polygon class=\"diamond\" points=\"" << num(x) << "," << num(y - 5) << " " << num(x + 5) << ","
          << num(y) << " " << num(x) << "," << num(y + 5) << " " << num(x - 5) << "," << num(y)
          << "\" fill=\"#d03030\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string grid_svg(const GridResult& grid, size_t x_param, size_t y_param) {
  PlotFrame f;
  if (x_param < grid.params.size()) f.x_label = grid.params[x_param];
  if (y_param < grid.params.size()) f.y_label = grid.params[y_param];
  std::vector<ScatterPoint> pts;
  for (const auto& e : grid.entries) {
    if (x_param >= e.point.size() || y_param >= e.point.size()) continue;
    pts.push_back({to_double(e.point[x_param]), to_double(e.point[y_param]), e.count});
  }
  if (!pts.empty()) {
    auto [xl, xh] = std::minmax_element(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.x < b.x; });
    auto [yl, yh] = std::minmax_element(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.y < b.y; });
    f.x_min = xl->x, f.x_max = xh->x, f.y_min = yl->y, f.y_max = yh->y;
  }
  return scatter_svg(pts, f);
}

std::string region_svg(const OpenCad& cad, const PlotFrame& frame, int resolution) {
  std::ostringstream out;
  open_svg(out, frame);
  Canvas c{frame};
  resolution = std::max(1, resolution);
  double dx = (frame.x_max - frame.x_min) / resolution, dy = (frame.y_max - frame.y_min) / resolution;
  std::map<const OpenCadCell*, std::vector<std::pair<int, int>>> pixels;
  for (int i = 0; i < resolution; ++i) {
    Rational x(frame.x_min + (i + 0.5) * dx);
    auto base = locate_base(cad, x);
    if (!base) continue;
    RootList stack = stack_at(cad, x);
    for (int k = 0; k < resolution; ++k) {
      Rational y(frame.y_min + (k + 0.5) * dy);
      auto s = locate_in_stack(stack, y);
      if (!s) continue;
      for (const auto& cell : cad.cells)
        if (cell.base_index == *base && cell.stack_index == *s) {
          pixels[&cell].push_back({i, k});
          break;
        }
    }
  }
  auto fill = [](CellClass k) {
    switch (k) {
      case CellClass::OneSolution: return "#f7e9a0";
      case CellClass::Multistationary: return "#8fb4ee";
      case CellClass::NoSolution: return "#dddddd";
      case CellClass::NotInQuadrant: return "#ffffff";
      case CellClass::Undetermined: return "#e08080";
    }
    return "#000000";
  };
  double w = c.px(frame.x_min + dx) - c.px(frame.x_min), h = c.py(frame.y_min) - c.py(frame.y_min + dy);
  std::vector<const OpenCadCell*> order;
  for (const auto& cell : cad.cells)
    if (pixels.count(&cell)) order.push_back(&cell);
  for (const auto* cell : order) {
    out << "<g class=\"cell " << to_string(cell->classification) << "\" fill=\"" << fill(cell->classification)
        << "\">\n";
    const auto& px = pixels[cell];
    for (size_t a = 0; a < px.size();) {
      size_t b = a + 1;
      while (b < px.size() && px[b].first == px[a].first && px[b].second == px[b - 1].second + 1) ++b;
      auto [i, k] = px[a];
      int run = static_cast<int>(b - a);
      out << "<rect x=\"" << num(c.px(frame.x_min + i * dx)) << "\" y=\"" << num(c.py(frame.y_min + (k + run) * dy))
          << "\" width=\"" << num(w + 0.01) << "\" height=\"" << num(h * run + 0.01) << "\"/>\n";
      a = b;
    }
    out << "</g>\n";
  }
  axes(out, frame);
  out << "</svg>\n";
  return out.str();
}

}  // namespace multistat
