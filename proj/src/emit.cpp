#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hr/scenario.hpp"

namespace hr {

namespace {

// shortest representation that round-trips
std::string num(double v) {
  std::array<char, 64> buf{};
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), p);
}

std::string fixed(double v) {
  std::array<char, 64> buf{};
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), p);
}

std::string xml_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    switch (c) {
      case '&': o += "&amp;"; break;
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '"': o += "&quot;"; break;
      default: o += c;
    }
  }
  return o;
}

}  // namespace

std::string csv_escape(const std::string& f) {
  if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
  std::string o = "\"";
  for (char c : f) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + '"';
}

std::string to_csv(const WitnessTable& t) {
  const bool sweep = !t.sweep_path.empty();
  std::string o = "t,witness_id,modes,m,n,value_primary,value_secondary,nonclassical";
  if (sweep) o += "," + csv_escape(t.sweep_path);
  o += "\r\n";
  for (const auto& r : t.rows) {
    o += num(r.t) + ',' + csv_escape(r.witness_id) + ',' + csv_escape(r.modes) + ',' + std::to_string(r.m) + ',' +
         std::to_string(r.n) + ',' + num(r.value_primary) + ',' +
         (r.value_secondary ? num(*r.value_secondary) : std::string{}) + ',' + (r.nonclassical ? "1" : "0");
    if (sweep) o += ',' + (r.sweep_value ? num(*r.sweep_value) : std::string{});
    o += "\r\n";
  }
  return o;
}

std::string to_json_text(const WitnessTable& t) {
  nlohmann::json j;
  j["title"] = t.title;
  j["sweep_path"] = t.sweep_path;
  j["display_scale"] = t.display_scale;
  auto rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json x{{"t", r.t},
                     {"witness_id", r.witness_id},
                     {"modes", r.modes},
                     {"m", r.m},
                     {"n", r.n},
                     {"value_primary", r.value_primary},
                     {"nonclassical", r.nonclassical}};
    x["value_secondary"] = r.value_secondary ? nlohmann::json(*r.value_secondary) : nlohmann::json(nullptr);
    if (r.sweep_value) x["sweep_value"] = *r.sweep_value;
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  return j.dump(1) + "\n";
}

WitnessTable table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    WitnessTable t;
    t.title = j.value("title", "");
    t.sweep_path = j.value("sweep_path", "");
    if (j.contains("display_scale")) t.display_scale = j["display_scale"].get<std::map<std::string, double>>();
    for (const auto& x : j.at("rows")) {
      TableRow r;
      r.t = x.at("t").get<double>();
      r.witness_id = x.at("witness_id").get<std::string>();
      r.modes = x.at("modes").get<std::string>();
      r.m = x.at("m").get<int>();
      r.n = x.at("n").get<int>();
      r.value_primary = x.at("value_primary").get<double>();
      if (x.contains("value_secondary") && !x["value_secondary"].is_null())
        r.value_secondary = x["value_secondary"].get<double>();
      r.nonclassical = x.at("nonclassical").get<bool>();
      if (x.contains("sweep_value")) r.sweep_value = x["sweep_value"].get<double>();
      t.rows.push_back(std::move(r));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad witness table JSON: ") + e.what());
  }
}

std::string to_svg(const WitnessTable& t) {
  struct Series {
    std::string label;
    double scale = 1;
    std::vector<std::pair<double, double>> pts;
  };
  std::vector<Series> series;
  std::map<std::string, std::size_t> index;
  for (const auto& r : t.rows) {
    auto scale_it = t.display_scale.find(r.witness_id);
    const double sc = scale_it == t.display_scale.end() ? 1.0 : scale_it->second;
    for (int b = 0; b < 2; ++b) {
      if (b == 1 && !r.value_secondary) continue;
      std::string label = r.witness_id;
      if (r.value_secondary) label += b == 0 ? " (I)" : " (II)";
      if (r.sweep_value) label += " @ " + t.sweep_path + "=" + num(*r.sweep_value);
      auto [it, fresh] = index.try_emplace(label, series.size());
      if (fresh) series.push_back({label, sc, {}});
      series[it->second].pts.emplace_back(r.t, sc * (b == 0 ? r.value_primary : *r.value_secondary));
    }
  }
  double x0 = 0, x1 = 1, y0 = 0, y1 = 0;
  bool first = true;
  for (const auto& s : series)
    for (auto [x, y] : s.pts) {
      if (!std::isfinite(y)) continue;
      if (first) x0 = x1 = x, first = false;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  if (x1 <= x0) x1 = x0 + 1;
  if (y1 <= y0) y1 = y0 + 1;
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;

  const double W = 960, H = 540, L = 90, R = 300, T = 40, B = 60;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return T + (y1 - y) / (y1 - y0) * (H - T - B); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                 "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
    << ' ' << H << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << L << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">" << xml_escape(t.title)
    << "</text>\n";
  o << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << (W - L - R) << "\" height=\"" << (H - T - B)
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  o << "<line class=\"zero\" x1=\"" << fixed(px(x0)) << "\" y1=\"" << fixed(py(0)) << "\" x2=\"" << fixed(px(x1))
    << "\" y2=\"" << fixed(py(0)) << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4, yv = y0 + (y1 - y0) * i / 4;
    o << "<text x=\"" << fixed(px(xv)) << "\" y=\"" << (H - B + 18)
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << num(xv) << "</text>\n";
    o << "<text x=\"" << (L - 6) << "\" y=\"" << fixed(py(yv) + 4)
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << xml_escape(num(yv)) << "</text>\n";
  }
  o << "<text x=\"" << (L + (W - L - R) / 2) << "\" y=\"" << (H - 16)
    << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">gt</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* c = colors[s % std::size(colors)];
    o << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"";
    for (auto [x, y] : series[s].pts)
      if (std::isfinite(y)) o << fixed(px(x)) << ',' << fixed(py(y)) << ' ';
    o << "\"/>\n";
    std::string label = series[s].label;
    if (series[s].scale != 1) label += " x" + num(series[s].scale);
    const double ly = T + 16 * s + 10;
    o << "<line x1=\"" << (W - R + 12) << "\" y1=\"" << ly << "\" x2=\"" << (W - R + 34) << "\" y2=\"" << ly
      << "\" stroke=\"" << c << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << (W - R + 40) << "\" y=\"" << (ly + 4) << "\" font-family=\"sans-serif\" font-size=\"11\">"
      << xml_escape(label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace hr
