#include "circlesep/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "circlesep/circles.hpp"
#include "circlesep/error.hpp"

namespace circlesep {

namespace {

Rational rational_field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) throw Error(ErrorCode::Parse, std::string("dot needs string field \"") + key + "\"");
  return parse_rational(it->get<std::string>());
}

Json triple_json(const Triple& t) { return Json::array({t[0] + 1, t[1] + 1, t[2] + 1}); }

Json vertex_key_json(const VertexKey& key) {
  return Json{{"triple", triple_json(key.triple)}, {"reversed", key.reversed}, {"near", dot_set_json(key.near)}};
}

Triple oriented(const VertexKey& key) {
  return key.reversed ? Triple{key.triple[0], key.triple[2], key.triple[1]} : key.triple;
}

std::string vertex_label(const VertexKey& key) {
  std::string s = std::to_string(key.triple[0] + 1) + "," + std::to_string(key.triple[1] + 1) + "," +
                  std::to_string(key.triple[2] + 1);
  return (key.reversed ? "-(" : "+(") + s + ")|" + dot_set_label(key.near);
}

std::string edge_label(const EdgeKey& key) {
  return "{" + std::to_string(key.pair[0] + 1) + "," + std::to_string(key.pair[1] + 1) + "}|" + dot_set_label(key.near);
}

using Vec3 = std::array<double, 3>;

Vec3 to_vec(const SpherePoint& p) { return {p.x().get_d(), p.y().get_d(), p.z().get_d()}; }
double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Vec3 normalized(Vec3 a) {
  const double l = std::sqrt(dot3(a, a));
  for (auto& x : a) x /= l;
  return a;
}

}  // namespace

Json config_to_json(const DotConfig& config) {
  Json dots = Json::array();
  for (const auto& p : config.planar()) dots.push_back({{"u", format_rational(p.u)}, {"v", format_rational(p.v)}});
  return Json{{"dots", dots}};
}

DotConfig config_from_json(const Json& doc) {
  if (!doc.is_object() || doc.size() != 1 || !doc.contains("dots") || !doc["dots"].is_array())
    throw Error(ErrorCode::Parse, "configuration must be an object with a single \"dots\" array");
  std::vector<PlanarPoint> pts;
  for (const auto& d : doc["dots"]) {
    if (!d.is_object() || d.size() != 2) throw Error(ErrorCode::Parse, "each dot must be {\"u\":..., \"v\":...}");
    pts.push_back({rational_field(d, "u"), rational_field(d, "v")});
  }
  return DotConfig::from_planar(std::move(pts));
}

DotConfig read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
  }
  return config_from_json(doc);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json dot_set_json(DotSet s) {
  Json out = Json::array();
  for (int i = 0; i < 64; ++i)
    if (contains(s, i)) out.push_back(i + 1);
  return out;
}

std::string dot_set_label(DotSet s) {
  std::string out = "{";
  for (int i = 0; i < 64; ++i) {
    if (!contains(s, i)) continue;
    if (out.size() > 1) out += ",";
    out += std::to_string(i + 1);
  }
  return out + "}";
}

Json counts_report(const DotConfig& config) {
  const int n = config.size();
  const SideTable table(config);
  table.require_general_position();
  bool match = true;

  Json incident = Json::array();
  const auto hist = incident_histogram(table);
  for (int k = 0; 2 * k <= n - 3; ++k) {
    const int l = n - 3 - k;
    const auto it = hist.find({k, l});
    const std::int64_t count = it == hist.end() ? 0 : it->second;
    const std::int64_t expected = incident_formula(k, l);
    match = match && count == expected;
    incident.push_back({{"k", k}, {"l", l}, {"count", count}, {"expected", expected}});
  }

  Json avoidant = Json::array();
  if (n >= 4) {
    for (int k = 1; 2 * k <= n; ++k) {
      const int l = n - k;
      const std::int64_t count = avoidant_partition_count(table, k, l);
      const std::int64_t expected = avoidant_formula(k, l);
      match = match && count == expected;
      avoidant.push_back({{"k", k}, {"l", l}, {"count", count}, {"expected", expected}});
    }
  }

  Json interior = nullptr;
  if (!planar_collinear_triple(config)) {
    interior = Json::array();
    for (const auto& [inside, count] : planar_interior_histogram(config))
      interior.push_back({{"interior", inside}, {"count", count}});
  }

  return Json{{"n", n},
              {"incident_histogram", incident},
              {"avoidant", avoidant},
              {"planar_interior_histogram", interior},
              {"formula_match", match}};
}

bool report_formula_match(const Json& report) { return report.at("formula_match").get<bool>(); }

Json counts_json(const StrataCounts& c) {
  return Json{{"whites", c.whites}, {"blacks", c.blacks}, {"edges", c.edges}, {"regions", c.regions}};
}

Json graph_to_json(const DotConfig& config, const VoronoiGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) {
    Json j = vertex_key_json(v.key);
    j["color"] = v.color == Color::White ? "white" : "black";
    j["edges"] = v.edges;
    j["circumcenter"] = circumcenter_numeric(config, oriented(v.key));
    vertices.push_back(std::move(j));
  }
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"pair", {e.key.pair[0] + 1, e.key.pair[1] + 1}},
                     {"near", dot_set_json(e.key.near)},
                     {"vertices", e.vertices},
                     {"regions", e.regions}});
  Json regions = Json::array();
  for (DotSet r : g.regions) regions.push_back(dot_set_json(r));

  const auto counts = strata_counts(g);
  const auto expected = expected_strata(g.n, g.k);
  Json out{{"n", g.n},
           {"k", g.k},
           {"config", config_to_json(config)},
           {"counts", counts_json(counts)},
           {"expected", counts_json(expected)},
           {"formula_match", counts == expected},
           {"euler_characteristic", euler_characteristic(g)},
           {"connected", is_connected(g)},
           {"antipodal_check", nullptr},
           {"gluing", nullptr},
           {"vertices", vertices},
           {"edges", edges},
           {"regions", regions}};
  if (g.n == 2 * g.k) out["antipodal_check"] = antipodal_check(g);
  if (g.k >= 2 && !planar_collinear_triple(config)) {
    const auto gc = gluing_counts(config, g.k);
    out["gluing"] = {{"white_vertices", gc.white_vertices},
                     {"interior_low", gc.interior_low},
                     {"interior_high", gc.interior_high},
                     {"holds", gc.holds()}};
  }
  return out;
}

std::string graph_to_dot(const VoronoiGraph& g) {
  std::ostringstream os;
  os << "graph order_" << g.k << " {\n  bgcolor=\"gray80\";\n  node [shape=circle, style=filled, fontsize=8];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    const char* c = v.color == Color::White ? "white" : "black";
    os << "  v" << i << " [label=\"" << vertex_label(v.key) << "\", color=\"" << c << "\", fillcolor=\"" << c
       << "\", fontcolor=\"" << (v.color == Color::White ? "black" : "white") << "\"];\n";
  }
  for (const auto& e : g.edges)
    os << "  v" << e.vertices[0] << " -- v" << e.vertices[1] << " [label=\"" << edge_label(e.key) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_svg(const DotConfig& config, const VoronoiGraph& g) {
  std::vector<Vec3> dots;
  for (const auto& d : config.dots()) dots.push_back(to_vec(d));

  double extent = 1.0;
  for (const auto& p : config.planar()) extent = std::max({extent, std::abs(p.u.get_d()), std::abs(p.v.get_d())});
  extent *= 1.5;
  const double size = 800.0, scale = size / (2 * extent);
  auto screen = [&](const Vec3& p, double& x, double& y) {
    const double w = 1 - p[2];
    if (w < 1e-9) return false;
    x = (p[0] / w + extent) * scale;
    y = (extent - p[1] / w) * scale;
    return std::abs(x) < 4 * size && std::abs(y) < 4 * size;
  };

  // Does point p on the bisector of `key.pair` have exactly key.near closer?
  auto on_edge = [&](const Vec3& p, const EdgeKey& key) {
    const double ref = dot3(p, dots[key.pair[0]]);
    for (int i = 0; i < config.size(); ++i) {
      if (i == key.pair[0] || i == key.pair[1]) continue;
      if ((dot3(p, dots[i]) > ref) != contains(key.near, i)) return false;
    }
    return true;
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"#eeeeee\"/>\n";
  for (const auto& e : g.edges) {
    const Vec3 nrm = normalized({dots[e.key.pair[0]][0] - dots[e.key.pair[1]][0],
                                 dots[e.key.pair[0]][1] - dots[e.key.pair[1]][1],
                                 dots[e.key.pair[0]][2] - dots[e.key.pair[1]][2]});
    const Vec3 a = circumcenter_numeric(config, oriented(g.vertices[e.vertices[0]].key));
    const Vec3 b = circumcenter_numeric(config, oriented(g.vertices[e.vertices[1]].key));
    const Vec3 e1 = normalized(a);
    const Vec3 e2 = cross3(nrm, e1);
    const double theta = std::atan2(dot3(b, e2), dot3(b, e1));
    double sweep = theta;
    auto at = [&](double s) {
      const double c = std::cos(s), sn = std::sin(s);
      return Vec3{c * e1[0] + sn * e2[0], c * e1[1] + sn * e2[1], c * e1[2] + sn * e2[2]};
    };
    const double other = theta > 0 ? theta - 2 * std::numbers::pi : theta + 2 * std::numbers::pi;
    if (!on_edge(at(theta / 2), e.key) && on_edge(at(other / 2), e.key)) sweep = other;

    std::string path;
    bool pen = false;
    for (int i = 0; i <= 48; ++i) {
      double x, y;
      if (!screen(at(sweep * i / 48), x, y)) {
        pen = false;
        continue;
      }
      std::ostringstream pt;
      pt << (pen ? " L" : " M") << x << "," << y;
      path += pt.str();
      pen = true;
    }
    if (!path.empty()) os << "<path d=\"" << path.substr(1) << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  }
  for (const auto& v : g.vertices) {
    double x, y;
    if (!screen(circumcenter_numeric(config, oriented(v.key)), x, y)) continue;
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" stroke=\"black\" fill=\""
       << (v.color == Color::White ? "white" : "black") << "\"/>\n";
  }
  for (int i = 0; i < config.size(); ++i) {
    double x, y;
    if (!screen(dots[i], x, y)) continue;
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"#c0392b\"/>\n"
       << "<text x=\"" << x + 5 << "\" y=\"" << y - 5 << "\" font-size=\"12\" fill=\"#c0392b\">" << i + 1
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

Json move_log_to_json(const MoveLog& log, int n, int k) {
  auto keys = [](const std::vector<VertexKey>& ks) {
    Json out = Json::array();
    for (const auto& key : ks) out.push_back(vertex_key_json(key));
    return out;
  };
  Json events = Json::array();
  for (const auto& e : log.events) {
    const auto& q = e.wall.quadruple;
    Json j{{"segment", e.segment},
           {"quadruple", {q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1}},
           {"interval", {format_rational(e.wall.lo), format_rational(e.wall.hi)}},
           {"kind", to_string(e.kind)},
           {"second_kind", e.second_kind ? Json(to_string(*e.second_kind)) : Json(nullptr)},
           {"antipodal_paired", e.antipodal_paired},
           {"near_counts", {e.centers[0].near_count, e.centers[1].near_count}},
           {"counts_before", counts_json(e.counts_before)},
           {"counts_after", counts_json(e.counts_after)},
           {"affected_before", keys(e.affected_before)},
           {"affected_after", keys(e.affected_after)}};
    events.push_back(std::move(j));
  }
  Json tangential = Json::array();
  for (const auto& w : log.tangential) {
    const auto& q = w.quadruple;
    tangential.push_back({{"quadruple", {q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1}},
                          {"interval", {format_rational(w.lo), format_rational(w.hi)}}});
  }
  Json waypoints = Json::array();
  for (const auto& w : log.waypoints) waypoints.push_back(config_to_json(DotConfig::from_planar(w)));
  return Json{{"n", n},
              {"k", k},
              {"endpoints_match", log.endpoints_match},
              {"retries", log.retries},
              {"events", events},
              {"tangential", tangential},
              {"waypoints", waypoints}};
}

}  // namespace circlesep
