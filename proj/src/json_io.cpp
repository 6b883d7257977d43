#include "sphdesign/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sphdesign/error.hpp"

namespace sphd {

json group_to_json(const FiniteOrthGroup& g) {
  json elements = json::array();
  for (const Mat& m : g.elements) elements.push_back(m.a);
  return json{{"name", g.name}, {"dim", g.dim}, {"order", g.order()}, {"elements", elements}};
}

json polytope_to_json(const Polytope& p) {
  json verts = json::array();
  for (const Vec& v : p.vertices) verts.push_back(v);
  json edges = json::array();
  for (const auto& [i, j] : p.edges) edges.push_back(json::array({i, j}));
  return json{{"name", p.spec.name}, {"vertices", verts}, {"edges", edges}};
}

json cycle_to_json(const GeodesicCycle& c) {
  json arcs = json::array();
  for (const GeodesicArc& a : c.arcs) arcs.push_back(json{{"a", a.a}, {"b", a.b}});
  return json{{"arcs", arcs}, {"total_length", c.total_length}};
}

json curve_to_json(const Curve& c) {
  if (const auto* g = std::get_if<GeodesicCycle>(&c)) return cycle_to_json(*g);
  const auto& pc = std::get<ParametricCurve>(c);
  return json{{"parametric", true}, {"period", pc.period}, {"speed", pc.speed},
              {"total_length", pc.length}};
}

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exponents", e}, {"coefficient", c}});
  return json{{"nvars", p.nvars()}, {"terms", terms}};
}

json report_to_json(const CertReport& r) {
  json j{{"claimed_t", r.claimed_t},
         {"tol", r.tol},
         {"residuals_by_degree", r.residuals_by_degree},
         {"certified", r.certified},
         {"mode", r.mode}};
  if (r.first_failing_degree >= 0)
    j["first_failing_degree"] = r.first_failing_degree;
  else
    j["first_failing_degree"] = nullptr;
  return j;
}

json design_to_json(const HybridDesign& h) {
  json pts = json::array();
  for (const Vec& p : h.points) pts.push_back(p);
  return json{{"provenance", h.provenance}, {"beta", h.beta},     {"claimed_t", h.claimed_t},
              {"cycle", curve_to_json(h.curve)}, {"points", pts}, {"cert_report", report_to_json(h.cert)}};
}

json molien_to_json(const MolienTable& t) {
  return json{{"group", t.group},
              {"dims", t.dims},
              {"max_integrality_error", t.max_integrality_error}};
}

std::string curve_to_obj(const Curve& c, int samples_per_arc, const std::vector<Vec>* markers) {
  std::ostringstream os;
  os.precision(17);
  int base = 1;
  auto emit_vertex = [&os](const Vec& p) {
    os << "v";
    for (double x : p) os << " " << x;  // 4 coordinates for S^3 points (OBJ x y z w)
    os << "\n";
  };
  auto emit_polyline = [&os, &base, &emit_vertex](const std::vector<Vec>& pts, bool closed) {
    for (const Vec& p : pts) emit_vertex(p);
    os << "l";
    for (std::size_t i = 0; i < pts.size(); ++i) os << " " << base + static_cast<int>(i);
    if (closed) os << " " << base;
    os << "\n";
    base += static_cast<int>(pts.size());
  };

  if (const auto* g = std::get_if<GeodesicCycle>(&c)) {
    for (const GeodesicArc& arc : g->arcs) {
      std::vector<Vec> pts;
      for (int i = 0; i <= samples_per_arc; ++i)
        pts.push_back(arc.point_at(arc.length * i / samples_per_arc));
      emit_polyline(pts, false);
    }
  } else {
    const auto& pc = std::get<ParametricCurve>(c);
    const int n = std::max(256, samples_per_arc * 8);
    std::vector<Vec> pts;
    for (int i = 0; i < n; ++i) pts.push_back(pc.position(pc.period * i / n));
    emit_polyline(pts, true);
  }
  if (markers) {
    for (const Vec& m : *markers) {
      emit_vertex(m);
      os << "p " << base << "\n";
      ++base;
    }
  }
  return os.str();
}

std::string curve_to_csv(const Curve& c, int samples_per_arc) {
  std::ostringstream os;
  os.precision(17);
  auto emit = [&os](const Vec& p, int arc) {
    for (double x : p) os << x << ",";
    os << arc << "\n";
  };
  if (const auto* g = std::get_if<GeodesicCycle>(&c)) {
    for (std::size_t a = 0; a < g->arcs.size(); ++a)
      for (int i = 0; i < samples_per_arc; ++i)
        emit(g->arcs[a].point_at(g->arcs[a].length * i / samples_per_arc),
             static_cast<int>(a));
  } else {
    const auto& pc = std::get<ParametricCurve>(c);
    const int n = std::max(256, samples_per_arc * 8);
    for (int i = 0; i < n; ++i) emit(pc.position(pc.period * i / n), 0);
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) fail("IOError", "cannot open " + path + " for writing");
  f << content;
  if (!f) fail("IOError", "short write to " + path);
}

}  // namespace sphd
