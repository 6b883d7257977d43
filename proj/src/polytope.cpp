#include "sphdesign/polytope.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>

#include "sphdesign/error.hpp"
#include "sphdesign/orthogroup.hpp"

namespace sphd {

namespace {

constexpr double kPhi = 1.6180339887498948482;
constexpr double kPi = 3.14159265358979323846;

Vec unit(std::initializer_list<double> v) { return normalized(Vec(v)); }

long binom(int n, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

int simplex_degree_factor(int d) { return d % 2 == 1 ? 2 : 1; }  // K_{d+1} vertex degree d

PolytopeSpec simplex_spec(int d) {
  // Generic regular d-simplex; d = 3 and d = 4 use their own realizations below.
  PolytopeSpec s;
  s.name = std::to_string(d) + "-tetrahedron";
  s.group = "A" + std::to_string(d);
  s.dim = d;
  s.expected_vertices = d + 1;
  s.expected_edges = binom(d + 1, 2);
  s.design_t = 2;
  s.cycle_length =
      static_cast<double>(s.expected_edges) * std::acos(-1.0 / d) * simplex_degree_factor(d);
  // Seed: first vertex of the same realization the roots come from.
  const int n = d + 1;
  std::vector<Vec> corners(n, Vec(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) corners[i][j] = (i == j ? 1.0 : 0.0) - 1.0 / n;
  std::vector<Vec> basis;
  for (int i = 0; i < n && static_cast<int>(basis.size()) < d; ++i) {
    Vec v = corners[i];
    for (const Vec& b : basis) v = sub(v, scale(b, dot(v, b)));
    if (norm(v) > 1e-9) basis.push_back(normalized(v));
  }
  Vec seed(d);
  for (int k = 0; k < d; ++k) seed[k] = dot(basis[k], corners[0]);
  s.seeds = {normalized(seed)};
  return s;
}

PolytopeSpec cube_spec(int d) {
  PolytopeSpec s;
  s.name = std::to_string(d) + "-cube";
  s.group = "B" + std::to_string(d);
  s.dim = d;
  s.seeds = {Vec(static_cast<std::size_t>(d), 1.0 / std::sqrt(static_cast<double>(d)))};
  s.expected_vertices = 1L << d;
  s.expected_edges = static_cast<long>(d) * (1L << (d - 1));
  s.dual = std::to_string(d) + "-octahedron";
  s.design_t = 3;
  const int doubling = d % 2 == 1 ? 2 : 1;  // vertex degree d
  s.cycle_length = static_cast<double>(s.expected_edges) *
                   std::acos(static_cast<double>(d - 2) / d) * doubling;
  return s;
}

PolytopeSpec orthoplex_spec(int d) {
  PolytopeSpec s;
  s.name = std::to_string(d) + "-octahedron";
  s.group = "B" + std::to_string(d);
  s.dim = d;
  Vec e1(static_cast<std::size_t>(d), 0.0);
  e1[0] = 1.0;
  s.seeds = {e1};
  s.expected_vertices = 2L * d;
  s.expected_edges = 2L * d * (d - 1);
  s.dual = std::to_string(d) + "-cube";
  s.design_t = 3;
  s.cycle_length = static_cast<double>(d) * (d - 1) * kPi;  // degree 2(d-1) is even
  return s;
}

PolytopeSpec demicube_spec(int d) {
  PolytopeSpec s;
  s.name = std::to_string(d) + "-demi-cube";
  s.group = "D" + std::to_string(d);
  s.dim = d;
  s.seeds = {Vec(static_cast<std::size_t>(d), 1.0 / std::sqrt(static_cast<double>(d)))};
  s.expected_vertices = 1L << (d - 1);
  s.expected_edges = static_cast<long>(d) * (d - 1) * (1L << (d - 3));
  s.design_t = 3;
  const long degree = static_cast<long>(d) * (d - 1) / 2;
  const int doubling = degree % 2 == 1 ? 2 : 1;
  const double edge_angle = std::acos(static_cast<double>(d - 4) / d);
  s.cycle_length = static_cast<double>(s.expected_edges) * edge_angle * doubling;
  if (doubling == 1) {
    // The catalog formula carries an unconditional factor 2, but the vertex
    // degree C(d,2) is even here, so no doubling happens.
    s.printed_length = 2.0 * static_cast<double>(s.expected_edges) * edge_angle;
    s.note = "even vertex degrees: Euler cycle needs no edge doubling";
  }
  return s;
}

PolytopeSpec rectified_spec(const std::string& base_name, const PolytopeSpec& base,
                            long edge_multiplier) {
  PolytopeSpec s;
  s.name = "rectified-" + base_name;
  s.group = base.group;
  s.dim = base.dim;
  s.rectified_of = base_name;
  s.expected_vertices = base.expected_edges;
  s.expected_edges = base.expected_edges * edge_multiplier;
  s.design_t = base.design_t;
  return s;
}

std::vector<PolytopeSpec> make_catalog() {
  std::vector<PolytopeSpec> c;
  const double s5 = std::sqrt(5.0);

  auto push = [&c](PolytopeSpec s) {
    c.push_back(std::move(s));
    return &c.back();
  };

  // --- R^3, on S^2 ---
  {
    PolytopeSpec s;
    s.name = "tetrahedron";
    s.group = "A3";
    s.dim = 3;
    s.seeds = {unit({1, 1, 1})};
    s.expected_vertices = 4;
    s.expected_edges = 6;
    s.dual = "tetrahedron-dual";
    s.design_t = 2;
    s.cycle_length = 12.0 * std::acos(-1.0 / 3.0);
    push(s);
    s.name = "tetrahedron-dual";
    s.seeds = {unit({1, 1, -1})};
    s.dual = "tetrahedron";
    push(s);
  }
  {
    PolytopeSpec s;
    s.name = "octahedron";
    s.group = "B3";
    s.dim = 3;
    s.seeds = {unit({1, 0, 0})};
    s.expected_vertices = 6;
    s.expected_edges = 12;
    s.dual = "cube";
    s.design_t = 3;
    s.cycle_length = 6.0 * kPi;
    push(s);
  }
  {
    PolytopeSpec s;
    s.name = "cube";
    s.group = "B3";
    s.dim = 3;
    s.seeds = {unit({1, 1, 1})};
    s.expected_vertices = 8;
    s.expected_edges = 12;
    s.dual = "octahedron";
    s.design_t = 3;
    s.cycle_length = 24.0 * std::acos(1.0 / 3.0);
    push(s);
  }
  {
    PolytopeSpec s;
    s.name = "cuboctahedron";
    s.group = "B3";
    s.dim = 3;
    s.seeds = {unit({1, 1, 0})};
    s.expected_vertices = 12;
    s.expected_edges = 24;
    s.dual = "rhombic-dodecahedron";
    s.design_t = 3;
    s.cycle_length = 8.0 * kPi;
    push(s);
  }
  {
    PolytopeSpec s;
    s.name = "rhombic-dodecahedron";
    s.group = "B3";
    s.dim = 3;
    s.seeds = {unit({1, 1, 1}), unit({1, 0, 0})};
    s.expected_vertices = 14;
    s.expected_edges = 24;
    s.dual = "cuboctahedron";
    s.design_t = 3;
    s.cross_orbit_edges = true;
    s.cycle_length = 48.0 * std::acos(1.0 / std::sqrt(3.0));
    push(s);
  }
  {
    PolytopeSpec s;
    s.name = "icosahedron";
    s.group = "H3";
    s.dim = 3;
    s.seeds = {unit({kPhi, 1, 0})};
    s.expected_vertices = 12;
    s.expected_edges = 30;
    s.dual = "dodecahedron";
    s.design_t = 5;
    s.cycle_length = 60.0 * std::acos(1.0 / std::sqrt(5.0));
    push(s);
  }
  {
    PolytopeSpec s;
    s.name = "dodecahedron";
    s.group = "H3";
    s.dim = 3;
    s.seeds = {unit({1, 1, 1})};
    s.expected_vertices = 20;
    s.expected_edges = 30;
    s.dual = "icosahedron";
    s.design_t = 5;
    s.cycle_length = 60.0 * std::acos(s5 / 3.0);
    push(s);
  }
  {
    PolytopeSpec s;
    s.name = "icosidodecahedron";
    s.group = "H3";
    s.dim = 3;
    s.seeds = {unit({1, 0, 0})};
    s.expected_vertices = 30;
    s.expected_edges = 60;
    s.dual = "rhombic-triacontahedron";
    s.design_t = 5;
    s.cycle_length = 12.0 * kPi;
    push(s);
  }
  {
    PolytopeSpec s;
    s.name = "rhombic-triacontahedron";
    s.group = "H3";
    s.dim = 3;
    s.seeds = {unit({kPhi, 1, 0}), unit({1, 1, 1})};
    s.expected_vertices = 32;
    s.expected_edges = 60;
    s.dual = "icosidodecahedron";
    s.design_t = 5;
    s.cross_orbit_edges = true;
    s.cycle_length = 120.0 * std::acos(std::sqrt((5.0 + 2.0 * s5) / 15.0));
    push(s);
  }

  // --- R^4, on S^3 ---
  {
    PolytopeSpec s;
    s.name = "4-tetrahedron";
    s.group = "A4";
    s.dim = 4;
    s.seeds = {unit({0, 0, 1, -1})};
    s.expected_vertices = 5;
    s.expected_edges = 10;
    s.dual = "4-tetrahedron-dual";
    s.design_t = 2;
    s.cycle_length = 10.0 * std::acos(-0.25);
    push(s);
    s.name = "4-tetrahedron-dual";
    s.seeds = {unit({0, 0, -1, 1})};
    s.dual = "4-tetrahedron";
    push(s);
  }
  {
    PolytopeSpec s;
    s.name = "24-cell";
    s.group = "F4";
    s.dim = 4;
    s.seeds = {unit({1, 1, 0, 0})};
    s.expected_vertices = 24;
    s.expected_edges = 96;
    s.dual = "24-cell-dual";
    s.design_t = 5;
    s.cycle_length = 32.0 * kPi;
    push(s);
    s.name = "24-cell-dual";
    s.seeds = {unit({1, 0, 0, 0})};
    s.dual = "24-cell";
    push(s);
  }
  {
    PolytopeSpec s;
    s.name = "600-cell";
    s.group = "H4";
    s.dim = 4;
    s.seeds = {unit({1, 0, 0, 0})};
    s.expected_vertices = 120;
    s.expected_edges = 720;
    s.dual = "120-cell";
    s.design_t = 11;
    s.cycle_length = 720.0 * std::acos((1.0 + s5) / 4.0);
    push(s);
  }
  {
    PolytopeSpec s;
    s.name = "120-cell";
    s.group = "H4";
    s.dim = 4;
    s.seeds = {unit({0, 0, 1, 1})};
    s.expected_vertices = 600;
    s.expected_edges = 1200;
    s.dual = "600-cell";
    s.design_t = 11;
    // The published formula arccos((5+sqrt5)/8) does not equal the edge angle
    // of the 120-cell; the correct argument is (1+3*sqrt5)/8.
    s.cycle_length = 1200.0 * std::acos((1.0 + 3.0 * s5) / 8.0);
    s.printed_length = 1200.0 * std::acos((5.0 + s5) / 8.0);
    s.note = "catalog formula arccos((5+sqrt(5))/8) corrected to arccos((1+3*sqrt(5))/8)";
    push(s);
  }

  // --- parametric families, d = 4..6 (d = 3,4 simplices use the entries above) ---
  for (int d = 5; d <= 6; ++d) push(simplex_spec(d));
  for (int d = 4; d <= 6; ++d) push(cube_spec(d));
  for (int d = 4; d <= 6; ++d) push(orthoplex_spec(d));
  for (int d = 4; d <= 6; ++d) push(demicube_spec(d));

  // --- rectified variants (vertices = projected edge midpoints) ---
  auto base_of = [&c](const std::string& n) -> const PolytopeSpec& {
    for (const auto& s : c)
      if (s.name == n) return s;
    fail("UnknownPolytope", n);
  };
  push(rectified_spec("tetrahedron", base_of("tetrahedron"), 2));
  push(rectified_spec("icosahedron", base_of("icosahedron"), 2));
  push(rectified_spec("dodecahedron", base_of("dodecahedron"), 2));
  push(rectified_spec("4-tetrahedron", base_of("4-tetrahedron"), 3));
  push(rectified_spec("24-cell", base_of("24-cell"), 3));
  push(rectified_spec("600-cell", base_of("600-cell"), 5));
  push(rectified_spec("120-cell", base_of("120-cell"), 3));
  for (int d = 4; d <= 6; ++d) {
    const std::string ds = std::to_string(d);
    push(rectified_spec(ds + "-cube", base_of(ds + "-cube"), d - 1));
    push(rectified_spec(ds + "-octahedron", base_of(ds + "-octahedron"), 2 * d - 4));
    if (d >= 5) push(rectified_spec(ds + "-tetrahedron", base_of(ds + "-tetrahedron"), d - 1));
  }

  // --- E-series rows: arithmetic only, not buildable here ---
  {
    PolytopeSpec s;
    s.buildable = false;
    s.note = "not certifiable (E6/E7/E8 enumeration out of scope)";
    s.name = "2_21";
    s.group = "E6";
    s.dim = 6;
    s.expected_vertices = 27;
    s.expected_edges = 216;
    s.design_t = 4;
    s.cycle_length = 216.0 * std::acos(0.25);
    push(s);
    s.name = "3_21";
    s.group = "E7";
    s.dim = 7;
    s.expected_vertices = 56;
    s.expected_edges = 756;
    s.design_t = 5;
    s.cycle_length = 2.0 * 756.0 * std::acos(1.0 / 3.0);
    push(s);
    s.name = "4_21";
    s.group = "E8";
    s.dim = 8;
    s.expected_vertices = 240;
    s.expected_edges = 6720;
    s.design_t = 7;
    s.cycle_length = 2240.0 * kPi;
    push(s);
  }
  return c;
}

}  // namespace

const std::vector<PolytopeSpec>& catalog() {
  static const std::vector<PolytopeSpec> c = make_catalog();
  return c;
}

PolytopeSpec catalog_lookup(const std::string& name, int d) {
  std::string key = name;
  // "d-cube" + d=5 -> "5-cube"; "d-..." with d == 3 maps to the R^3 entry.
  if (key.rfind("d-", 0) == 0) {
    if (d <= 0) fail("UnknownPolytope", "parametric lookup '" + name + "' needs a dimension");
    if (d == 3)
      key = key.substr(2);
    else
      key = std::to_string(d) + key.substr(1);
  }
  for (const auto& s : catalog())
    if (s.name == key) return s;
  // Parametric entries outside the materialized d range.
  auto starts_with_number = [&key](std::string* rest, int* dd) {
    std::size_t dash = key.find('-');
    if (dash == std::string::npos || dash == 0) return false;
    for (std::size_t i = 0; i < dash; ++i)
      if (!std::isdigit(static_cast<unsigned char>(key[i]))) return false;
    *dd = std::stoi(key.substr(0, dash));
    *rest = key.substr(dash + 1);
    return true;
  };
  std::string rest;
  int dd = 0;
  if (starts_with_number(&rest, &dd) && dd >= 3) {
    if (rest == "cube") return cube_spec(dd);
    if (rest == "octahedron") return orthoplex_spec(dd);
    if (rest == "tetrahedron" && dd >= 5) return simplex_spec(dd);
    if (rest == "demi-cube" && dd >= 4) return demicube_spec(dd);
  }
  fail("UnknownPolytope", "no catalog entry '" + key + "'");
}

Polytope build_polytope(const std::string& name, int d) {
  return build_polytope(catalog_lookup(name, d));
}

Polytope build_polytope(const PolytopeSpec& spec) {
  if (!spec.buildable)
    fail("UnknownPolytope", spec.name + " is arithmetic-only: " + spec.note);

  Polytope p;
  p.spec = spec;
  const FiniteOrthGroup& g = named_group(spec.group);

  if (!spec.rectified_of.empty()) {
    Polytope base = build_polytope(catalog_lookup(spec.rectified_of));
    for (const auto& [i, j] : base.edges)
      p.vertices.push_back(normalized(add(base.vertices[i], base.vertices[j])));
    // Midpoints of distinct edges are distinct; no dedup needed.
    p.vertex_orbit.assign(p.vertices.size(), 0);
  } else {
    for (std::size_t s = 0; s < spec.seeds.size(); ++s) {
      for (Vec& v : orbit(g, spec.seeds[s])) {
        p.vertices.push_back(std::move(v));
        p.vertex_orbit.push_back(static_cast<int>(s));
      }
    }
  }

  if (static_cast<long>(p.vertices.size()) != spec.expected_vertices)
    fail("VertexCountMismatch", spec.name + ": got " + std::to_string(p.vertices.size()) +
                                    " vertices, expected " +
                                    std::to_string(spec.expected_vertices));

  // Edges: vertex pairs at the minimum chord distance over admissible pairs.
  const std::size_t nv = p.vertices.size();
  double min_chord = 1e300;
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i + 1; j < nv; ++j) {
      if (spec.cross_orbit_edges && p.vertex_orbit[i] == p.vertex_orbit[j]) continue;
      min_chord = std::min(min_chord, norm(sub(p.vertices[i], p.vertices[j])));
    }
  }
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i + 1; j < nv; ++j) {
      if (spec.cross_orbit_edges && p.vertex_orbit[i] == p.vertex_orbit[j]) continue;
      if (norm(sub(p.vertices[i], p.vertices[j])) <= min_chord + 1e-9)
        p.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  p.edge_chord = min_chord;

  if (static_cast<long>(p.edges.size()) != spec.expected_edges)
    fail("EdgeCountMismatch", spec.name + ": detected " + std::to_string(p.edges.size()) +
                                  " edges, expected " + std::to_string(spec.expected_edges));
  if (!edge_graph_connected(p)) fail("DisconnectedEdgeGraph", spec.name);
  return p;
}

std::vector<int> vertex_degrees(const Polytope& p) {
  std::vector<int> deg(p.vertices.size(), 0);
  for (const auto& [i, j] : p.edges) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

bool all_degrees_even(const Polytope& p) {
  for (int d : vertex_degrees(p))
    if (d % 2 != 0) return false;
  return true;
}

bool edge_graph_connected(const Polytope& p) {
  const std::size_t n = p.vertices.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j] : p.edges) parent[find(i)] = find(j);
  for (std::size_t i = 1; i < n; ++i)
    if (find(static_cast<int>(i)) != find(0)) return false;
  return true;
}

}  // namespace sphd
