#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sphdesign/linalg.hpp"

namespace sphd {

/// Catalog entry: a polytope described as (unions of) group orbits.
struct PolytopeSpec {
  std::string name;
  std::string group;               // named_group label
  int dim = 0;                     // ambient dimension (polytope in R^dim)
  std::vector<Vec> seeds;          // one unit seed per vertex orbit
  std::string rectified_of;        // when set, vertices are the base's edge midpoints
  long expected_vertices = 0;
  long expected_edges = 0;
  std::string dual;                // dual partner used for hybrid designs ("" if none)
  int design_t = 0;                // homogeneity of the symmetry group
  bool cross_orbit_edges = false;  // rhombic two-orbit entries
  bool buildable = true;           // E-series rows are arithmetic-only
  double cycle_length = 0.0;       // closed form for the Euler cycle (doubling included)
  double printed_length = 0.0;     // catalog formula as printed, when it differs
  std::string note;
};

struct Polytope {
  PolytopeSpec spec;
  std::vector<Vec> vertices;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
  std::vector<int> vertex_orbit;           // seed index per vertex
  double edge_chord = 0.0;                 // common chord length of detected edges
};

/// Every registered entry (R^3 catalog, 4D regular polytopes and their duals,
/// parametric families for d = 4..6, rectified variants, E-series rows).
const std::vector<PolytopeSpec>& catalog();

/// Lookup by name; parametric families accept either "5-cube" or ("d-cube", d).
PolytopeSpec catalog_lookup(const std::string& name, int d = 0);

Polytope build_polytope(const PolytopeSpec& spec);
Polytope build_polytope(const std::string& name, int d = 0);

std::vector<int> vertex_degrees(const Polytope& p);
bool all_degrees_even(const Polytope& p);
bool edge_graph_connected(const Polytope& p);

}  // namespace sphd
