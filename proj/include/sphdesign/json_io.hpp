#pragma once

#include <string>

#include <json.hpp>

#include "sphdesign/cycles.hpp"
#include "sphdesign/hybrid.hpp"
#include "sphdesign/invariants.hpp"
#include "sphdesign/orthogroup.hpp"
#include "sphdesign/polytope.hpp"
#include "sphdesign/quad.hpp"

namespace sphd {

using nlohmann::json;

json group_to_json(const FiniteOrthGroup& g);
json polytope_to_json(const Polytope& p);
json cycle_to_json(const GeodesicCycle& c);
json curve_to_json(const Curve& c);
json poly_to_json(const MultiPoly& p);
json report_to_json(const CertReport& r);
json design_to_json(const HybridDesign& h);
json molien_to_json(const MolienTable& t);

/// Wavefront OBJ line set: one polyline per arc (or the sampled curve).
std::string curve_to_obj(const Curve& c, int samples_per_arc, const std::vector<Vec>* markers);

/// "x,y,z[,w],arc" rows, one sample per line.
std::string curve_to_csv(const Curve& c, int samples_per_arc);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace sphd
