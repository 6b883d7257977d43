#include "sphdesign/cli.hpp"

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sphdesign/error.hpp"
#include "sphdesign/json_io.hpp"

namespace sphd {

namespace {

std::pair<std::string, std::string> split_pair(const std::string& s) {
  const std::size_t colon = s.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
    fail("UnknownPair", "expected PRIMAL:DUAL, got '" + s + "'");
  return {s.substr(0, colon), s.substr(colon + 1)};
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

std::vector<Vec> arrangement_points(const std::string& name) {
  if (name != "octahedron" && name != "cube" && name != "icosahedron")
    fail("UnknownPolytope", "great-circle arrangements are built from the antipodal vertex "
                            "sets 'octahedron', 'cube', or 'icosahedron'");
  return build_polytope(name).vertices;
}

CertReport cubature_salikhov(int t, double tol) {
  const std::vector<Vec> x120 = build_polytope("120-cell").vertices;
  const std::vector<Vec> x600 = build_polytope("600-cell").vertices;
  return weighted_point_cubature({{x120, 16.0 / 21.0}, {x600, 5.0 / 21.0}}, t, tol);
}

int cmd_catalog(const std::string& filter) {
  std::printf("%-28s %-6s %3s %9s %8s %14s  %s\n", "polytope", "group", "t", "vertices",
              "edges", "cycle-length", "notes");
  for (const PolytopeSpec& s : catalog()) {
    if (!filter.empty() && s.name.find(filter) == std::string::npos) continue;
    std::string notes = s.note;
    if (!s.dual.empty()) notes = "dual: " + s.dual + (notes.empty() ? "" : "; " + notes);
    if (s.cycle_length > 0.0)
      std::printf("%-28s %-6s %3d %9ld %8ld %14.8f  %s\n", s.name.c_str(), s.group.c_str(),
                  s.design_t, s.expected_vertices, s.expected_edges, s.cycle_length,
                  notes.c_str());
    else
      std::printf("%-28s %-6s %3d %9ld %8ld %14s  %s\n", s.name.c_str(), s.group.c_str(),
                  s.design_t, s.expected_vertices, s.expected_edges, "-", notes.c_str());
  }
  return 0;
}

struct CertifyArgs {
  std::string cycle, hybrid, arrangement, elementary, cubature;
  int t = -1;
  double tol = 1e-10;
  bool full_sweep = false;
  std::string out;
};

int cmd_certify(const CertifyArgs& a) {
  json report;
  bool certified = false;

  if (!a.cycle.empty()) {
    const Polytope p = build_polytope(a.cycle);
    const int t = a.t >= 0 ? a.t : p.spec.design_t;
    const Curve c = euler_cycle(p);
    const CertReport r = certify_design(&c, nullptr, 0.0, t, a.tol);
    certified = r.certified;
    report = json{{"design", "cycle:" + a.cycle}, {"report", report_to_json(r)}};
  } else if (!a.hybrid.empty()) {
    const auto [primal, dual] = split_pair(a.hybrid);
    const CertifyMode mode = a.full_sweep ? CertifyMode::Full : CertifyMode::Auto;
    HybridDesign h = build_hybrid(primal, dual, mode, a.tol);
    if (a.t >= 0 && a.t != h.claimed_t)
      h.cert = certify_design(&h.curve, &h.points, h.beta, a.t, a.tol);
    certified = h.cert.certified;
    report = design_to_json(h);
  } else if (!a.arrangement.empty()) {
    const Curve c = great_circle_cycle(arrangement_points(a.arrangement));
    const int t = a.t >= 0 ? a.t : catalog_lookup(a.arrangement).design_t;
    const CertReport r = certify_design(&c, nullptr, 0.0, t, a.tol);
    certified = r.certified;
    report = json{{"design", "arrangement:" + a.arrangement}, {"report", report_to_json(r)}};
  } else if (!a.elementary.empty()) {
    const int idx = a.elementary == "i" ? 0 : a.elementary == "ii" ? 1 : a.elementary == "iii" ? 2 : -1;
    if (idx < 0) fail("UnknownPair", "elementary designs are 'i', 'ii', or 'iii'");
    HybridDesign h = elementary_hybrids(a.tol)[idx];
    if (a.t >= 0 && a.t != h.claimed_t)
      h.cert = certify_design(&h.curve, &h.points, h.beta, a.t, a.tol);
    certified = h.cert.certified;
    report = design_to_json(h);
  } else if (!a.cubature.empty()) {
    if (a.cubature != "salikhov")
      fail("UnknownPair", "the registered weighted point cubature is 'salikhov'");
    const CertReport r = cubature_salikhov(a.t >= 0 ? a.t : 19, a.tol);
    certified = r.certified;
    report = json{{"design", "cubature:salikhov"}, {"report", report_to_json(r)}};
  } else {
    fail("UnknownPair", "certify needs one of --cycle/--hybrid/--arrangement/--elementary/--cubature");
  }

  emit(report, a.out);
  return certified ? 0 : 1;
}

int cmd_beta(const std::string& pair, int oct_cube_d, const std::string& out) {
  json j;
  if (!pair.empty()) {
    const auto [primal, dual] = split_pair(pair);
    const HybridDesign h = build_hybrid(primal, dual, CertifyMode::Fast);
    j = json{{"pair", primal + "/" + dual}, {"beta", h.beta}, {"strength", h.claimed_t}};
  } else if (oct_cube_d >= 3) {
    const auto [oc, co] = beta_formulas_d(oct_cube_d);
    j = json{{"d", oct_cube_d}, {"beta_oct_cube", oc}, {"beta_cube_oct", co}};
  } else {
    fail("UnknownPair", "beta needs --pair PRIMAL:DUAL or --oct-cube-d D");
  }
  emit(j, out);
  return 0;
}

int cmd_molien(const std::string& group, int lmax, const std::string& out) {
  const MolienTable t = molien_dims(named_group(group), lmax);
  emit(molien_to_json(t), out);
  return 0;
}

struct CoveringArgs {
  std::string cycle, hybrid;
  int ntest = 100000;
  int samples_per_arc = 64;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_covering(const CoveringArgs& a) {
  std::vector<Vec> support;
  std::string label;
  if (!a.cycle.empty()) {
    const Curve c = euler_cycle(build_polytope(a.cycle));
    support = design_support(&c, nullptr, a.samples_per_arc);
    label = "cycle:" + a.cycle;
  } else if (!a.hybrid.empty()) {
    const auto [primal, dual] = split_pair(a.hybrid);
    const HybridDesign h = build_hybrid(primal, dual, CertifyMode::Fast);
    support = design_support(&h.curve, &h.points, a.samples_per_arc);
    label = "hybrid:" + primal + "/" + dual;
  } else {
    fail("UnknownPair", "covering needs --cycle or --hybrid");
  }
  const double delta = covering_radius(support, a.ntest, a.seed);
  emit(json{{"design", label},
            {"covering_radius", delta},
            {"n_test", a.ntest},
            {"samples_per_arc", a.samples_per_arc},
            {"note", "maximin estimate at sampled support resolution"}},
       a.out);
  return 0;
}

struct ExportArgs {
  std::string cycle, hybrid, polytope;
  std::string format = "json";
  int samples_per_arc = 32;
  std::string out;
};

int cmd_export(const ExportArgs& a) {
  if (!a.polytope.empty()) {
    if (a.format != "json" && a.format != "obj")
      fail("IOError", "polytopes export as json or obj");
    const Polytope p = build_polytope(a.polytope);
    if (a.format == "json") {
      emit(polytope_to_json(p), a.out);
    } else {
      std::ostringstream os;
      os.precision(17);
      for (const Vec& v : p.vertices) {
        os << "v";
        for (double x : v) os << " " << x;
        os << "\n";
      }
      for (const auto& [i, j] : p.edges) os << "l " << i + 1 << " " << j + 1 << "\n";
      if (a.out.empty())
        std::cout << os.str();
      else
        write_text_file(a.out, os.str());
    }
    return 0;
  }

  Curve curve = circle_curve(0.0);
  std::vector<Vec> markers;
  if (!a.cycle.empty()) {
    curve = euler_cycle(build_polytope(a.cycle));
  } else if (!a.hybrid.empty()) {
    const auto [primal, dual] = split_pair(a.hybrid);
    HybridDesign h = build_hybrid(primal, dual, CertifyMode::Fast);
    curve = std::move(h.curve);
    markers = std::move(h.points);
  } else {
    fail("UnknownPair", "export needs --cycle, --hybrid, or --polytope");
  }

  if (a.format == "json") {
    json j = curve_to_json(curve);
    if (!markers.empty()) j["points"] = markers;
    emit(j, a.out);
  } else if (a.format == "obj") {
    const std::string text = curve_to_obj(curve, a.samples_per_arc, markers.empty() ? nullptr : &markers);
    if (a.out.empty())
      std::cout << text;
    else
      write_text_file(a.out, text);
  } else if (a.format == "csv-polyline") {
    const std::string text = curve_to_csv(curve, a.samples_per_arc);
    if (a.out.empty())
      std::cout << text;
    else
      write_text_file(a.out, text);
  } else {
    fail("IOError", "unknown format '" + a.format + "'");
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"spherical design curves and hybrid designs from reflection groups"};
  app.require_subcommand(1);

  std::string filter;
  auto* catalog_cmd = app.add_subcommand("catalog", "list the polytope catalog");
  catalog_cmd->add_option("--filter", filter, "substring filter on names");

  CertifyArgs cert;
  auto* certify_cmd = app.add_subcommand("certify", "build a design and run the residual sweep");
  certify_cmd->add_option("--cycle", cert.cycle, "polytope whose Euler cycle is certified");
  certify_cmd->add_option("--hybrid", cert.hybrid, "PRIMAL:DUAL hybrid pair");
  certify_cmd->add_option("--arrangement", cert.arrangement,
                          "great-circle arrangement from an antipodal vertex set");
  certify_cmd->add_option("--elementary", cert.elementary, "elementary hybrid: i, ii, or iii");
  certify_cmd->add_option("--cubature", cert.cubature, "weighted point cubature (salikhov)");
  certify_cmd->add_option("--t", cert.t, "strength to certify (default: catalog value)");
  certify_cmd->add_option("--tol", cert.tol, "residual tolerance (default 1e-10)");
  certify_cmd->add_flag("--full-sweep", cert.full_sweep,
                        "force the full monomial sweep for the strength-19 pair");
  certify_cmd->add_option("--out", cert.out, "write the JSON report here");

  std::string beta_pair;
  int beta_d = 0;
  std::string beta_out;
  auto* beta_cmd = app.add_subcommand("beta", "balancing factor of a registered pair");
  beta_cmd->add_option("--pair", beta_pair, "PRIMAL:DUAL");
  beta_cmd->add_option("--oct-cube-d", beta_d, "closed forms for the d-octahedron/d-cube pair");
  beta_cmd->add_option("--out", beta_out, "write JSON here");

  std::string molien_group = "B3";
  int molien_lmax = 12;
  std::string molien_out;
  auto* molien_cmd = app.add_subcommand("molien", "invariant harmonic dimensions by degree");
  molien_cmd->add_option("--group", molien_group, "named group label");
  molien_cmd->add_option("--lmax", molien_lmax, "maximum degree");
  molien_cmd->add_option("--out", molien_out, "write JSON here");

  CoveringArgs cov;
  auto* covering_cmd = app.add_subcommand("covering", "covering-radius estimate of a design");
  covering_cmd->add_option("--cycle", cov.cycle, "polytope cycle");
  covering_cmd->add_option("--hybrid", cov.hybrid, "PRIMAL:DUAL hybrid");
  covering_cmd->add_option("--ntest", cov.ntest, "number of test directions");
  covering_cmd->add_option("--samples-per-arc", cov.samples_per_arc, "support resolution");
  covering_cmd->add_option("--seed", cov.seed, "sampling seed");
  covering_cmd->add_option("--out", cov.out, "write JSON here");

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "write plot data");
  export_cmd->add_option("--cycle", exp.cycle, "polytope cycle");
  export_cmd->add_option("--hybrid", exp.hybrid, "PRIMAL:DUAL hybrid");
  export_cmd->add_option("--polytope", exp.polytope, "vertices and edges only");
  export_cmd->add_option("--format", exp.format, "json | obj | csv-polyline");
  export_cmd->add_option("--samples-per-arc", exp.samples_per_arc, "polyline resolution");
  export_cmd->add_option("--out", exp.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (catalog_cmd->parsed()) return cmd_catalog(filter);
    if (certify_cmd->parsed()) return cmd_certify(cert);
    if (beta_cmd->parsed()) return cmd_beta(beta_pair, beta_d, beta_out);
    if (molien_cmd->parsed()) return cmd_molien(molien_group, molien_lmax, molien_out);
    if (covering_cmd->parsed()) return cmd_covering(cov);
    if (export_cmd->parsed()) return cmd_export(exp);
  } catch (const Error& e) {
    std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace sphd
