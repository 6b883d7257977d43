// Benchmark: moment-residual sweep kernels (OpenMP power-table kernel vs the
// single-thread table kernel vs the plain std::pow reference path).

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sphdesign/cycles.hpp"
#include "sphdesign/polytope.hpp"
#include "sphdesign/quad.hpp"

using namespace sphd;

namespace {

double time_sweep(const WeightedSites& sites, const std::vector<std::vector<int>>& monos,
                  SweepMode mode, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    volatile double sink = moment_residuals(sites, monos, mode)[0];
    (void)sink;
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

void run_case(const std::string& name, const Curve& curve, const std::vector<Vec>* pts,
              double beta, int t, bool include_reference) {
  const WeightedSites sites = design_sites(&curve, pts, beta, t + 1);
  const auto monos = monomials_up_to(sites.nvars, t + 1);
  std::printf("%-28s sites=%6zu monomials=%5zu\n", name.c_str(), sites.pos.size(), monos.size());

  const double par = time_sweep(sites, monos, SweepMode::Parallel, 3);
  const double ser = time_sweep(sites, monos, SweepMode::Serial, 3);
  std::printf("  parallel  %8.4fs\n  serial    %8.4fs  (x%.2f)\n", par, ser, ser / par);
  if (include_reference) {
    const double ref = time_sweep(sites, monos, SweepMode::ReferenceSerial, 1);
    std::printf("  reference %8.4fs  (x%.2f)\n", ref, ref / par);
  }
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; all modes run single-threaded\n");
#endif

  {
    const Curve c = euler_cycle(build_polytope("cuboctahedron"));
    const std::vector<Vec> pts = build_polytope("rhombic-dodecahedron").vertices;
    run_case("cuboctahedron hybrid t=5", c, &pts, 21.0 / 25.0, 5, true);
  }
  {
    const Curve c = euler_cycle(build_polytope("24-cell"));
    const std::vector<Vec> pts = build_polytope("24-cell-dual").vertices;
    run_case("24-cell hybrid t=7", c, &pts, 5.0 / 14.0, 7, true);
  }
  {
    const Curve c = euler_cycle(build_polytope("600-cell"));
    const std::vector<Vec> pts = build_polytope("120-cell").vertices;
    run_case("600-cell hybrid t=19", c, &pts, 176.0 / 301.0, 19, false);
  }
  return 0;
}
