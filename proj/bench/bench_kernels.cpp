#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "cwsphere/enriched.hpp"
#include "cwsphere/poset.hpp"
#include "cwsphere/qsym.hpp"
#include "cwsphere/sphere.hpp"

using namespace cwsphere;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const std::string& name, const std::function<void()>& parallel, const std::function<void()>& serial, int reps) {
  const double p = seconds(parallel, reps);
  const double s = seconds(serial, reps);
  std::printf("%-34s serial %10.4f s  parallel %10.4f s  speedup %6.2fx\n", name.c_str(), s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::stoi(argv[1]) : 6;
  std::printf("threads: %d, n = %d\n", omp_get_max_threads(), n);

  ClosedSetLattice boolean(ConvexGeometry::boolean(n));
  ClosedSetLattice line(ConvexGeometry::collinear(n + 1));
  QPoset q(boolean);

  row("reflect (Boolean)", [&] { reflect(boolean); }, [&] { serial::reflect(boolean); }, 3);
  row("reflect (collinear n+1)", [&] { reflect(line); }, [&] { serial::reflect(line); }, 3);
  row("nu_table (Q_L, Boolean)", [&] { nu_table(q.poset()); }, [&] { serial::nu_table(q.poset()); }, 3);
  row("is_eulerian (Q_L, Boolean)", [&] { is_eulerian(q.poset()); }, [&] { serial::is_eulerian(q.poset()); }, 3);
  row("theta (L* + 0, Boolean)", [&] { theta_of_poset(boolean.dual_with_bottom()); },
      [&] { serial::theta_of_poset(boolean.dual_with_bottom()); }, 3);
  row("count_enriched m=3 (collinear n+1)", [&] { count_enriched(line, 3); }, [&] { serial::count_enriched(line, 3); }, 1);
  return 0;
}
