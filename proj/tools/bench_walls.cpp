// Benchmark: serial reference enumeration vs the OpenMP kernel on a set of
// destabilizer searches of increasing size. Also cross-checks that both
// modes produce identical output.

#include <chrono>
#include <cstdio>

#include "k3walls/walls.hpp"

using namespace k3walls;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(ExecMode mode, const MukaiClass& v, const Region& region, long rank_bound,
               const SurfaceData& X, size_t* n_walls) {
  auto t0 = Clock::now();
  auto walls = potential_destabilizers(v, region, rank_bound, X, mode);
  auto t1 = Clock::now();
  *n_walls = walls.size();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool same_output(const std::vector<Wall>& a, const std::vector<Wall>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].geometry == b[i].geometry)) return false;
    if (a[i].destabilizers.size() != b[i].destabilizers.size()) return false;
    for (size_t j = 0; j < a[i].destabilizers.size(); ++j)
      if (!(a[i].destabilizers[j].w == b[i].destabilizers[j].w)) return false;
  }
  return true;
}

} // namespace

int main() {
  struct Case {
    long d, n, rank_bound;
  };
  const Case cases[] = {{2, 5, 6}, {5, 8, 8}, {9, 13, 10}, {9, 13, 14}};

  std::printf("%-28s %10s %10s %8s %8s\n", "case", "serial/ms", "omp/ms", "speedup", "walls");
  for (const auto& c : cases) {
    SurfaceData X(c.d);
    MukaiClass v{Rat(1), Rat(0), Rat(1 - c.n)};
    Region region{rat(-3, 2), rat(-1, 2), Rat(0), Rat(2)};

    size_t n_serial = 0, n_parallel = 0;
    double ms_serial = time_ms(ExecMode::Serial, v, region, c.rank_bound, X, &n_serial);
    double ms_parallel = time_ms(ExecMode::Parallel, v, region, c.rank_bound, X, &n_parallel);

    auto ws = potential_destabilizers(v, region, c.rank_bound, X, ExecMode::Serial);
    auto wp = potential_destabilizers(v, region, c.rank_bound, X, ExecMode::Parallel);
    if (!same_output(ws, wp)) {
      std::printf("MISMATCH between serial and parallel output (d=%ld n=%ld)\n", c.d, c.n);
      return 1;
    }

    char label[64];
    std::snprintf(label, sizeof(label), "d=%ld n=%ld rank<=%ld", c.d, c.n, c.rank_bound);
    std::printf("%-28s %10.1f %10.1f %7.2fx %8zu\n", label, ms_serial, ms_parallel,
                ms_serial / ms_parallel, n_serial);
  }
  return 0;
}
