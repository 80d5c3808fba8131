// Timing harness for the exact rank kernel: the OpenMP block driver against
// the serial reference on the cohomology and bar-Koszul workloads.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nilcoh/bar_koszul.hpp"
#include "nilcoh/ce.hpp"
#include "nilcoh/module.hpp"

using namespace nilcoh;
using h_clock = std::chrono::steady_clock;

namespace {

double ms_since(h_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(h_clock::now() - t0).count();
}

std::vector<SparseMat> ce_blocks(const std::string& type, bool adjoint) {
  RootSystem rs(CartanMatrix::preset(type));
  NilpotentAlgebra alg(rs);
  std::vector<SparseMat> mats;
  if (adjoint) {
    std::vector<Rat> f;
    for (const Rat& x : rs.fundamental_coords(Weight::of(rs.highest_root()))) f.push_back(x);
    HighestWeightModule v(alg, rs.from_fundamental(f));
    ChainComplex cx(alg, &v);
    for (size_t b = 0; b < cx.blocks().size(); ++b)
      for (int k = 0; k < cx.top_degree(); ++k)
        mats.push_back(cx.block_differential(static_cast<int>(b), k));
  } else {
    ChainComplex cx(alg, nullptr);
    for (size_t b = 0; b < cx.blocks().size(); ++b)
      for (int k = 0; k < cx.top_degree(); ++k)
        mats.push_back(cx.block_differential(static_cast<int>(b), k));
  }
  return mats;
}

std::vector<SparseMat> koszul_blocks(const std::string& type, int bound) {
  RootSystem rs(CartanMatrix::preset(type));
  NilpotentAlgebra alg(rs);
  std::vector<SparseMat> mats;
  for (const auto& l : positive_cone(rs.rank(), bound)) {
    if (l.is_zero()) continue;
    BarKoszulComplex cx(alg, l);
    for (int t = 1; t <= cx.max_degree(); ++t) mats.push_back(cx.total(t));
  }
  return mats;
}

void run(const char* label, const std::vector<SparseMat>& mats, int jobs) {
  auto t0 = h_clock::now();
  std::vector<long> serial = block_ranks_serial(mats);
  double ts = ms_since(t0);

  t0 = h_clock::now();
  std::vector<long> parallel = block_ranks_parallel(mats, jobs);
  double tp = ms_since(t0);

  bool equal = serial == parallel;
  std::printf("%-28s blocks=%4zu  serial=%8.1fms  omp(%d)=%8.1fms  speedup=%.2fx  match=%s\n",
              label, mats.size(), ts, jobs, tp, tp > 0 ? ts / tp : 0.0, equal ? "yes" : "NO");
  if (!equal) std::exit(1);
}

}  // namespace

int main() {
  int jobs = 2;
#ifdef _OPENMP
  jobs = omp_get_max_threads();
#endif
  std::printf("exact rank kernel, serial reference vs OpenMP driver (%d threads)\n", jobs);
  run("ce B3 trivial", ce_blocks("B3", false), jobs);
  run("ce B2 adjoint", ce_blocks("B2", true), jobs);
  run("ce A2 adjoint", ce_blocks("A2", true), jobs);
  run("bar-koszul B2 |l|<=6", koszul_blocks("B2", 6), jobs);
  run("bar-koszul B2 |l|<=7", koszul_blocks("B2", 7), jobs);
  run("bar-koszul G2 |l|<=5", koszul_blocks("G2", 5), jobs);
  return 0;
}
