#include <benchmark/benchmark.h>

#include "rigidline/gallery.hpp"
#include "rigidline/rng.hpp"
#include "rigidline/transforms.hpp"

namespace {

using namespace rigidline;

MatrixR random_rational_matrix(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  MatrixR m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.next_rational(60, 7);
  return m;
}

void BM_RrefKernel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  MatrixR m = random_rational_matrix(n, n + 3, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rref_kernel(m));
}
BENCHMARK(BM_RrefKernel)->Arg(6)->Arg(10)->Arg(16);

void BM_PsdRank(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  MatrixR a = random_rational_matrix(n, n, 7);
  MatrixR s = a * a.transposed();  // PSD by construction
  for (auto _ : state) benchmark::DoNotOptimize(psd_rank(s));
}
BENCHMARK(BM_PsdRank)->Arg(6)->Arg(10);

void BM_CertifyStretchedCycle(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Vec positions;
  Rational x = 0;
  for (int i = 0; i < n; ++i) {
    x += i + 1;
    positions.push_back(x);
  }
  GalleryItem item = stretched_cycle(positions);
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_super_stable(item.framework, item.stress));
}
BENCHMARK(BM_CertifyStretchedCycle)->Arg(6)->Arg(10)->Arg(12);

void BM_ProjectPrism(benchmark::State& state) {
  GalleryItem planar = prism_desargues_2d(std::uint64_t{0});
  std::vector<Vec> dirs = {{Rational(3, 5), Rational(-4, 5)}};
  for (auto _ : state) benchmark::DoNotOptimize(project_orthogonal(planar.framework, dirs));
}
BENCHMARK(BM_ProjectPrism);

void BM_LadderPoseValidated(benchmark::State& state) {
  PrismLineFlexibleResult flexible = prism_line_flexible({2, 5, 1, 4, 3, 6}, 0);
  double theta = 0.1;
  for (auto _ : state) {
    theta += 1e-6;
    benchmark::DoNotOptimize(
        prism_ladder_pose(flexible.item.framework, Edge(1, 4), theta, true));
  }
}
BENCHMARK(BM_LadderPoseValidated);

}  // namespace

BENCHMARK_MAIN();
