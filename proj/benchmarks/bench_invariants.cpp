#include <benchmark/benchmark.h>

#include "ferrers/chromatic.hpp"
#include "ferrers/csf.hpp"
#include "ferrers/oracle.hpp"
#include "ferrers/trees.hpp"

using namespace ferrers;

namespace {

ABWord staircase_word(int m) {
  std::string letters;
  for (int i = 0; i < m; ++i) letters += "ba";
  return ABWord::parse(letters);
}

void BM_SpanningTreeCount(benchmark::State& state) {
  std::vector<int> parts;
  for (int i = static_cast<int>(state.range(0)); i >= 1; --i)
    parts.push_back(i);
  const FerrersGraph g{Partition(parts)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(spanning_tree_count(g));
  }
}
BENCHMARK(BM_SpanningTreeCount)->Arg(10)->Arg(50)->Arg(200);

void BM_ChromaticPolynomial(benchmark::State& state) {
  const ABWord w = staircase_word(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chromatic_polynomial(w));
  }
}
BENCHMARK(BM_ChromaticPolynomial)->Arg(6)->Arg(10)->Arg(14);

void BM_ChromaticPolynomialThreaded(benchmark::State& state) {
  const ABWord w = staircase_word(14);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        chromatic_polynomial(w, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ChromaticPolynomialThreaded)->Arg(1)->Arg(2)->Arg(4);

void BM_CsfPBasis(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const FerrersGraph g{Partition(std::vector<int>(side, side))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(csf_p_basis(g));
  }
}
BENCHMARK(BM_CsfPBasis)->Arg(3)->Arg(4);

void BM_MatrixTreeOracle(benchmark::State& state) {
  const FerrersGraph g{Partition({6, 5, 4, 3, 2})};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::spanning_count_matrix_tree(g));
  }
}
BENCHMARK(BM_MatrixTreeOracle);

}  // namespace

BENCHMARK_MAIN();
