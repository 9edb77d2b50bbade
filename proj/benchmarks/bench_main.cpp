#include <benchmark/benchmark.h>

#include "heartglue/bondal.hpp"
#include "heartglue/yoneda.hpp"

using namespace heartglue;

namespace {

AlgebraPtr kronecker(int arrows) {
  Quiver q{2, {}};
  for (int k = 0; k < arrows; ++k) q.arrows.push_back(Arrow{"a" + std::to_string(k), 1, 2});
  return build_algebra(q, {});
}

AlgebraPtr linear(int n) {
  Quiver q{n, {}};
  for (int k = 1; k < n; ++k) q.arrows.push_back(Arrow{"a" + std::to_string(k), k, k + 1});
  return build_algebra(q, {});
}

std::vector<Cx> projectives(const AlgebraPtr& a) {
  std::vector<Cx> out;
  for (int i = 1; i <= a->vertices(); ++i) out.push_back(module_cx(projective(a, i)));
  return out;
}

void BM_ExtSimples(benchmark::State& st) {
  AlgebraPtr a = linear(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    std::size_t total = 0;
    for (int i = 1; i <= a->vertices(); ++i)
      for (int j = 1; j <= a->vertices(); ++j) total += ext_dim(simple(a, i), simple(a, j), 1);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ExtSimples)->Arg(3)->Arg(5)->Arg(8);

void BM_HomTable(benchmark::State& st) {
  AlgebraPtr a = kronecker(static_cast<int>(st.range(0)));
  auto es = projectives(a);
  for (auto _ : st) benchmark::DoNotOptimize(hom_table(es, symmetric_window(6)));
}
BENCHMARK(BM_HomTable)->Arg(2)->Arg(4)->Arg(8);

void BM_GluedTruncation(benchmark::State& st) {
  AlgebraPtr a = linear(static_cast<int>(st.range(0)));
  AisleSpec sp = iterated_gluing(projectives(a));
  Cx x = module_cx(simple(a, 2));
  for (auto _ : st) benchmark::DoNotOptimize(truncate_glued(x, sp));
}
BENCHMARK(BM_GluedTruncation)->Arg(3)->Arg(4)->Arg(5);

void BM_EndAlgebraPresentation(benchmark::State& st) {
  AlgebraPtr a = kronecker(static_cast<int>(st.range(0)));
  ExcSequence s = check_sequence(projectives(a), true, default_window(*a, 2));
  for (auto _ : st) benchmark::DoNotOptimize(quiver_presentation(end_algebra(s)));
}
BENCHMARK(BM_EndAlgebraPresentation)->Arg(2)->Arg(3)->Arg(5);

void BM_YonedaProduct(benchmark::State& st) {
  AlgebraPtr a = linear(static_cast<int>(st.range(0)));
  int n = a->vertices();
  DHomPtr s1 = derived_hom(module_cx(simple(a, 3)), module_cx(simple(a, 2)), 1);
  DHomPtr s2 = derived_hom(module_cx(simple(a, 2)), module_cx(simple(a, 1)), 1);
  YExt x = splice_from_class(basis_class(s1, 0)), y = splice_from_class(basis_class(s2, 0));
  for (auto _ : st) benchmark::DoNotOptimize(f_map(yoneda_product(x, y)));
  st.SetLabel("A" + std::to_string(n));
}
BENCHMARK(BM_YonedaProduct)->Arg(3)->Arg(5);

}  // namespace
BENCHMARK_MAIN();
