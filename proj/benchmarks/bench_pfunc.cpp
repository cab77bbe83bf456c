#include <benchmark/benchmark.h>

#include "tetralat/pfunc.hpp"
#include "tetralat/symfun.hpp"

using namespace tetralat;

static void bm_build_x_operator(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  VarId z = var("z"), q = var("q");
  for (auto _ : state) {
    for (int i = 0; i <= n; ++i) {
      auto op = build_x_operator(n, i, z, Model::q0, q);
      benchmark::DoNotOptimize(op);
    }
  }
}
BENCHMARK(bm_build_x_operator)->Arg(3)->Arg(5)->Arg(7);

static void bm_vacuum_expectation(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  VarId q = var("q");
  OperatorWord word;
  word.model = Model::q0;
  word.n = n;
  // a strictly decreasing three-letter word
  word.factors.push_back(XFactor{n, var("z1")});
  word.factors.push_back(XFactor{n - 1, var("z2")});
  word.factors.push_back(XFactor{n - 2, var("z3")});
  for (auto _ : state) {
    LaurentPoly v = vacuum_expectation(word, q);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bm_vacuum_expectation)->Arg(3)->Arg(4)->Arg(5);

static void bm_schur_bialternant(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<VarId> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(var_indexed("z", i));
  Partition lam{3, 2, 1};
  for (auto _ : state) {
    LaurentPoly s = schur_bialternant(lam, vars);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_schur_bialternant)->Arg(4)->Arg(5)->Arg(6);
