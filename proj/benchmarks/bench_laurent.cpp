#include <benchmark/benchmark.h>

#include <random>

#include "tetralat/laurent.hpp"

using namespace tetralat;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int nvars, int terms) {
  std::vector<VarId> vars;
  for (int i = 1; i <= nvars; ++i) vars.push_back(var_indexed("b", i));
  LaurentPoly p(0);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (VarId v : vars) {
      int e = static_cast<int>(rng() % 7) - 3;
      if (e != 0) m.emplace_back(v, e);
    }
    p += LaurentPoly::monomial(m, Rational(static_cast<long>(rng() % 200) - 100));
  }
  return p;
}

}  // namespace

static void bm_laurent_mul(benchmark::State& state) {
  std::mt19937_64 rng(5);
  LaurentPoly a = random_poly(rng, 4, static_cast<int>(state.range(0)));
  LaurentPoly b = random_poly(rng, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    LaurentPoly c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_laurent_mul)->Arg(8)->Arg(32)->Arg(128);

static void bm_laurent_div_exact(benchmark::State& state) {
  std::mt19937_64 rng(6);
  LaurentPoly a = random_poly(rng, 3, static_cast<int>(state.range(0)));
  LaurentPoly b = random_poly(rng, 3, 6);
  LaurentPoly prod = a * b;
  for (auto _ : state) {
    LaurentPoly q = prod.div_exact(b);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(bm_laurent_div_exact)->Arg(8)->Arg(24);

static void bm_laurent_parse_roundtrip(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::string text = random_poly(rng, 4, 64).to_string();
  for (auto _ : state) {
    LaurentPoly p = LaurentPoly::parse(text);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(bm_laurent_parse_roundtrip);
