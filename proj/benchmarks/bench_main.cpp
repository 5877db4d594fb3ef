#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "homzero/certify.hpp"
#include "homzero/f2_module.hpp"
#include "homzero/families.hpp"
#include "homzero/galois.hpp"
#include "homzero/niceness.hpp"
#include "homzero/numeric.hpp"
#include "homzero/padic.hpp"
#include "homzero/perm_group.hpp"
#include "homzero/poly_mod_p.hpp"
#include "homzero/poly_rat.hpp"

namespace {

using homzero::Rational;
using homzero::poly::PolyRat;

PolyRat trinomial(int n) {
  std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = -1;
  c[1] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  return PolyRat::from_integers(c);
}

PolyRat dense_poly(int n) {
  std::vector<long> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = (i % 2 == 0 ? i + 1 : -(i + 1));
  c[static_cast<std::size_t>(n)] = 1;
  return PolyRat::from_integers(c);
}

PolyRat truncated_exp(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(i)] = Rational(1) / Rational(homzero::factorial(i));
  }
  return PolyRat(c);
}

homzero::poly::PolyModP squarefree_mod7(int deg) {
  for (std::int64_t k = 1; k < 7; ++k) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg) + 1, 0);
    c[0] = k;
    c[1] = 1;
    c[static_cast<std::size_t>(deg)] = 1;
    homzero::poly::PolyModP f(7, c);
    if (homzero::poly::is_squarefree(f)) return f;
  }
  throw std::logic_error("no squarefree shift found");
}

void BM_Discriminant(benchmark::State& state) {
  auto f = dense_poly(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homzero::poly::discriminant(f));
}
BENCHMARK(BM_Discriminant)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_DistinctDegreeFactorization(benchmark::State& state) {
  auto f = squarefree_mod7(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homzero::poly::ddf_degrees(f));
}
BENCHMARK(BM_DistinctDegreeFactorization)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_GroupOrderSymmetric(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = homzero::grp::symmetric_group(n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_GroupOrderSymmetric)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_GroupOrderProjective(benchmark::State& state) {
  long q = state.range(0);
  for (auto _ : state) {
    auto g = homzero::grp::projective_special_group(2, q);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_GroupOrderProjective)->Arg(11)->Arg(31)->Arg(61)->Unit(benchmark::kMillisecond);

void BM_HeartSimplicity(benchmark::State& state) {
  auto m = homzero::f2::heart_module(homzero::grp::symmetric_group(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(homzero::f2::simplicity(m));
}
BENCHMARK(BM_HeartSimplicity)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMicrosecond);

void BM_NicenessProjective(benchmark::State& state) {
  long q = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        homzero::f2::classify_niceness(homzero::grp::projective_special_group(2, q)));
  }
}
BENCHMARK(BM_NicenessProjective)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_SymmetricGaloisProof(benchmark::State& state) {
  auto f = trinomial(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(homzero::galois::identify_sn_an(f, 100));
  }
}
BENCHMARK(BM_SymmetricGaloisProof)->Arg(5)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_NewtonPolygon(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto f = truncated_exp(n);
  long p = homzero::padic::bertrand_prime(n);
  for (auto _ : state) benchmark::DoNotOptimize(homzero::padic::newton_polygon(f, p));
}
BENCHMARK(BM_NewtonPolygon)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_CertifyPipeline(benchmark::State& state) {
  auto f = trinomial(5);
  auto h = trinomial(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(homzero::certify::certify_hom_zero(f, h));
  }
}
BENCHMARK(BM_CertifyPipeline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
