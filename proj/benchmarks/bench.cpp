// Microbenchmarks for the kernels the oracle leans on: field arithmetic,
// polynomial products, Jacobian group law per curve model, enumeration,
// group structure and the pairings.

#include <benchmark/benchmark.h>

#include "g2t/curve.hpp"
#include "g2t/field.hpp"
#include "g2t/jacobian.hpp"
#include "g2t/oracle.hpp"
#include "g2t/pairing.hpp"
#include "g2t/poly.hpp"
#include "g2t/rng.hpp"
#include "g2t/weil.hpp"

using namespace g2t;

namespace {

Curve demo() {
  Field F3 = FieldCtx::get(3, 1);
  return curve_make(F3, Poly::from_ints(F3, {1, 0, 2, 1, 2, 0, 1}));
}

Curve quintic_f5() {
  Field F5 = FieldCtx::get(5, 1);
  return curve_make(F5, Poly::from_ints(F5, {1, 0, 0, 1, 0, 1}));
}

void BM_field_mul(benchmark::State& state) {
  Field k = FieldCtx::get(3, uint32_t(state.range(0)));
  Rng rng(42);
  Fe a = k->element_at(1 + rng.below(k->q() - 1));
  Fe b = k->element_at(1 + rng.below(k->q() - 1));
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_field_mul)->Arg(1)->Arg(4)->Arg(12);

void BM_field_inv(benchmark::State& state) {
  Field k = FieldCtx::get(3, uint32_t(state.range(0)));
  Rng rng(42);
  Fe a = k->element_at(1 + rng.below(k->q() - 1));
  for (auto _ : state) {
    Fe r = a.inv();
    benchmark::DoNotOptimize(r);
    a = r + k->one();
    if (a.is_zero()) a = k->one();
  }
}
BENCHMARK(BM_field_inv)->Arg(1)->Arg(4)->Arg(12);

void BM_poly_mul(benchmark::State& state) {
  Field k = FieldCtx::get(5, 3);
  Rng rng(7);
  auto rand_poly = [&](int deg) {
    std::vector<Fe> c;
    for (int i = 0; i < deg; ++i) c.push_back(k->element_at(rng.below(k->q())));
    c.push_back(k->one());
    return Poly(k, std::move(c));
  };
  Poly a = rand_poly(int(state.range(0)));
  Poly b = rand_poly(int(state.range(0)));
  for (auto _ : state) {
    Poly r = a * b;
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_poly_mul)->Arg(5)->Arg(20);

void BM_poly_gcd(benchmark::State& state) {
  Field k = FieldCtx::get(5, 3);
  Rng rng(7);
  std::vector<Fe> c;
  for (int i = 0; i < 12; ++i) c.push_back(k->element_at(rng.below(k->q())));
  c.push_back(k->one());
  Poly a(k, c);
  Poly b = a.derivative();
  for (auto _ : state) {
    Poly g = Poly::gcd(a, b);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_poly_gcd);

void bench_jac_add(benchmark::State& state, const Curve& c) {
  Jac J = JacCtx::make(c);
  Rng rng(11);
  Div a = J->random(rng), b = J->random(rng);
  for (auto _ : state) {
    a = J->add(a, b);
    benchmark::DoNotOptimize(a);
  }
}

void BM_jac_add_quintic(benchmark::State& state) { bench_jac_add(state, quintic_f5()); }
BENCHMARK(BM_jac_add_quintic);

void BM_jac_add_split(benchmark::State& state) { bench_jac_add(state, demo()); }
BENCHMARK(BM_jac_add_split);

void BM_jac_add_split_f81(benchmark::State& state) {
  bench_jac_add(state, base_change(demo(), FieldCtx::get(3, 4)));
}
BENCHMARK(BM_jac_add_split_f81);

void BM_jac_scalar_mul(benchmark::State& state) {
  Jac J = JacCtx::make(base_change(demo(), FieldCtx::get(3, 4)));
  Rng rng(11);
  Div a = J->random(rng);
  mpz_class e = 12345;
  for (auto _ : state) {
    Div r = J->mul(a, e);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_jac_scalar_mul);

void BM_jac_enumerate(benchmark::State& state) {
  Jac J = JacCtx::make(base_change(demo(), FieldCtx::get(3, 2)));
  for (auto _ : state) {
    auto all = J->enumerate();
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_jac_enumerate);

void BM_group_structure(benchmark::State& state) {
  Jac J = JacCtx::make(base_change(demo(), FieldCtx::get(3, 2)));
  for (auto _ : state) {
    auto st = group_structure(J);
    benchmark::DoNotOptimize(st);
  }
}
BENCHMARK(BM_group_structure);

void BM_tate_pairing(benchmark::State& state) {
  Jac J = JacCtx::make(base_change(demo(), FieldCtx::get(3, 4)));
  Rng rng(13);
  TorsionBasis B = torsion_basis(J, 5625, 5, rng);
  const Div& x = B.basis[0];
  const Div& y = B.basis[1];
  for (auto _ : state) {
    Fe v = tate_pairing(J, x, y, 5, rng);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_tate_pairing);

void BM_weil_pairing(benchmark::State& state) {
  Jac J = JacCtx::make(base_change(demo(), FieldCtx::get(3, 4)));
  Rng rng(13);
  TorsionBasis B = torsion_basis(J, 5625, 5, rng);
  const Div& x = B.basis[0];
  const Div& y = B.basis[1];
  for (auto _ : state) {
    Fe v = weil_pairing(J, x, y, 5, rng);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_weil_pairing);

void BM_count_points(benchmark::State& state) {
  Curve c = demo();
  for (auto _ : state) {
    mpz_class n = count_points(c, 2);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_count_points);

void BM_search_curves(benchmark::State& state) {
  Field F3 = FieldCtx::get(3, 1);
  for (auto _ : state) {
    auto v = search_curves(F3, 2, 7, 0, 1);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_search_curves);

}  // namespace

BENCHMARK_MAIN();
