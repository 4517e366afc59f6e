// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "cyclohecke/basicsets.hpp"

using namespace cyclohecke;

namespace {

const Dataset& dataset(const std::string& name) {
  static std::map<std::string, Dataset> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, load_dataset(std::string(CYCLOHECKE_BENCH_DATA_DIR) + "/" + name + ".json")).first;
  return it->second;
}

Specialization at(const Dataset& ds, const char* q) { return Specialization::from_q(parse_q_spec(q), ds.group.mu_order); }

Cyclotomic random_element(std::mt19937_64& rng, long n) {
  std::map<long, Rational> m;
  for (int t = 0; t < 6; ++t) m[static_cast<long>(rng() % static_cast<unsigned long>(n))] += Rational(static_cast<long>(rng() % 17) - 8);
  return Cyclotomic::from_exponents(n, m);
}

void BM_CyclotomicMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const long n = state.range(0);
  Cyclotomic a = random_element(rng, n), b = random_element(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul)->Arg(8)->Arg(24)->Arg(48);

void BM_CyclotomicInverse(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Cyclotomic a = random_element(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(8)->Arg(24)->Arg(48);

void BM_RealSign(benchmark::State& state) {
  Cyclotomic r = Cyclotomic::root(24, 1) + Cyclotomic::root(24, 23) - Cyclotomic(Rational(193185, 100000));
  for (auto _ : state) benchmark::DoNotOptimize(r.sign());
}
BENCHMARK(BM_RealSign);

void BM_LoadG12(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(load_dataset(std::string(CYCLOHECKE_BENCH_DATA_DIR) + "/G12.json"));
}
BENCHMARK(BM_LoadG12)->Unit(benchmark::kMillisecond);

void BM_Validate(benchmark::State& state) {
  const Dataset& ds = dataset("G12");
  for (auto _ : state) benchmark::DoNotOptimize(validate_dataset(ds));
}
BENCHMARK(BM_Validate)->Unit(benchmark::kMillisecond);

void BM_CriticalOrders(benchmark::State& state) {
  const Dataset& ds = dataset("G12");
  for (auto _ : state) benchmark::DoNotOptimize(critical_orders(ds));
}
BENCHMARK(BM_CriticalOrders)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state, const char* group, const char* q) {
  const Dataset& ds = dataset(group);
  auto sp = at(ds, q);
  for (auto _ : state) benchmark::DoNotOptimize(decomposition_matrix(ds, sp));
}
BENCHMARK_CAPTURE(BM_Decompose, G12_zeta8, "G12", "zeta8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decompose, G12_zeta24, "G12", "zeta24")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decompose, G12_zeta5, "G12", "zeta5")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decompose, G4_zeta6, "G4", "zeta6")->Unit(benchmark::kMillisecond);

void BM_ConjectureAudit(benchmark::State& state) {
  const Dataset& ds = dataset("G12");
  auto sp = at(ds, "zeta8");
  auto dm = decomposition_matrix(ds, sp);
  LaurentPoly P = lcm_P(ds);
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_audit(ds, dm, sp, P));
}
BENCHMARK(BM_ConjectureAudit)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
