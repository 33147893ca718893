#include <benchmark/benchmark.h>

#include "rlk/classify.hpp"

using namespace rlk;

namespace {

void BM_ReynoldsScan(benchmark::State& state) {
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
  const FieldSpec fp = FieldSpec::prime(p);
  const Value lam = Value::of(fp, 1);
  for (auto _ : state) {
    auto report = enumerate_reynolds(AlgebraId::A1, p, lam);
    benchmark::DoNotOptimize(report.solutions.size());
  }
  state.SetComplexityN(static_cast<std::int64_t>(p) * p * p * p);
}
BENCHMARK(BM_ReynoldsScan)->Arg(3)->Arg(5)->Arg(7)->Arg(11)->Complexity();

void BM_PairScan(benchmark::State& state) {
  const FieldSpec f3 = FieldSpec::prime(3);
  for (auto _ : state) {
    auto report = enumerate_triangular_pairs(RCase::A1Sym, Value::zero(f3), Value::one(f3), 3,
                                             Value::of(f3, 1));
    benchmark::DoNotOptimize(report.solutions.size());
  }
}
BENCHMARK(BM_PairScan);

void BM_BundleCheckF5(benchmark::State& state) {
  const FieldSpec f5 = FieldSpec::prime(5);
  const LeibnizAlgebra alg = builtin_algebra(AlgebraId::A1, f5);
  const Matrix r = rcase_matrix(RCase::A1Sym, Value::of(f5, 1), Value::of(f5, 1));
  const Tensor3 delta = coboundary_coproduct(alg, r);
  Matrix rop(f5, 2, 2), s(f5, 2, 2);
  rop.at(0, 0) = rop.at(0, 1) = Value::one(f5);
  s.at(0, 1) = Value::of(f5, 2);
  s.at(1, 1) = Value::one(f5);
  const Value lam = Value::of(f5, 1);
  for (auto _ : state) {
    auto rep = check_reynolds_bialgebra(alg, delta, lam, rop, s);
    benchmark::DoNotOptimize(rep.ok());
  }
}
BENCHMARK(BM_BundleCheckF5);

void BM_RationalDouble(benchmark::State& state) {
  const FieldSpec q = FieldSpec::rationals();
  const LeibnizAlgebra alg = builtin_algebra(AlgebraId::A2, q);
  const Matrix r = rcase_matrix(RCase::A2CaseI, Value::parse(q, "3/7"), Value::parse(q, "5/11"));
  const Tensor3 delta = coboundary_coproduct(alg, r);
  for (auto _ : state) {
    auto dd = build_double(alg, delta);
    benchmark::DoNotOptimize(dd.bracket.is_zero());
  }
}
BENCHMARK(BM_RationalDouble);

void BM_LeibnizCheckDim8(benchmark::State& state) {
  const FieldSpec f5 = FieldSpec::prime(5);
  const LeibnizAlgebra a1 = builtin_algebra(AlgebraId::A1, f5);
  const Matrix r = rcase_matrix(RCase::A1Sym, Value::zero(f5), Value::one(f5));
  const Tensor3 delta = coboundary_coproduct(a1, r);
  const DoubleData d4 = build_double(a1, delta);
  const LeibnizAlgebra dim4 = LeibnizAlgebra::create(f5, d4.bracket);
  const DoubleData d8 = build_double(dim4, Tensor3(f5, 4, 4, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_leibniz(d8.bracket).has_value());
  }
}
BENCHMARK(BM_LeibnizCheckDim8);

}  // namespace

BENCHMARK_MAIN();
