// Exact matrix products: the OpenMP row-parallel kernel against the serial
// reference, over ℚ (GMP rationals) and over a word-sized prime field, on
// the operand shapes the library multiplies most (split-form matrices and
// their idempotents).

#include <benchmark/benchmark.h>

#include <random>

#include "leonard/matrix.hpp"

using leonard::FieldSpec;
using leonard::Matrix;
using leonard::Scalar;

namespace {

Matrix random_matrix(FieldSpec f, std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  Matrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = f.is_rational() ? Scalar(f, num(rng)) / Scalar(f, den(rng)) : Scalar(f, num(rng));
    }
  }
  return m;
}

template <Matrix (*Mul)(const Matrix&, const Matrix&)>
void run(benchmark::State& state, FieldSpec f) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(f, n, 1), b = random_matrix(f, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
  state.SetComplexityN(state.range(0));
}

void BM_SerialRational(benchmark::State& s) { run<leonard::mat_mul_serial>(s, FieldSpec::rational()); }
void BM_ParallelRational(benchmark::State& s) { run<leonard::mat_mul>(s, FieldSpec::rational()); }
void BM_SerialPrime(benchmark::State& s) { run<leonard::mat_mul_serial>(s, FieldSpec::prime(1000003)); }
void BM_ParallelPrime(benchmark::State& s) { run<leonard::mat_mul>(s, FieldSpec::prime(1000003)); }

}  // namespace

BENCHMARK(BM_SerialRational)->RangeMultiplier(2)->Range(8, 64)->UseRealTime()->Complexity();
BENCHMARK(BM_ParallelRational)->RangeMultiplier(2)->Range(8, 64)->UseRealTime()->Complexity();
BENCHMARK(BM_SerialPrime)->RangeMultiplier(2)->Range(8, 64)->UseRealTime()->Complexity();
BENCHMARK(BM_ParallelPrime)->RangeMultiplier(2)->Range(8, 64)->UseRealTime()->Complexity();

BENCHMARK_MAIN();
