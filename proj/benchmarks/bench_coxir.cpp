#include <benchmark/benchmark.h>

#include <coxir/affine.hpp>
#include <coxir/analysis.hpp>
#include <coxir/cell.hpp>
#include <coxir/dihedral.hpp>
#include <coxir/ir.hpp>

using namespace coxir;

namespace {

static void BM_AffineDeterminant(benchmark::State& state) {
  const AffineAnSpec spec{static_cast<int>(state.range(0)), Complex(2, 0)};
  const IRDatum datum = affine_datum(spec);
  for (auto _ : state) benchmark::DoNotOptimize(det_a(datum));
}
BENCHMARK(BM_AffineDeterminant)->Arg(4)->Arg(8)->Arg(16);

static void BM_BuildAffine(benchmark::State& state) {
  const IRDatum datum = affine_datum(AffineAnSpec{static_cast<int>(state.range(0)), Complex(2, 0)});
  for (auto _ : state) benchmark::DoNotOptimize(build(datum));
}
BENCHMARK(BM_BuildAffine)->Arg(4)->Arg(8)->Arg(16);

static void BM_RelationVerify(benchmark::State& state) {
  const IRDatum datum = affine_datum(AffineAnSpec{static_cast<int>(state.range(0)), Complex(2, 0)});
  const Representation rep = build(datum);
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(rep, datum.system()));
}
BENCHMARK(BM_RelationVerify)->Arg(4)->Arg(8);

static void BM_CommutantDimension(benchmark::State& state) {
  const IRDatum datum = affine_datum(AffineAnSpec{static_cast<int>(state.range(0)), Complex(2, 0)});
  const Representation rep = build(datum);
  for (auto _ : state) benchmark::DoNotOptimize(commutant_dimension(rep));
}
BENCHMARK(BM_CommutantDimension)->Arg(4)->Arg(6);

static void BM_CellApply(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const CellElement elem = cell_element(BondOrder::finite(m), "r", "t");
  const auto pair = matrices(DihedralRepSpec::rho(m, 1));
  for (auto _ : state) benchmark::DoNotOptimize(apply_cell(elem, pair.r, pair.t));
}
BENCHMARK(BM_CellApply)->Arg(6)->Arg(12);

// The rule-(2) arithmetic search is the only part with a nontrivial constant:
// it scans coprime pairs up to m = 1000 when z matches nothing.
static void BM_TildeFreeZWorstCase(benchmark::State& state) {
  CoxeterSystem sys({"r", "t"}, {{"r", "t", BondOrder::infinite()}});
  IRDatum datum{sys};
  datum.set_bond_param(0, 1, BondParameter::free_z(Complex(3.99, 0)));
  for (auto _ : state) benchmark::DoNotOptimize(tilde_system(datum));
}
BENCHMARK(BM_TildeFreeZWorstCase);

}  // namespace

BENCHMARK_MAIN();
