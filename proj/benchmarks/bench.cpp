#include <benchmark/benchmark.h>

#include "skewhad/autgroup.hpp"
#include "skewhad/hadamard.hpp"
#include "skewhad/scheme.hpp"
#include "skewhad/schurian.hpp"
#include "skewhad/triples.hpp"

using namespace skewhad;

namespace {

AssociationScheme doubled_from_paley(int q) {
    return doubled_scheme(scheme_from_skew_hadamard(paley_skew_hadamard(q)));
}

void BM_PaleyConstruction(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(paley_skew_hadamard(q));
}
BENCHMARK(BM_PaleyConstruction)->Arg(7)->Arg(19)->Arg(103)->Arg(1019);

void BM_SkewHadamardCheck(benchmark::State& state) {
    const SignMatrix h = doubling(doubling(paley_skew_hadamard(static_cast<int>(state.range(0)))));
    for (auto _ : state) benchmark::DoNotOptimize(is_skew_hadamard(h));
    state.SetComplexityN(h.order());
}
BENCHMARK(BM_SkewHadamardCheck)->Arg(19)->Arg(103)->Arg(251);

void BM_SchemeExtraction(benchmark::State& state) {
    const SignMatrix h = paley_skew_hadamard(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(scheme_from_skew_hadamard(h));
}
BENCHMARK(BM_SchemeExtraction)->Arg(19)->Arg(103)->Arg(251);

void BM_AxiomVerification(benchmark::State& state) {
    const AssociationScheme y = doubled_from_paley(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_scheme_axioms(y.relations()));
}
BENCHMARK(BM_AxiomVerification)->Arg(7)->Arg(19)->Arg(103);

void BM_NuEnumeration(benchmark::State& state) {
    const AssociationScheme y = doubled_from_paley(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nu_survey(y));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(y.order()) *
                            (y.order() - 1) * (y.order() - 2) / 6);
}
BENCHMARK(BM_NuEnumeration)->Arg(7)->Arg(11)->Arg(19)->Arg(103);

void BM_AutomorphismGroup(benchmark::State& state) {
    const AssociationScheme y = doubled_from_paley(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(y));
}
BENCHMARK(BM_AutomorphismGroup)->Arg(7)->Arg(11)->Arg(19);

void BM_GroupOrder(benchmark::State& state) {
    const PermutationGroup g = automorphism_group(doubled_from_paley(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(group_order(g));
}
BENCHMARK(BM_GroupOrder)->Arg(7)->Arg(19);

void BM_TheoremPipeline(benchmark::State& state) {
    const AssociationScheme x = scheme_from_skew_hadamard(paley_skew_hadamard(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        const TheoremReport r = verify_main_theorem(x);
        benchmark::DoNotOptimize(r.verified);
    }
}
BENCHMARK(BM_TheoremPipeline)->Arg(7)->Arg(11)->Arg(19)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
