// Benchmarks for the hot paths: range enclosure, the cross predicate on
// neighborhood hulls, the subdivision loop, and the oracle.
#include <benchmark/benchmark.h>

#include "curvepair/oracle.hpp"
#include "curvepair/pairing.hpp"
#include "curvepair/subdivision.hpp"

using namespace curvepair;

namespace {

const CurvePair& circles() {
    static CurvePair pair(parse_polynomial("x^2 + y^2 - 4"),
                          parse_polynomial("(x-2)^2 + y^2 - 4"));
    return pair;
}

void BM_EvalInterval(benchmark::State& state) {
    auto p = parse_polynomial("3*x^4 - 2*x^2*y + 7*y^3 - x*y^2 + 5");
    IBox box{Interval(Dyadic(mpz_class(-3), -2), Dyadic(mpz_class(5), -1)),
             Interval(Dyadic(mpz_class(1), -3), Dyadic(mpz_class(9), -2))};
    for (auto _ : state) benchmark::DoNotOptimize(eval_interval(p, box));
}
BENCHMARK(BM_EvalInterval);

void BM_CrossPredicate(benchmark::State& state) {
    IBox hull{Interval(Dyadic(mpz_class(1), -1), Dyadic(mpz_class(3), -1)),
              Interval(Dyadic(mpz_class(5), -2), Dyadic(mpz_class(7), -2))};
    for (auto _ : state) benchmark::DoNotOptimize(c1_cross(circles(), hull));
}
BENCHMARK(BM_CrossPredicate);

void BM_Subdivide(benchmark::State& state) {
    SubdivisionLimits lim;
    for (auto _ : state) {
        Partition part = subdivide(circles(), SquareRegion{-4, -4, 8}, lim);
        benchmark::DoNotOptimize(part.leaf_count());
    }
}
BENCHMARK(BM_Subdivide);

void BM_FullPipeline(benchmark::State& state) {
    SubdivisionLimits lim;
    for (auto _ : state) {
        Partition part = subdivide(circles(), SquareRegion{-4, -4, 8}, lim);
        balance(part, circles(), lim);
        verify_rule4(part, circles(), lim);
        auto af = assemble(circles().f, part);
        auto ag = assemble(circles().g, part);
        auto report = build_report(af, ag, part);
        benchmark::DoNotOptimize(report.total_crossings());
    }
}
BENCHMARK(BM_FullPipeline);

void BM_OracleCertify(benchmark::State& state) {
    for (auto _ : state) {
        auto roots = certify_intersections(circles(), RectRegion{-4, -4, 4, 4}, 5);
        benchmark::DoNotOptimize(roots.size());
    }
}
BENCHMARK(BM_OracleCertify);

}  // namespace

BENCHMARK_MAIN();
