#include <benchmark/benchmark.h>

#include "fondltl/automaton.hpp"
#include "fondltl/compiler.hpp"
#include "fondltl/fond.hpp"
#include "fondltl/kernels/oracle.hpp"
#include "fondltl/pddl.hpp"
#include "fondltl/temporal.hpp"

#include <fstream>
#include <sstream>

using namespace fondltl;

namespace {

const char* const kFormula = "G(a -> F(b)) & (c R (a | b))";

std::string read(const std::string& rel) {
    std::ifstream in(std::string(FONDLTL_BENCH_DATA) + "/" + rel);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void BM_OracleSerial(benchmark::State& state) {
    const auto f = temporal::parse_formula(kFormula);
    const auto d = automaton::formula_to_dfa(f);
    const auto len = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::count_mismatches_serial(f, d, len));
}

void BM_OracleParallel(benchmark::State& state) {
    const auto f = temporal::parse_formula(kFormula);
    const auto d = automaton::formula_to_dfa(f);
    const auto len = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::count_mismatches_parallel(f, d, len));
}

compiler::CompilationResult compiled_task() {
    return compiler::compile(pddl::parse_domain(read("triangle-tire.pddl")),
                             pddl::parse_problem(read("triangle-tire-1-l23.pddl")),
                             temporal::parse_formula("vehicleat(l13) & O(vehicleat(l23))"));
}

void BM_Ground(benchmark::State& state) {
    const auto r = compiled_task();
    fond::GroundOptions o;
    o.parallel = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(fond::ground(r.new_domain, r.new_problem, o));
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Ground)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond)->UseRealTime();

BENCHMARK_MAIN();
