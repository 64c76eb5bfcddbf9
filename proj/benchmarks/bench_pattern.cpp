// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "risbeam/angles.hpp"
#include "risbeam/coding.hpp"
#include "risbeam/farfield.hpp"
#include "risbeam/scenario.hpp"
#include "risbeam/surface.hpp"

using namespace risbeam;

namespace {

const UnitCellGrid kGrid = build_grid(24, 24, 1.0 / 3.0, 28e9);

std::vector<BeamTarget> fan(int k)
{
    std::vector<BeamTarget> targets;
    for (int i = 0; i < k; ++i)
        targets.emplace_back(deg_to_rad(45.0), wrap_two_pi(deg_to_rad(95.0 * i)));
    return targets;
}

void BM_SingleBeamProfile(benchmark::State& state)
{
    const BeamTarget target(deg_to_rad(45), deg_to_rad(45));
    for (auto _ : state)
        benchmark::DoNotOptimize(single_beam_profile(kGrid, target));
}
BENCHMARK(BM_SingleBeamProfile);

void BM_Superpose(benchmark::State& state)
{
    const auto targets = fan(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(superpose(kGrid, targets));
}
BENCHMARK(BM_Superpose)->Arg(2)->Arg(4)->Arg(8);

void BM_Quantize(benchmark::State& state)
{
    const PhaseProfile profile = phase_only_profile(kGrid, fan(4));
    const StateCodebook cb = canonical_codebook(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(quantize_profile(profile, cb));
}
BENCHMARK(BM_Quantize)->Arg(4)->Arg(8);

void BM_RadiationPattern(benchmark::State& state)
{
    const PhaseProfile profile = phase_only_profile(kGrid, fan(4));
    const AngleGrid angles = AngleGrid::uniform_deg(0.1 * static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(radiation_pattern(profile, angles));
    state.SetLabel(std::to_string(angles.theta_rad.size()) + "x" +
                   std::to_string(angles.phi_rad.size()) + " angles");
}
BENCHMARK(BM_RadiationPattern)->Arg(20)->Arg(10)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_FieldAt(benchmark::State& state)
{
    const PhaseProfile profile = phase_only_profile(kGrid, fan(4));
    for (auto _ : state)
        benchmark::DoNotOptimize(field_at(profile, deg_to_rad(45), deg_to_rad(45)));
}
BENCHMARK(BM_FieldAt);

void BM_EvaluateIndoor(benchmark::State& state)
{
    const Scenario scenario = build_indoor();
    EvalOptions options;
    options.angle_resolution_deg = 1.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            evaluate(scenario, CodingMethod::phase_only, static_cast<int>(state.range(0)), 0.0,
                     options));
}
BENCHMARK(BM_EvaluateIndoor)->Arg(1)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
