// SPDX-License-Identifier: Apache-2.0
//
// risbeam command line: codes reflective surfaces for multi-beam targets,
// computes far-field patterns and metrics, and runs link-level scenario
// evaluations. File angles are degrees; everything internal is radians.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "risbeam/angles.hpp"
#include "risbeam/coding.hpp"
#include "risbeam/error.hpp"
#include "risbeam/farfield.hpp"
#include "risbeam/io.hpp"
#include "risbeam/scenario.hpp"
#include "risbeam/surface.hpp"

namespace {

using namespace risbeam;

struct GridArgs {
    int m_count = 24;
    int n_count = 24;
    double cell_size_wl = 1.0 / 3.0;
    double freq_ghz = 28.0;

    UnitCellGrid build() const { return build_grid(m_count, n_count, cell_size_wl, freq_ghz * 1e9); }
};

void add_grid_options(CLI::App* cmd, GridArgs& grid)
{
    cmd->add_option("--m-count", grid.m_count, "Cells along x");
    cmd->add_option("--n-count", grid.n_count, "Cells along y");
    cmd->add_option("--cell-size-wl", grid.cell_size_wl, "Cell pitch in wavelengths");
    cmd->add_option("--freq-ghz", grid.freq_ghz, "Carrier frequency in GHz");
}

PhaseProfile code_targets(const UnitCellGrid& grid, const std::vector<BeamTarget>& targets,
                          const std::string& method, int* destructive_out)
{
    if (method == "sdm")
        return sdm_partition_profile(grid, targets, PartitionAxis::row);
    ComplexProfile full = superpose(grid, targets);
    if (destructive_out) {
        int destructive = 0;
        for (double a : full.amplitude.storage())
            if (a < 1e-12)
                ++destructive;
        *destructive_out = destructive;
    }
    return PhaseProfile(grid, std::move(full.phase));
}

int run_code(const std::string& targets_path, const GridArgs& grid_args,
             const std::string& method, int n_states, const std::string& out,
             const std::string& format, const std::string& profile_out)
{
    const UnitCellGrid grid = grid_args.build();
    const std::vector<BeamTarget> targets = load_targets_json(targets_path);
    int destructive = 0;
    const PhaseProfile profile = code_targets(grid, targets, method, &destructive);
    const StateCodebook codebook = canonical_codebook(n_states);
    const QuantizedProfile quantized = quantize_profile(profile, codebook);

    if (format == "json")
        write_state_matrix_json(out, quantized.states, n_states);
    else
        write_state_matrix_csv(out, quantized.states);
    if (!profile_out.empty())
        write_phase_profile_csv(profile_out, quantized.profile);

    std::printf("coded %d beam(s) with %d states; destructive cells: %d\n",
                static_cast<int>(targets.size()), n_states, destructive);
    std::printf("state matrix: %s\n", out.c_str());
    return 0;
}

int run_pattern(const std::string& targets_path, const std::string& profile_path,
                const GridArgs& grid_args, const std::string& method, int n_states,
                double angle_res_deg, double efficiency, const std::string& out)
{
    const UnitCellGrid grid = grid_args.build();
    const AngleGrid angles = AngleGrid::uniform_deg(angle_res_deg);

    std::optional<PhaseProfile> phase;
    std::optional<ComplexProfile> amp_phs;
    int beam_count = 1;
    if (!profile_path.empty()) {
        phase = load_phase_profile_csv(profile_path, grid);
    } else {
        const std::vector<BeamTarget> targets = load_targets_json(targets_path);
        beam_count = static_cast<int>(targets.size());
        if (method == "amp_phs") {
            ComplexProfile full = superpose(grid, targets);
            if (n_states > 0) {
                auto q = quantize_profile(PhaseProfile(grid, full.phase),
                                          canonical_codebook(n_states));
                amp_phs = ComplexProfile(grid, full.amplitude, q.profile.phase);
            } else {
                amp_phs = std::move(full);
            }
        } else {
            PhaseProfile coded = code_targets(grid, targets, method, nullptr);
            phase = (n_states > 0)
                        ? quantize_profile(coded, canonical_codebook(n_states)).profile
                        : std::move(coded);
        }
    }

    const Pattern pattern =
        amp_phs ? radiation_pattern(*amp_phs, angles) : radiation_pattern(*phase, angles);
    const double amp_loss = amp_phs ? amplitude_loss_db(*amp_phs) : 0.0;
    const PatternMetrics metrics = pattern_metrics(pattern, beam_count, efficiency, amp_loss);

    write_pattern_csv(out + ".pattern.csv", pattern);
    write_metrics_json(out + ".metrics.json", metrics);
    std::printf("pattern: %s.pattern.csv\nmetrics: %s.metrics.json\n", out.c_str(), out.c_str());
    std::printf("directivity_dbi=%.3f realized_gain_dbi=%.3f specular_db=%.3f\n",
                metrics.directivity_dbi, metrics.realized_gain_dbi, metrics.specular_level_db);
    return 0;
}

Scenario resolve_scenario(const std::string& name_or_path)
{
    if (name_or_path == "indoor")
        return build_indoor();
    if (name_or_path == "umi")
        return build_umi();
    return load_scenario_json(name_or_path);
}

std::vector<CodingMethod> parse_methods(const std::string& list)
{
    std::vector<CodingMethod> methods;
    std::string token;
    std::stringstream in(list);
    while (std::getline(in, token, ','))
        if (!token.empty())
            methods.push_back(coding_method_from_string(token));
    if (methods.empty())
        throw ValidationError("no coding methods given");
    return methods;
}

int run_scenario(const std::string& scen, const std::string& method, int k, double offset,
                 std::uint64_t seed, int fading_drops, bool split_bandwidth,
                 double angle_res_deg, const std::string& out)
{
    Scenario scenario = resolve_scenario(scen);
    if (split_bandwidth)
        scenario.bandwidth_mode = BandwidthMode::equal_split;
    EvalOptions options;
    options.seed = seed;
    options.fading_drops = fading_drops;
    options.angle_resolution_deg = angle_res_deg;
    ThroughputReport report =
        evaluate(scenario, coding_method_from_string(method), k, offset, options);
    write_report_csv(out, {report});
    std::printf("total_throughput_gbps=%.6f (%s, K=%d, offset=%g m)\n",
                report.total_throughput_bps / 1e9, method.c_str(), k, offset);
    std::printf("report: %s\n", out.c_str());
    return 0;
}

int run_sweep(const std::string& scen, const std::string& methods_list, int k_min, int k_max,
              double offset_start, double offset_stop, double offset_step, std::uint64_t seed,
              int fading_drops, bool split_bandwidth, double angle_res_deg,
              const std::string& out)
{
    Scenario scenario = resolve_scenario(scen);
    if (split_bandwidth)
        scenario.bandwidth_mode = BandwidthMode::equal_split;
    if (k_min < 1 || k_max < k_min)
        throw ValidationError("sweep: need 1 <= k-min <= k-max");
    if (offset_step <= 0.0 || offset_stop < offset_start)
        throw ValidationError("sweep: bad offset range");
    std::vector<int> ks;
    for (int k = k_min; k <= k_max; ++k)
        ks.push_back(k);
    std::vector<double> offsets;
    for (double o = offset_start; o <= offset_stop + 1e-9; o += offset_step)
        offsets.push_back(o);
    EvalOptions options;
    options.seed = seed;
    options.fading_drops = fading_drops;
    options.angle_resolution_deg = angle_res_deg;
    const auto table = sweep(scenario, parse_methods(methods_list), ks, offsets, options);
    write_report_csv(out, table);
    std::printf("%zu sweep cells -> %s\n", table.size(), out.c_str());
    return 0;
}

int run_tdm(int groups, double ugd_us, double reconfig_us, double budget_ms)
{
    const TdmBudget budget(groups, ugd_us * 1e-6, reconfig_us * 1e-6);
    const double sl_s = tdm_subframe_length(budget);
    const bool ok = sl_s <= budget_ms * 1e-3 + 1e-15;
    std::printf("subframe_length_ms=%.6f\n", sl_s * 1e3);
    std::printf("budget_ms=%.6f\n", budget_ms);
    std::printf("status=%s\n", ok ? "OK" : "EXCEEDED");
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"risbeam: multi-beam surface coding and link evaluation"};
    app.require_subcommand(1);

    std::string out = "out";
    std::string format = "csv";
    std::uint64_t seed = 0;
    double angle_res_deg = 0.5;
    bool no_fading = false;
    app.add_option("--out", out, "Output path (or prefix for pattern)")->capture_default_str();
    app.add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", seed, "Random seed for fading draws");
    app.add_option("--angle-res-deg", angle_res_deg, "Angle grid resolution in degrees");
    app.add_flag("--no-fading", no_fading, "Force fading off (the default)");

    // code
    auto* code = app.add_subcommand("code", "Quantized state matrix for a target list");
    GridArgs code_grid;
    std::string code_targets_path, code_method = "phase_only", code_profile_out;
    int code_states = 4;
    code->add_option("--targets", code_targets_path, "Target list JSON")->required();
    add_grid_options(code, code_grid);
    code->add_option("--method", code_method, "phase_only | amp_phs | sdm")
        ->check(CLI::IsMember({"phase_only", "amp_phs", "sdm"}));
    code->add_option("--states", code_states, "Codebook size N_s");
    code->add_option("--profile-out", code_profile_out, "Also export the quantized phase CSV");

    // pattern
    auto* pattern = app.add_subcommand("pattern", "Far-field pattern and metrics");
    GridArgs pattern_grid;
    std::string pattern_targets, pattern_profile, pattern_method = "phase_only";
    int pattern_states = 4;
    double pattern_efficiency = 0.9;
    auto* tgt_opt = pattern->add_option("--targets", pattern_targets, "Target list JSON");
    auto* prof_opt =
        pattern->add_option("--profile", pattern_profile, "Phase profile CSV (radians)");
    tgt_opt->excludes(prof_opt);
    add_grid_options(pattern, pattern_grid);
    pattern->add_option("--method", pattern_method, "phase_only | amp_phs | sdm")
        ->check(CLI::IsMember({"phase_only", "amp_phs", "sdm"}));
    pattern->add_option("--states", pattern_states, "Codebook size (0 = continuous)");
    pattern->add_option("--efficiency", pattern_efficiency, "Surface efficiency");

    // scenario
    auto* scen = app.add_subcommand("scenario", "Throughput report for one configuration");
    std::string scen_file = "indoor", scen_method = "phase_only";
    int scen_k = 1, fading_drops = 0;
    double scen_offset = 0.0;
    bool split_bandwidth = false;
    scen->add_option("--scenario", scen_file, "Scenario JSON, or builtin 'indoor'/'umi'");
    scen->add_option("--method", scen_method, "phase_only | amp_phs | sdm");
    scen->add_option("-k,--ue-count", scen_k, "Number of UEs");
    scen->add_option("--offset-m", scen_offset, "Extra UE distance from the surface");
    scen->add_option("--fading-drops", fading_drops, "Monte-Carlo fading draws (0 = off)");
    scen->add_flag("--split-bandwidth", split_bandwidth, "Equal bandwidth split across UEs");

    // sweep
    auto* sw = app.add_subcommand("sweep", "Cartesian sweep over methods, K and offsets");
    std::string sweep_file = "indoor", sweep_methods = "phase_only,amp_phs";
    int k_min = 1, k_max = 8, sweep_drops = 0;
    double off_start = 0.0, off_stop = 0.0, off_step = 1.0;
    bool sweep_split = false;
    sw->add_option("--scenario", sweep_file, "Scenario JSON, or builtin 'indoor'/'umi'");
    sw->add_option("--methods", sweep_methods, "Comma list of coding methods");
    sw->add_option("--k-min", k_min, "Smallest UE count");
    sw->add_option("--k-max", k_max, "Largest UE count");
    sw->add_option("--offset-start", off_start, "First offset in meters");
    sw->add_option("--offset-stop", off_stop, "Last offset in meters");
    sw->add_option("--offset-step", off_step, "Offset step in meters");
    sw->add_option("--fading-drops", sweep_drops, "Monte-Carlo fading draws (0 = off)");
    sw->add_flag("--split-bandwidth", sweep_split, "Equal bandwidth split across UEs");

    // tdm
    auto* tdm = app.add_subcommand("tdm", "Time-division subframe length calculator");
    int tdm_groups = 1;
    double ugd_us = 100.0, reconfig_us = 0.0, budget_ms = 1.0;
    tdm->add_option("--groups", tdm_groups, "Number of user groups N")->required();
    tdm->add_option("--ugd-us", ugd_us, "User group delay in microseconds")->required();
    tdm->add_option("--reconfig-us", reconfig_us, "Reconfiguration time in microseconds");
    tdm->add_option("--budget-ms", budget_ms, "Latency budget to check against");

    try {
        app.parse(argc, argv);
        if (no_fading)
            fading_drops = sweep_drops = 0;

        if (code->parsed())
            return run_code(code_targets_path, code_grid, code_method, code_states, out, format,
                            code_profile_out);
        if (pattern->parsed()) {
            if (pattern_targets.empty() && pattern_profile.empty())
                throw ValidationError("pattern: need --targets or --profile");
            return run_pattern(pattern_targets, pattern_profile, pattern_grid, pattern_method,
                               pattern_states, angle_res_deg, pattern_efficiency, out);
        }
        if (scen->parsed())
            return run_scenario(scen_file, scen_method, scen_k, scen_offset, seed, fading_drops,
                                split_bandwidth, angle_res_deg, out);
        if (sw->parsed())
            return run_sweep(sweep_file, sweep_methods, k_min, k_max, off_start, off_stop,
                             off_step, seed, sweep_drops, sweep_split, angle_res_deg, out);
        if (tdm->parsed())
            return run_tdm(tdm_groups, ugd_us, reconfig_us, budget_ms);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return (code == 0) ? 0 : 2; // bad flags are validation failures
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
