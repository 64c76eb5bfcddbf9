// SPDX-License-Identifier: Apache-2.0

#include "risbeam/scenario.hpp"

#include <cmath>

#include "risbeam/angles.hpp"
#include "risbeam/coding.hpp"
#include "risbeam/error.hpp"

namespace risbeam {

std::string to_string(CodingMethod method)
{
    switch (method) {
    case CodingMethod::phase_only: return "phase_only";
    case CodingMethod::amp_phs: return "amp_phs";
    case CodingMethod::sdm: return "sdm";
    }
    return "unknown";
}

CodingMethod coding_method_from_string(const std::string& name)
{
    if (name == "phase_only") return CodingMethod::phase_only;
    if (name == "amp_phs") return CodingMethod::amp_phs;
    if (name == "sdm") return CodingMethod::sdm;
    throw ValidationError("unknown coding method: " + name);
}

void Scenario::validate() const
{
    if (kind == ScenarioKind::indoor) {
        if (mcbs.has_value())
            throw ValidationError("indoor scenario carries no macro cell");
    } else {
        if (!mcbs.has_value())
            throw ValidationError("UMi scenario requires exactly one macro cell");
        if (!mcbs_exponents.has_value())
            throw ValidationError("UMi scenario requires macro pathloss exponents");
        if (mcbs->bandwidth_hz <= 0.0 || mcbs->frequency_hz <= 0.0)
            throw ValidationError("macro cell needs positive frequency and bandwidth");
    }
    if (ues.distances_m.empty())
        throw ValidationError("scenario needs at least one UE");
    for (double d : ues.distances_m)
        if (d <= 0.0)
            throw ValidationError("UE distances must be positive");
    if (bs.bandwidth_hz <= 0.0 || bs.frequency_hz <= 0.0)
        throw ValidationError("BS/SCBS needs positive frequency and bandwidth");
    if (ris.efficiency <= 0.0 || ris.efficiency > 1.0)
        throw ValidationError("surface efficiency must lie in (0, 1]");
}

namespace {

const std::vector<double> kDefaultUeDistances = {5.0, 4.0, 3.0, 3.0, 4.0, 5.0, 6.0, 7.0};

UnitCellGrid make_ris_grid(const ScenarioOverrides& o, double frequency_hz)
{
    const int m = o.ris_m_count.value_or(24);
    const int n = o.ris_n_count.value_or(24);
    return build_grid(m, n, 1.0 / 3.0, frequency_hz);
}

void apply_common_overrides(Scenario& s, const ScenarioOverrides& o)
{
    if (o.efficiency)
        s.ris.efficiency = *o.efficiency;
    if (o.bs_bandwidth_hz)
        s.bs.bandwidth_hz = *o.bs_bandwidth_hz;
    if (o.mcbs_bandwidth_hz && s.mcbs)
        s.mcbs->bandwidth_hz = *o.mcbs_bandwidth_hz;
    if (o.ue_azimuth_span_deg)
        s.ues.azimuth_span_deg = *o.ue_azimuth_span_deg;
    if (o.ue_distances_m)
        s.ues.distances_m = *o.ue_distances_m;
    if (o.bandwidth_mode)
        s.bandwidth_mode = *o.bandwidth_mode;
    if (o.noise_figure_db)
        s.noise_figure_db = *o.noise_figure_db;
    s.validate();
}

} // namespace

Scenario build_indoor(const ScenarioOverrides& overrides)
{
    const double f = 28e9;
    Scenario s{
        .kind = ScenarioKind::indoor,
        .bs = RadioNode{{0.0, 0.0, 10.0}, 37.0, 30.0, 0.0, f, 400e6},
        .mcbs = std::nullopt,
        .ris = RisConfig{{10.0, 100.0, 5.0}, make_ris_grid(overrides, f),
                         canonical_codebook(overrides.n_states.value_or(4)), 0.9},
        .ues = UePlacement{kDefaultUeDistances, 0.0, 120.0},
        .sc_exponents = LinkExponents{1.7, 3.8},
        .mcbs_exponents = std::nullopt,
    };
    apply_common_overrides(s, overrides);
    return s;
}

Scenario build_umi(const ScenarioOverrides& overrides)
{
    const double f = 28e9;
    Scenario s{
        .kind = ScenarioKind::umi,
        .bs = RadioNode{{10.0, 2000.0, 10.0}, 37.0, 30.0, 0.0, f, 400e6},
        .mcbs = RadioNode{{0.0, 0.0, 25.0}, 49.0, 17.0, 0.0, 3.55e9, 100e6},
        .ris = RisConfig{{20.0, 2100.0, 5.0}, make_ris_grid(overrides, f),
                         canonical_codebook(overrides.n_states.value_or(4)), 0.9},
        .ues = UePlacement{kDefaultUeDistances, 0.0, 120.0},
        .sc_exponents = LinkExponents{2.1, 3.2},
        .mcbs_exponents = LinkExponents{2.0, 2.9},
    };
    apply_common_overrides(s, overrides);
    return s;
}

std::vector<UeGeometry> ue_geometries(const Scenario& scenario, int ue_count,
                                      double distance_offset_m)
{
    if (ue_count < 1 || ue_count > static_cast<int>(scenario.ues.distances_m.size()))
        throw ValidationError("ue_count must lie in [1, configured UE count]");
    if (distance_offset_m < 0.0)
        throw ValidationError("distance offset must be non-negative");

    // Even azimuth fan across the facing half-plane; a single UE sits at
    // broadside. The surface normal points along global +x, so a UE at fan
    // angle psi (same height as the surface) is seen at polar angle |psi|
    // with azimuth 0 (psi > 0) or pi (psi < 0) in the panel frame.
    const double span = deg_to_rad(scenario.ues.azimuth_span_deg);
    std::vector<UeGeometry> out;
    out.reserve(ue_count);
    for (int k = 0; k < ue_count; ++k) {
        const double psi = (ue_count == 1)
                               ? 0.0
                               : -span / 2.0 + span * k / (ue_count - 1);
        const double d = scenario.ues.distances_m[k] + distance_offset_m;
        UeGeometry g;
        g.index = k;
        g.theta_rad = std::fabs(psi);
        g.phi_rad = (psi < 0.0) ? std::numbers::pi : 0.0;
        g.distance_m = d;
        g.position = Position{scenario.ris.position.x_m + d * std::cos(psi),
                              scenario.ris.position.y_m + d * std::sin(psi),
                              scenario.ris.position.height_m};
        out.push_back(g);
    }
    return out;
}

namespace {

struct CodedSurface {
    std::optional<ComplexProfile> amp_phs; // set for the amp/phs method
    PhaseProfile phase;                    // quantized phases (all methods)
    double amplitude_loss_db = 0.0;
    int destructive_cells = 0;
};

CodedSurface code_surface(const Scenario& scenario, CodingMethod method,
                          const std::vector<UeGeometry>& ues)
{
    std::vector<BeamTarget> targets;
    targets.reserve(ues.size());
    for (const auto& u : ues)
        targets.emplace_back(u.theta_rad, u.phi_rad);

    const UnitCellGrid& grid = scenario.ris.grid;
    if (method == CodingMethod::sdm) {
        PhaseProfile profile = sdm_partition_profile(grid, targets, PartitionAxis::row);
        auto q = quantize_profile(profile, scenario.ris.codebook);
        return CodedSurface{std::nullopt, std::move(q.profile), 0.0, 0};
    }

    ComplexProfile full = superpose(grid, targets);
    int destructive = 0;
    for (double a : full.amplitude.storage())
        if (a < 1e-12)
            ++destructive;

    PhaseProfile phases(grid, full.phase);
    auto q = quantize_profile(phases, scenario.ris.codebook);
    if (method == CodingMethod::amp_phs) {
        double loss = 0.0;
        {
            double sum = 0.0;
            for (double a : full.amplitude.storage())
                sum += a * a;
            loss = 10.0 * std::log10(sum / static_cast<double>(full.amplitude.size()));
        }
        ComplexProfile coded(grid, full.amplitude, q.profile.phase);
        return CodedSurface{std::move(coded), std::move(q.profile), loss, destructive};
    }
    return CodedSurface{std::nullopt, std::move(q.profile), 0.0, destructive};
}

double beam_gain_dbi(const CodedSurface& surface, double power, double theta, double phi)
{
    const std::complex<double> e =
        surface.amp_phs ? field_at(*surface.amp_phs, theta, phi)
                        : field_at(surface.phase, theta, phi);
    const double lin = 4.0 * std::numbers::pi * std::norm(e) / power;
    const double db = (lin > 0.0) ? 10.0 * std::log10(lin) : -120.0;
    // Gain handed to the cascade excludes the surface efficiency (the budget
    // applies it once); the amplitude taper loss belongs to the surface.
    return db + surface.amplitude_loss_db;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b)
{
    return RandomStream::splitmix64(RandomStream::splitmix64(a) ^ b);
}

} // namespace

ThroughputReport evaluate(const Scenario& scenario, CodingMethod method, int ue_count,
                          double distance_offset_m, const EvalOptions& options)
{
    scenario.validate();
    const std::vector<UeGeometry> ues = ue_geometries(scenario, ue_count, distance_offset_m);
    const CodedSurface surface = code_surface(scenario, method, ues);

    const AngleGrid angles = AngleGrid::uniform_deg(options.angle_resolution_deg);
    const Pattern pattern = surface.amp_phs ? radiation_pattern(*surface.amp_phs, angles)
                                            : radiation_pattern(surface.phase, angles);
    const double power = radiated_power(pattern);
    if (power <= 0.0)
        throw NumericError("evaluate: coded surface radiates no power");

    const HopModel hops = (scenario.kind == ScenarioKind::indoor)
                              ? HopModel{HopModel::Kind::inh_los, 0.0}
                              : HopModel{HopModel::Kind::umi_ci, scenario.sc_exponents.los};
    const RisNode ris_node{scenario.ris.position};
    const double bs_share = (scenario.bandwidth_mode == BandwidthMode::equal_split)
                                ? scenario.bs.bandwidth_hz / ue_count
                                : scenario.bs.bandwidth_hz;

    ThroughputReport report;
    report.method = method;
    report.ue_count = ue_count;
    report.offset_m = distance_offset_m;
    report.meta.bandwidth_mode = scenario.bandwidth_mode;
    report.meta.bs_bandwidth_hz = scenario.bs.bandwidth_hz;
    report.meta.mcbs_bandwidth_hz = scenario.mcbs ? scenario.mcbs->bandwidth_hz : 0.0;
    report.meta.seed = options.seed;
    report.meta.fading_drops = options.fading_drops;

    for (const auto& ue : ues) {
        RadioNode ue_node;
        ue_node.position = ue.position;
        ue_node.rx_gain_dbi = scenario.ues.rx_gain_dbi;
        ue_node.frequency_hz = scenario.bs.frequency_hz;
        ue_node.bandwidth_hz = bs_share;

        UeResult result;
        result.index = ue.index;
        result.distance_m = ue.distance_m;
        result.beam_gain_dbi = beam_gain_dbi(surface, power, ue.theta_rad, ue.phi_rad);

        const LinkResult base =
            cascade_ris_link(scenario.bs, ris_node, ue_node, result.beam_gain_dbi,
                             scenario.ris.efficiency, hops, {}, scenario.noise_figure_db);

        // Macro direct path (UMi): CI model with the NLoS exponent.
        double mcbs_base_snr_db = 0.0;
        double mcbs_share = 0.0;
        if (scenario.kind == ScenarioKind::umi) {
            const RadioNode& mc = *scenario.mcbs;
            const double d_mc = distance_3d_m(mc.position, ue.position);
            const double pl =
                pathloss_umi_db(mc.frequency_hz, d_mc, scenario.mcbs_exponents->nlos);
            const double pr = link_budget_dbm(mc.tx_power_dbm, mc.tx_gain_dbi,
                                              scenario.ues.rx_gain_dbi, pl);
            mcbs_share = (scenario.bandwidth_mode == BandwidthMode::equal_split)
                             ? mc.bandwidth_hz / ue_count
                             : mc.bandwidth_hz;
            mcbs_base_snr_db =
                pr - noise_power_dbm(mcbs_share, -174.0, scenario.noise_figure_db);
        }

        // Optional unblocked direct BS/SCBS path, NLoS.
        double direct_base_snr_db = 0.0;
        if (!scenario.direct_path_blocked) {
            const double d = distance_3d_m(scenario.bs.position, ue.position);
            const double pl = (scenario.kind == ScenarioKind::indoor)
                                  ? pathloss_inh_nlos_db(scenario.bs.frequency_hz / 1e9, d)
                                  : pathloss_umi_db(scenario.bs.frequency_hz, d,
                                                    scenario.sc_exponents.nlos);
            const double pr = link_budget_dbm(scenario.bs.tx_power_dbm, scenario.bs.tx_gain_dbi,
                                              scenario.ues.rx_gain_dbi, pl);
            direct_base_snr_db = pr - base.noise_power_dbm;
        }

        result.ris_link = base;
        if (options.fading_drops <= 0) {
            result.mcbs_throughput_bps =
                (scenario.kind == ScenarioKind::umi)
                    ? shannon_throughput_bps(mcbs_share, mcbs_base_snr_db)
                    : 0.0;
            double direct = scenario.direct_path_blocked
                                ? 0.0
                                : shannon_throughput_bps(bs_share, direct_base_snr_db);
            result.throughput_bps = base.throughput_bps + result.mcbs_throughput_bps + direct;
        } else {
            // Monte-Carlo over fading draws; the cascade is affine in the
            // fading dB terms, so draws shift the deterministic budget.
            double sum_ris = 0.0, sum_mcbs = 0.0, sum_snr = 0.0, sum_direct = 0.0;
            const std::uint64_t ue_key = mix(options.seed, 0x5245 + ue.index);
            for (int t = 0; t < options.fading_drops; ++t) {
                RandomStream s1(mix(ue_key, 2 * t));
                RandomStream s2(mix(ue_key, 2 * t + 1));
                const FadingSpec los{FadingKind::los, scenario.ricean_k_db, 0};
                const double f_db = 10.0 * std::log10(fading_sample(los, s1)) +
                                    10.0 * std::log10(fading_sample(los, s2));
                const double snr = base.snr_db + f_db;
                sum_snr += snr;
                sum_ris += shannon_throughput_bps(bs_share, snr);
                if (scenario.kind == ScenarioKind::umi) {
                    RandomStream sm(mix(ue_key, 0x4d43u + 7919u * t));
                    const FadingSpec nlos{FadingKind::nlos, 0.0, 0};
                    const double fm_db = 10.0 * std::log10(fading_sample(nlos, sm));
                    sum_mcbs += shannon_throughput_bps(mcbs_share, mcbs_base_snr_db + fm_db);
                }
                if (!scenario.direct_path_blocked) {
                    RandomStream sd(mix(ue_key, 0x4449u + 104729u * t));
                    const FadingSpec nlos{FadingKind::nlos, 0.0, 0};
                    const double fd_db = 10.0 * std::log10(fading_sample(nlos, sd));
                    sum_direct += shannon_throughput_bps(bs_share, direct_base_snr_db + fd_db);
                }
            }
            const double inv = 1.0 / options.fading_drops;
            result.ris_link.snr_db = sum_snr * inv;
            result.ris_link.received_power_dbm = base.noise_power_dbm + sum_snr * inv;
            result.ris_link.throughput_bps = sum_ris * inv;
            result.mcbs_throughput_bps = sum_mcbs * inv;
            result.throughput_bps =
                result.ris_link.throughput_bps + result.mcbs_throughput_bps + sum_direct * inv;
        }
        report.ues.push_back(result);
    }

    double total = 0.0;
    for (const auto& r : report.ues)
        total += r.throughput_bps;
    report.total_throughput_bps = total;
    return report;
}

std::vector<ThroughputReport> sweep(const Scenario& scenario,
                                    const std::vector<CodingMethod>& methods,
                                    const std::vector<int>& ue_counts,
                                    const std::vector<double>& offsets_m,
                                    const EvalOptions& options)
{
    if (methods.empty() || ue_counts.empty() || offsets_m.empty())
        throw ValidationError("sweep: methods, UE counts and offsets must be non-empty");
    std::vector<ThroughputReport> table;
    table.reserve(methods.size() * ue_counts.size() * offsets_m.size());
    std::uint64_t cell = 0;
    for (CodingMethod method : methods) {
        for (int k : ue_counts) {
            for (double offset : offsets_m) {
                EvalOptions cell_options = options;
                cell_options.seed = mix(options.seed, cell++);
                table.push_back(evaluate(scenario, method, k, offset, cell_options));
            }
        }
    }
    return table;
}

double calibrate_bs_bandwidth_hz(const Scenario& scenario, CodingMethod method,
                                 double target_bps, const EvalOptions& options)
{
    if (target_bps <= 0.0)
        throw ValidationError("calibrate: target throughput must be positive");
    // Received power does not depend on bandwidth, so evaluate the K = 1
    // chain once (fading off) and bisect the closed-form rate in B.
    EvalOptions probe = options;
    probe.fading_drops = 0;
    const ThroughputReport ref = evaluate(scenario, method, 1, 0.0, probe);
    const double pr_dbm = ref.ues.front().ris_link.received_power_dbm;

    auto rate = [&](double b) {
        const double snr = pr_dbm - noise_power_dbm(b, -174.0, scenario.noise_figure_db);
        return shannon_throughput_bps(b, snr);
    };
    double lo = 1e5, hi = 50e9;
    if (rate(hi) < target_bps)
        throw NumericError("calibrate: target throughput unreachable");
    for (int it = 0; it < 200 && (hi - lo) / hi > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        (rate(mid) < target_bps ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace risbeam
