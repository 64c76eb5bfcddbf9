// SPDX-License-Identifier: Apache-2.0

#ifndef RISBEAM_SCENARIO_HPP
#define RISBEAM_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "risbeam/farfield.hpp"
#include "risbeam/link.hpp"
#include "risbeam/surface.hpp"

namespace risbeam {

enum class ScenarioKind { indoor, umi };
enum class CodingMethod { phase_only, amp_phs, sdm };
enum class BandwidthMode { full, equal_split };

std::string to_string(CodingMethod method);
CodingMethod coding_method_from_string(const std::string& name);

struct RisConfig {
    Position position;
    UnitCellGrid grid;
    StateCodebook codebook;
    double efficiency = 0.9;
};

/// UE ring around the surface: per-UE boresight distances plus an even
/// azimuth fan across the facing half-plane. The fan spans
/// [-azimuth_span_deg/2, +azimuth_span_deg/2]; a single UE sits at
/// broadside. Beam targets derive from these placements.
struct UePlacement {
    std::vector<double> distances_m;
    double rx_gain_dbi = 0.0;
    double azimuth_span_deg = 120.0;
};

struct LinkExponents {
    double los = 2.0;
    double nlos = 3.0;
};

struct Scenario {
    ScenarioKind kind = ScenarioKind::indoor;
    RadioNode bs; // BS (indoor) or SCBS (UMi), 28 GHz class
    std::optional<RadioNode> mcbs;
    RisConfig ris;
    UePlacement ues;
    LinkExponents sc_exponents; // BS/SCBS CI exponents (carried per config contract)
    std::optional<LinkExponents> mcbs_exponents;
    BandwidthMode bandwidth_mode = BandwidthMode::full;
    bool direct_path_blocked = true; // BS/SCBS -> UE
    double noise_figure_db = 0.0;
    double ricean_k_db = 10.0;

    void validate() const;
};

/// Optional overrides applied on top of the built-in geometries.
struct ScenarioOverrides {
    std::optional<int> ris_m_count;
    std::optional<int> ris_n_count;
    std::optional<int> n_states;
    std::optional<double> efficiency;
    std::optional<double> bs_bandwidth_hz;
    std::optional<double> mcbs_bandwidth_hz;
    std::optional<double> ue_azimuth_span_deg;
    std::optional<std::vector<double>> ue_distances_m;
    std::optional<BandwidthMode> bandwidth_mode;
    std::optional<double> noise_figure_db;
};

/// Indoor office: blocked 28 GHz BS at the origin, surface 100 m up-range,
/// eight UEs a few meters from the surface.
Scenario build_indoor(const ScenarioOverrides& overrides = {});

/// Urban micro: 3.55 GHz macro at the origin with an NLoS direct path,
/// blocked 28 GHz small cell 2 km out, surface and UEs past it.
Scenario build_umi(const ScenarioOverrides& overrides = {});

/// UE geometry as seen from the surface.
struct UeGeometry {
    int index = 0;
    double theta_rad = 0.0;
    double phi_rad = 0.0;
    double distance_m = 0.0;
    Position position;
};

std::vector<UeGeometry> ue_geometries(const Scenario& scenario, int ue_count,
                                      double distance_offset_m = 0.0);

struct UeResult {
    int index = 0;
    double distance_m = 0.0;
    double beam_gain_dbi = 0.0;
    LinkResult ris_link;
    double mcbs_throughput_bps = 0.0;
    double throughput_bps = 0.0; // ris + mcbs contributions
};

struct ReportMeta {
    BandwidthMode bandwidth_mode = BandwidthMode::full;
    double bs_bandwidth_hz = 0.0;
    double mcbs_bandwidth_hz = 0.0;
    std::uint64_t seed = 0;
    int fading_drops = 0; // 0 = fading disabled
    std::string calibration;
};

struct ThroughputReport {
    CodingMethod method = CodingMethod::phase_only;
    int ue_count = 0;
    double offset_m = 0.0;
    std::vector<UeResult> ues;
    double total_throughput_bps = 0.0;
    ReportMeta meta;
};

struct EvalOptions {
    std::uint64_t seed = 0;
    int fading_drops = 0; // 0 disables fading; >0 averages that many draws
    double angle_resolution_deg = 0.5;
};

/// Full chain for one configuration: code the surface for the K UE
/// directions, quantize, compute the pattern, run the cascaded budget per
/// UE (optionally Monte-Carlo over fading draws), add the macro direct
/// link in UMi, aggregate.
ThroughputReport evaluate(const Scenario& scenario, CodingMethod method, int ue_count,
                          double distance_offset_m, const EvalOptions& options = {});

/// Cartesian product of methods x ue_counts x offsets, in that order.
/// Each cell draws its fading stream from the seed and its cell index.
std::vector<ThroughputReport> sweep(const Scenario& scenario,
                                    const std::vector<CodingMethod>& methods,
                                    const std::vector<int>& ue_counts,
                                    const std::vector<double>& offsets_m,
                                    const EvalOptions& options = {});

/// Solve for the BS/SCBS bandwidth that makes the single-UE, zero-offset
/// configuration hit `target_bps` (monotone bisection). Used to pin the
/// bandwidth the reference tables omit.
double calibrate_bs_bandwidth_hz(const Scenario& scenario, CodingMethod method,
                                 double target_bps, const EvalOptions& options = {});

} // namespace risbeam

#endif
