// SPDX-License-Identifier: Apache-2.0

#ifndef RISBEAM_IO_HPP
#define RISBEAM_IO_HPP

#include <string>
#include <vector>

#include "risbeam/farfield.hpp"
#include "risbeam/scenario.hpp"
#include "risbeam/surface.hpp"

namespace risbeam {

inline constexpr int kSchemaVersion = 1;

// Angles in files are degrees; in-process everything is radians.

/// Target list document: a JSON array of {"theta_deg": x, "phi_deg": y}.
std::vector<BeamTarget> load_targets_json(const std::string& path);
std::vector<BeamTarget> parse_targets_json(const std::string& text);

/// Scenario document (schema_version required, unknown keys rejected).
Scenario load_scenario_json(const std::string& path);
Scenario parse_scenario_json(const std::string& text);
std::string scenario_to_json(const Scenario& scenario);

/// State matrix: CSV of integers, one row per m index.
void write_state_matrix_csv(const std::string& path, const Mat<int>& states);
/// JSON form {m_count, n_count, n_states, states: [[...]]} for controllers.
void write_state_matrix_json(const std::string& path, const Mat<int>& states, int n_states);

/// Phase profiles as CSV matrices of radians.
void write_phase_profile_csv(const std::string& path, const PhaseProfile& profile);
PhaseProfile load_phase_profile_csv(const std::string& path, const UnitCellGrid& grid);

/// Pattern samples: theta_deg, phi_deg, re, im, magnitude_db (normalized).
void write_pattern_csv(const std::string& path, const Pattern& pattern);

/// Metrics record as JSON.
void write_metrics_json(const std::string& path, const PatternMetrics& metrics);
std::string metrics_to_json(const PatternMetrics& metrics);

/// Throughput reports: '#'-prefixed metadata header (schema version first),
/// then method, K, offset_m, ue_index, snr_db, throughput_bps rows and one
/// totals row per report.
void write_report_csv(const std::string& path, const std::vector<ThroughputReport>& reports);
std::string report_to_csv(const std::vector<ThroughputReport>& reports);

} // namespace risbeam

#endif
