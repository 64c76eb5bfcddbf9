// SPDX-License-Identifier: Apache-2.0

#ifndef RISBEAM_CODING_HPP
#define RISBEAM_CODING_HPP

#include <span>
#include <vector>

#include "risbeam/surface.hpp"

namespace risbeam {

/// Desired reflection direction: theta from broadside in [0, pi/2),
/// phi azimuth in [0, 2*pi).
struct BeamTarget {
    double theta_rad = 0.0;
    double phi_rad = 0.0;

    BeamTarget(double theta, double phi);
};

/// Illumination direction, same angular ranges as BeamTarget.
struct IncidentWave {
    double theta_rad = 0.0;
    double phi_rad = 0.0;

    IncidentWave(double theta = 0.0, double phi = 0.0);
};

/// Linear phase gradient that steers an incident wave to `target`.
///
/// Phi_mn = (2*pi*D_u/lambda) * [ m*(cos(phi_r)sin(theta_r) - cos(phi_i)sin(theta_i))
///                              + n*(sin(phi_r)sin(theta_r) - sin(phi_i)sin(theta_i)) ]
/// reduced mod 2*pi, with 1-based cell indices. Normal incidence is the
/// default and matches the transverse-momentum balance of the reflection.
PhaseProfile single_beam_profile(const UnitCellGrid& grid, const BeamTarget& target,
                                 const IncidentWave& incidence = IncidentWave{});

/// Coherent superposition of single-beam phasors: S_mn = sum_k w_k e^{j Phi_mn,k}.
/// Returns |S| normalized by its aperture maximum and arg(S).
/// Cells where the phasors cancel (|S| < 1e-12) get phase 0.
/// Weights default to equal (all 1); if given, one weight per target.
ComplexProfile superpose(const UnitCellGrid& grid, std::span<const BeamTarget> targets,
                         std::span<const double> weights = {});

/// Multi-beam coding that keeps every cell at unit amplitude: the phase of
/// the beam-phasor superposition with the per-cell amplitude discarded.
PhaseProfile phase_only_profile(const UnitCellGrid& grid, std::span<const BeamTarget> targets,
                                std::span<const double> weights = {});

enum class PartitionAxis { row, column };

/// Space-division baseline: the aperture is cut into K contiguous bands
/// along the chosen axis, band k carrying the single-beam profile of
/// target k. When K does not divide the axis length the earlier bands
/// take the extra cells.
PhaseProfile sdm_partition_profile(const UnitCellGrid& grid, std::span<const BeamTarget> targets,
                                   PartitionAxis axis);

/// Time-division reconfiguration budget.
struct TdmBudget {
    int user_groups = 1;              // N
    double user_group_delay_s = 0.0;  // UGD
    double reconfiguration_time_s = 0.0;  // R

    TdmBudget(int groups, double group_delay_s, double reconfig_s);
};

/// Subframe length SL = N * (UGD + R), in seconds.
double tdm_subframe_length(const TdmBudget& budget);

} // namespace risbeam

#endif
