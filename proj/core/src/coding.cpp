// SPDX-License-Identifier: Apache-2.0

#include "risbeam/coding.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "risbeam/angles.hpp"
#include "risbeam/error.hpp"

namespace risbeam {

namespace {

void check_direction(double theta, double phi, const char* what)
{
    if (!(theta >= 0.0 && theta < std::numbers::pi / 2.0))
        throw ValidationError(std::string(what) + ": theta must lie in [0, pi/2)");
    if (!(phi >= 0.0 && phi < kTwoPi))
        throw ValidationError(std::string(what) + ": phi must lie in [0, 2*pi)");
}

void check_targets(std::span<const BeamTarget> targets, std::span<const double> weights)
{
    if (targets.empty())
        throw ValidationError("target list must not be empty");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (std::fabs(targets[i].theta_rad - targets[j].theta_rad) < 1e-12 &&
                circular_distance(targets[i].phi_rad, targets[j].phi_rad) < 1e-12)
                throw ValidationError("targets must be pairwise distinct");
        }
    }
    if (!weights.empty() && weights.size() != targets.size())
        throw ValidationError("need one weight per target");
}

// Amplitude below which a superposed cell counts as destructive; its phase
// is then pinned to 0.
constexpr double kDestructiveEps = 1e-12;

} // namespace

BeamTarget::BeamTarget(double theta, double phi) : theta_rad(theta), phi_rad(phi)
{
    check_direction(theta_rad, phi_rad, "BeamTarget");
}

IncidentWave::IncidentWave(double theta, double phi) : theta_rad(theta), phi_rad(phi)
{
    check_direction(theta_rad, phi_rad, "IncidentWave");
}

PhaseProfile single_beam_profile(const UnitCellGrid& grid, const BeamTarget& target,
                                 const IncidentWave& incidence)
{
    const double gx = std::cos(target.phi_rad) * std::sin(target.theta_rad) -
                      std::cos(incidence.phi_rad) * std::sin(incidence.theta_rad);
    const double gy = std::sin(target.phi_rad) * std::sin(target.theta_rad) -
                      std::sin(incidence.phi_rad) * std::sin(incidence.theta_rad);
    const double scale = kTwoPi * grid.cell_size_m / grid.wavelength_m;
    Mat<double> phase(grid.m_count, grid.n_count);
    for (int m = 1; m <= grid.m_count; ++m)
        for (int n = 1; n <= grid.n_count; ++n)
            phase(m - 1, n - 1) = wrap_two_pi(scale * (m * gx + n * gy));
    return PhaseProfile(grid, std::move(phase));
}

ComplexProfile superpose(const UnitCellGrid& grid, std::span<const BeamTarget> targets,
                         std::span<const double> weights)
{
    check_targets(targets, weights);
    const std::size_t rows = grid.m_count;
    const std::size_t cols = grid.n_count;
    Mat<std::complex<double>> sum(rows, cols, {0.0, 0.0});
    for (std::size_t k = 0; k < targets.size(); ++k) {
        const double w = weights.empty() ? 1.0 : weights[k];
        const PhaseProfile beam = single_beam_profile(grid, targets[k]);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                sum(i, j) += w * std::polar(1.0, beam.phase(i, j));
    }

    double max_amp = 0.0;
    for (const auto& s : sum.storage())
        max_amp = std::max(max_amp, std::abs(s));
    if (max_amp <= kDestructiveEps)
        throw NumericError("superpose: all cells cancel");

    Mat<double> amplitude(rows, cols);
    Mat<double> phase(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double a = std::abs(sum(i, j));
            amplitude(i, j) = a / max_amp;
            phase(i, j) = (a < kDestructiveEps) ? 0.0 : wrap_two_pi(std::arg(sum(i, j)));
        }
    }
    return ComplexProfile(grid, std::move(amplitude), std::move(phase));
}

PhaseProfile phase_only_profile(const UnitCellGrid& grid, std::span<const BeamTarget> targets,
                                std::span<const double> weights)
{
    ComplexProfile full = superpose(grid, targets, weights);
    return PhaseProfile(grid, std::move(full.phase));
}

PhaseProfile sdm_partition_profile(const UnitCellGrid& grid, std::span<const BeamTarget> targets,
                                   PartitionAxis axis)
{
    check_targets(targets, {});
    const int k_count = static_cast<int>(targets.size());
    const int axis_len = (axis == PartitionAxis::row) ? grid.m_count : grid.n_count;
    if (k_count > axis_len)
        throw ValidationError("sdm_partition_profile: more targets than cells along the axis");

    // Contiguous bands; the first (axis_len % K) bands take one extra cell.
    const int base = axis_len / k_count;
    const int extra = axis_len % k_count;
    Mat<double> phase(grid.m_count, grid.n_count);
    int start = 0;
    for (int k = 0; k < k_count; ++k) {
        const int len = base + (k < extra ? 1 : 0);
        const PhaseProfile beam = single_beam_profile(grid, targets[k]);
        for (int a = start; a < start + len; ++a) {
            if (axis == PartitionAxis::row) {
                for (int n = 0; n < grid.n_count; ++n)
                    phase(a, n) = beam.phase(a, n);
            } else {
                for (int m = 0; m < grid.m_count; ++m)
                    phase(m, a) = beam.phase(m, a);
            }
        }
        start += len;
    }
    return PhaseProfile(grid, std::move(phase));
}

TdmBudget::TdmBudget(int groups, double group_delay_s, double reconfig_s)
    : user_groups(groups), user_group_delay_s(group_delay_s), reconfiguration_time_s(reconfig_s)
{
    if (user_groups < 1)
        throw ValidationError("TdmBudget: need at least one user group");
    if (user_group_delay_s <= 0.0 || reconfiguration_time_s < 0.0)
        throw ValidationError("TdmBudget: delays must be positive");
}

double tdm_subframe_length(const TdmBudget& budget)
{
    return budget.user_groups * (budget.user_group_delay_s + budget.reconfiguration_time_s);
}

} // namespace risbeam
