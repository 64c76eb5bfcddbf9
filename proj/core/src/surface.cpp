// SPDX-License-Identifier: Apache-2.0

#include "risbeam/surface.hpp"

#include <cmath>
#include <string>

#include "risbeam/angles.hpp"
#include "risbeam/error.hpp"

namespace risbeam {

UnitCellGrid::UnitCellGrid(int m, int n, double cell_size, double frequency)
    : m_count(m), n_count(n), cell_size_m(cell_size), frequency_hz(frequency)
{
    if (m_count < 1 || n_count < 1)
        throw ValidationError("grid needs at least one cell per axis");
    if (frequency_hz <= 0.0)
        throw ValidationError("grid frequency must be positive");
    wavelength_m = kSpeedOfLight / frequency_hz;
    if (cell_size_m <= 0.0)
        throw ValidationError("cell size must be positive");
    if (cell_size_m >= 0.5 * wavelength_m)
        throw ValidationError("cell size must stay below lambda/2 (point-source cells)");
}

UnitCellGrid build_grid(int m_count, int n_count, double cell_size_in_wavelengths,
                        double frequency_hz)
{
    if (frequency_hz <= 0.0)
        throw ValidationError("build_grid: frequency must be positive");
    if (cell_size_in_wavelengths <= 0.0 || cell_size_in_wavelengths >= 0.5)
        throw ValidationError("build_grid: cell size must lie in (0, 0.5) wavelengths");
    const double lambda = kSpeedOfLight / frequency_hz;
    return UnitCellGrid(m_count, n_count, cell_size_in_wavelengths * lambda, frequency_hz);
}

StateCodebook::StateCodebook(int states, std::vector<double> phase_list)
    : state_count(states), phases(std::move(phase_list))
{
    if (state_count < 2)
        throw ValidationError("codebook needs at least two states");
    if (static_cast<int>(phases.size()) != state_count)
        throw ValidationError("codebook phase list does not match state count");
    for (std::size_t i = 0; i < phases.size(); ++i) {
        phases[i] = wrap_two_pi(phases[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (circular_distance(phases[i], phases[j]) < 1e-12)
                throw ValidationError("codebook phases must be distinct modulo 2*pi");
        }
    }
}

StateCodebook canonical_codebook(int state_count)
{
    if (state_count < 2)
        throw ValidationError("canonical_codebook: state count must be >= 2");
    std::vector<double> phases(state_count);
    for (int s = 0; s < state_count; ++s)
        phases[s] = kTwoPi * s / state_count;
    return StateCodebook(state_count, std::move(phases));
}

namespace {

void check_profile_matrix(const UnitCellGrid& grid, const Mat<double>& values,
                          const char* what)
{
    if (values.rows() != static_cast<std::size_t>(grid.m_count) ||
        values.cols() != static_cast<std::size_t>(grid.n_count))
        throw ValidationError(std::string(what) + ": matrix does not match the grid");
    for (double v : values.storage()) {
        if (!std::isfinite(v))
            throw ValidationError(std::string(what) + ": non-finite entry");
    }
}

} // namespace

PhaseProfile::PhaseProfile(const UnitCellGrid& g, Mat<double> values)
    : grid(g), phase(std::move(values))
{
    check_profile_matrix(grid, phase, "PhaseProfile");
    for (double& v : phase.storage())
        v = wrap_two_pi(v);
}

ComplexProfile::ComplexProfile(const UnitCellGrid& g, Mat<double> amp, Mat<double> values)
    : grid(g), amplitude(std::move(amp)), phase(std::move(values))
{
    check_profile_matrix(grid, amplitude, "ComplexProfile amplitude");
    check_profile_matrix(grid, phase, "ComplexProfile phase");
    for (double a : amplitude.storage()) {
        if (a < 0.0 || a > 1.0 + 1e-12)
            throw ValidationError("ComplexProfile: amplitudes must lie in [0, 1]");
    }
    for (double& v : phase.storage())
        v = wrap_two_pi(v);
}

DielectricState::DielectricState(double eps_r, double thickness_m)
    : relative_permittivity(eps_r), slab_thickness_m(thickness_m)
{
    if (relative_permittivity < 1.0)
        throw ValidationError("relative permittivity must be >= 1");
    if (slab_thickness_m <= 0.0)
        throw ValidationError("slab thickness must be positive");
}

double dielectric_reflection_phase(const DielectricState& state, double frequency_hz)
{
    if (frequency_hz <= 0.0)
        throw ValidationError("dielectric_reflection_phase: frequency must be positive");
    const double lambda0 = kSpeedOfLight / frequency_hz;
    const double k0 = kTwoPi / lambda0;
    const double phase =
        2.0 * k0 * std::sqrt(state.relative_permittivity) * state.slab_thickness_m;
    return wrap_two_pi(phase);
}

QuantizedProfile quantize_profile(const PhaseProfile& profile, const StateCodebook& codebook)
{
    const std::size_t rows = profile.phase.rows();
    const std::size_t cols = profile.phase.cols();
    Mat<double> snapped(rows, cols);
    Mat<int> states(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double value = profile.phase(i, j);
            int best = 0;
            double best_dist = circular_distance(value, codebook.phases[0]);
            for (int s = 1; s < codebook.state_count; ++s) {
                const double d = circular_distance(value, codebook.phases[s]);
                if (d < best_dist) { // ties keep the lower index
                    best_dist = d;
                    best = s;
                }
            }
            states(i, j) = best;
            snapped(i, j) = codebook.phases[best];
        }
    }
    return QuantizedProfile{PhaseProfile(profile.grid, std::move(snapped)), std::move(states)};
}

} // namespace risbeam
