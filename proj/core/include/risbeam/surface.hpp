// SPDX-License-Identifier: Apache-2.0

#ifndef RISBEAM_SURFACE_HPP
#define RISBEAM_SURFACE_HPP

#include <utility>
#include <vector>

#include "risbeam/matrix.hpp"

namespace risbeam {

/// Square-cell aperture of M x N programmable unit cells.
///
/// Cell (m, n) (1-based) is centered at ((m - 1/2) * cell_size,
/// (n - 1/2) * cell_size). The cell size must stay below half a wavelength
/// so each cell radiates as a point source.
struct UnitCellGrid {
    int m_count = 0;
    int n_count = 0;
    double cell_size_m = 0.0;
    double wavelength_m = 0.0;
    double frequency_hz = 0.0;

    UnitCellGrid(int m, int n, double cell_size, double frequency);

    double aperture_x_m() const { return m_count * cell_size_m; }
    double aperture_y_m() const { return n_count * cell_size_m; }
    std::size_t cell_count() const { return static_cast<std::size_t>(m_count) * n_count; }
};

/// Builds a grid from the cell pitch expressed in wavelengths.
/// Rejects pitches >= lambda/2.
UnitCellGrid build_grid(int m_count, int n_count, double cell_size_in_wavelengths,
                        double frequency_hz);

/// The discrete reflection phases a cell can realize, in [0, 2*pi).
struct StateCodebook {
    int state_count = 0;
    std::vector<double> phases;

    StateCodebook(int states, std::vector<double> phase_list);
};

/// Uniform codebook: phases[s] = 2*pi*s / state_count.
StateCodebook canonical_codebook(int state_count);

/// Per-cell reflection phase field, each entry in [0, 2*pi).
struct PhaseProfile {
    UnitCellGrid grid;
    Mat<double> phase;

    PhaseProfile(const UnitCellGrid& g, Mat<double> values);
};

/// Per-cell amplitude (in [0, 1]) and phase field.
struct ComplexProfile {
    UnitCellGrid grid;
    Mat<double> amplitude;
    Mat<double> phase;

    ComplexProfile(const UnitCellGrid& g, Mat<double> amp, Mat<double> values);
};

/// Grounded dielectric slab of thickness l and relative permittivity eps_r.
struct DielectricState {
    double relative_permittivity = 1.0;
    double slab_thickness_m = 0.0;

    DielectricState(double eps_r, double thickness_m);
};

/// Round-trip phase 2*k0*sqrt(eps_r)*l accumulated inside the slab,
/// reduced to [0, 2*pi).
///
/// The sign convention is the non-negative accumulated phase; only the
/// differences between states are physically meaningful, so a global sign
/// or offset drops out of the coding pipeline.
double dielectric_reflection_phase(const DielectricState& state, double frequency_hz);

struct QuantizedProfile {
    PhaseProfile profile;
    Mat<int> states;
};

/// Snap every cell to the codebook phase at minimum circular distance.
/// Equidistant cells take the lower state index. The per-cell error is
/// bounded by pi / state_count for the canonical codebook.
QuantizedProfile quantize_profile(const PhaseProfile& profile, const StateCodebook& codebook);

} // namespace risbeam

#endif
