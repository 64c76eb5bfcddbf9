// SPDX-License-Identifier: Apache-2.0

#ifndef RISBEAM_FARFIELD_HPP
#define RISBEAM_FARFIELD_HPP

#include <complex>
#include <string>
#include <vector>

#include "risbeam/coding.hpp"
#include "risbeam/matrix.hpp"
#include "risbeam/surface.hpp"

namespace risbeam {

/// Sampling of the reflection hemisphere: theta in [0, pi/2], phi in [0, 2*pi).
struct AngleGrid {
    std::vector<double> theta_rad;
    std::vector<double> phi_rad;

    AngleGrid(std::vector<double> theta, std::vector<double> phi);

    /// Uniform grid at the given resolution (default 0.5 deg), theta endpoint
    /// included, phi endpoint excluded (periodic axis).
    static AngleGrid uniform(double resolution_rad);
    static AngleGrid uniform_deg(double resolution_deg);
};

enum class ElementFactor {
    isotropic, // pure array factor (default)
    cosine     // cos(theta) element field taper
};

struct PatternMeta {
    std::string source;
    std::vector<BeamTarget> targets;
};

/// Complex array factor sampled over an AngleGrid.
///
/// E(theta, phi) = sum_mn A_mn e^{j Psi_mn} e^{-j k0 zeta_mn(theta, phi)},
/// zeta_mn = D_u sin(theta) [(m - 1/2) cos(phi) + (n - 1/2) sin(phi)].
/// The geometric term carries the far-field path advance -k0 (u . r_mn) of
/// the outgoing wave, so a profile coded for a target steers the main lobe
/// onto that target.
struct Pattern {
    AngleGrid angles;
    Mat<std::complex<double>> field;
    UnitCellGrid grid; // aperture the field was computed from
    PatternMeta meta;

    /// Nominal main-lobe width lambda / (M * D_u).
    double beamwidth_rad() const;
};

Pattern radiation_pattern(const PhaseProfile& profile, const AngleGrid& angles,
                          ElementFactor element = ElementFactor::isotropic);
Pattern radiation_pattern(const ComplexProfile& profile, const AngleGrid& angles,
                          ElementFactor element = ElementFactor::isotropic);

/// Array factor evaluated exactly at a single direction (no grid involved).
std::complex<double> field_at(const PhaseProfile& profile, double theta_rad, double phi_rad,
                              ElementFactor element = ElementFactor::isotropic);
std::complex<double> field_at(const ComplexProfile& profile, double theta_rad, double phi_rad,
                              ElementFactor element = ElementFactor::isotropic);

/// Hemisphere integral of |E|^2 sin(theta) dtheta dphi, trapezoidal in theta
/// and periodic-trapezoidal in phi.
double radiated_power(const Pattern& pattern);

/// D = 4*pi * max|E|^2 / radiated_power, in dB. Rejects an all-zero field.
double directivity_db(const Pattern& pattern);

/// Directivity towards one direction: 4*pi*|E(theta,phi)|^2 / radiated_power.
double directivity_at_db(const Pattern& pattern, std::complex<double> field_value);

/// Aperture power kept by an amplitude taper: 10*log10( mean(A^2) ), <= 0.
double amplitude_loss_db(const ComplexProfile& profile);

/// Realized gain: directivity + 10*log10(efficiency) + amplitude loss.
/// Phase-only profiles carry no amplitude loss term.
double realized_gain_db(const Pattern& pattern, double efficiency);
double realized_gain_db(const Pattern& pattern, const ComplexProfile& profile, double efficiency);

struct Peak {
    double theta_rad = 0.0;
    double phi_rad = 0.0;
    double level_db = 0.0; // relative to the global maximum
};

struct PeakList {
    std::vector<Peak> peaks;
    bool truncated = false; // fewer maxima existed than requested
};

/// The `count` strongest local maxima of |E|, separated pairwise by at least
/// one nominal beamwidth lambda / (M * D_u) of great-circle angle so that
/// quantization-lobe duplicates collapse onto their parent lobe.
PeakList peak_directions(const Pattern& pattern, int count);

/// 20*log10( |E(theta=0)| / max|E| ), floored at -120 dB.
double specular_level_db(const Pattern& pattern);

struct PatternMetrics {
    double directivity_dbi = 0.0;
    double realized_gain_dbi = 0.0;
    std::vector<Peak> peak_list;
    double sidelobe_level_db = -120.0;
    double specular_level_db = -120.0;
};

/// Metrics bundle for reporting: `beam_count` main lobes are identified
/// first; the sidelobe level is the strongest remaining local maximum.
PatternMetrics pattern_metrics(const Pattern& pattern, int beam_count, double efficiency,
                               double amplitude_loss_db_term = 0.0);

} // namespace risbeam

#endif
