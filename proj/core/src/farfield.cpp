// SPDX-License-Identifier: Apache-2.0

#include "risbeam/farfield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "risbeam/angles.hpp"
#include "risbeam/error.hpp"

namespace risbeam {

namespace {

constexpr double kLogFloorDb = -120.0;

double to_db_power(double ratio)
{
    if (ratio <= 0.0)
        return kLogFloorDb;
    return std::max(10.0 * std::log10(ratio), kLogFloorDb);
}

double to_db_amplitude(double ratio)
{
    if (ratio <= 0.0)
        return kLogFloorDb;
    return std::max(20.0 * std::log10(ratio), kLogFloorDb);
}

// Non-owning view over either profile flavour.
struct ProfileView {
    const UnitCellGrid* grid;
    const Mat<double>* amplitude; // nullptr for unit amplitude
    const Mat<double>* phase;
};

ProfileView view_of(const PhaseProfile& p) { return {&p.grid, nullptr, &p.phase}; }
ProfileView view_of(const ComplexProfile& p) { return {&p.grid, &p.amplitude, &p.phase}; }

Mat<std::complex<double>> cell_phasors(const ProfileView& view)
{
    const std::size_t rows = view.phase->rows();
    const std::size_t cols = view.phase->cols();
    Mat<std::complex<double>> c(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double a = view.amplitude ? (*view.amplitude)(i, j) : 1.0;
            c(i, j) = std::polar(a, (*view.phase)(i, j));
        }
    }
    return c;
}

// Geometric powers e^{-j k0 du sin(theta) cos/sin(phi) (idx - 1/2)} built by
// iterated multiplication; one polar() call per axis instead of one per cell.
void axis_phasors(double step_phase, std::size_t count, std::vector<std::complex<double>>& out)
{
    out.resize(count);
    const std::complex<double> step = std::polar(1.0, step_phase);
    std::complex<double> z = std::polar(1.0, 0.5 * step_phase);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = z;
        z *= step;
    }
}

std::complex<double> direction_sum(const Mat<std::complex<double>>& cells, double k0du,
                                   double theta, double phi,
                                   std::vector<std::complex<double>>& zm,
                                   std::vector<std::complex<double>>& zn)
{
    const double st = std::sin(theta);
    axis_phasors(-k0du * st * std::cos(phi), cells.rows(), zm);
    axis_phasors(-k0du * st * std::sin(phi), cells.cols(), zn);
    std::complex<double> total{0.0, 0.0};
    for (std::size_t i = 0; i < cells.rows(); ++i) {
        std::complex<double> row{0.0, 0.0};
        for (std::size_t j = 0; j < cells.cols(); ++j)
            row += cells(i, j) * zn[j];
        total += zm[i] * row;
    }
    return total;
}

Pattern compute_pattern(const ProfileView& view, const AngleGrid& angles, ElementFactor element)
{
    if (view.phase->rows() != static_cast<std::size_t>(view.grid->m_count) ||
        view.phase->cols() != static_cast<std::size_t>(view.grid->n_count))
        throw ValidationError("radiation_pattern: profile does not match its grid");

    const Mat<std::complex<double>> cells = cell_phasors(view);
    const double k0du = kTwoPi / view.grid->wavelength_m * view.grid->cell_size_m;
    const std::size_t n_theta = angles.theta_rad.size();
    const std::size_t n_phi = angles.phi_rad.size();
    Mat<std::complex<double>> field(n_theta, n_phi);

    auto run_rows = [&](std::size_t begin, std::size_t end) {
        std::vector<std::complex<double>> zm, zn;
        for (std::size_t i = begin; i < end; ++i) {
            const double theta = angles.theta_rad[i];
            const double taper = (element == ElementFactor::cosine) ? std::cos(theta) : 1.0;
            for (std::size_t j = 0; j < n_phi; ++j)
                field(i, j) = taper * direction_sum(cells, k0du, theta, angles.phi_rad[j], zm, zn);
        }
    };

    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, n_theta);
    if (workers <= 1) {
        run_rows(0, n_theta);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n_theta + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n_theta, begin + chunk);
            if (begin < end)
                pool.emplace_back(run_rows, begin, end);
        }
        for (auto& t : pool)
            t.join();
    }
    return Pattern{angles, std::move(field), *view.grid, {}};
}

std::complex<double> compute_field_at(const ProfileView& view, double theta, double phi,
                                      ElementFactor element)
{
    const Mat<std::complex<double>> cells = cell_phasors(view);
    const double k0du = kTwoPi / view.grid->wavelength_m * view.grid->cell_size_m;
    std::vector<std::complex<double>> zm, zn;
    const double taper = (element == ElementFactor::cosine) ? std::cos(theta) : 1.0;
    return taper * direction_sum(cells, k0du, theta, phi, zm, zn);
}

std::vector<double> trapezoid_weights(const std::vector<double>& x, double periodic_span)
{
    const std::size_t n = x.size();
    std::vector<double> w(n, 0.0);
    if (periodic_span > 0.0) {
        // Periodic axis: the closing interval wraps from the last sample
        // back to the first.
        for (std::size_t i = 0; i < n; ++i) {
            const double next = (i + 1 < n) ? x[i + 1] : x[0] + periodic_span;
            const double prev = (i > 0) ? x[i - 1] : x[n - 1] - periodic_span;
            w[i] = 0.5 * (next - prev);
        }
    } else {
        w[0] = 0.5 * (x[1] - x[0]);
        w[n - 1] = 0.5 * (x[n - 1] - x[n - 2]);
        for (std::size_t i = 1; i + 1 < n; ++i)
            w[i] = 0.5 * (x[i + 1] - x[i - 1]);
    }
    return w;
}

double max_field_magnitude(const Pattern& pattern)
{
    double mx = 0.0;
    for (const auto& e : pattern.field.storage())
        mx = std::max(mx, std::abs(e));
    return mx;
}

} // namespace

AngleGrid::AngleGrid(std::vector<double> theta, std::vector<double> phi)
    : theta_rad(std::move(theta)), phi_rad(std::move(phi))
{
    auto strictly_increasing = [](const std::vector<double>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] <= v[i - 1])
                return false;
        return true;
    };
    if (theta_rad.size() < 2 || phi_rad.size() < 2)
        throw ValidationError("AngleGrid: need at least two samples per axis");
    if (!strictly_increasing(theta_rad) || !strictly_increasing(phi_rad))
        throw ValidationError("AngleGrid: samples must be strictly increasing");
    const double half_pi = std::numbers::pi / 2.0;
    if (theta_rad.front() < 0.0 || theta_rad.back() > half_pi + 1e-12)
        throw ValidationError("AngleGrid: theta must stay within [0, pi/2]");
    if (phi_rad.front() < 0.0 || phi_rad.back() >= kTwoPi)
        throw ValidationError("AngleGrid: phi must stay within [0, 2*pi)");
}

AngleGrid AngleGrid::uniform(double resolution_rad)
{
    if (resolution_rad <= 0.0)
        throw ValidationError("AngleGrid::uniform: resolution must be positive");
    const double half_pi = std::numbers::pi / 2.0;
    std::vector<double> theta;
    for (int i = 0;; ++i) {
        const double t = i * resolution_rad;
        if (t > half_pi + 1e-12)
            break;
        theta.push_back(std::min(t, half_pi));
        if (t >= half_pi)
            break;
    }
    if (theta.back() < half_pi)
        theta.push_back(half_pi);
    std::vector<double> phi;
    for (int i = 0;; ++i) {
        const double p = i * resolution_rad;
        if (p >= kTwoPi - 1e-12)
            break;
        phi.push_back(p);
    }
    return AngleGrid(std::move(theta), std::move(phi));
}

AngleGrid AngleGrid::uniform_deg(double resolution_deg)
{
    return uniform(deg_to_rad(resolution_deg));
}

Pattern radiation_pattern(const PhaseProfile& profile, const AngleGrid& angles,
                          ElementFactor element)
{
    return compute_pattern(view_of(profile), angles, element);
}

Pattern radiation_pattern(const ComplexProfile& profile, const AngleGrid& angles,
                          ElementFactor element)
{
    return compute_pattern(view_of(profile), angles, element);
}

std::complex<double> field_at(const PhaseProfile& profile, double theta_rad, double phi_rad,
                              ElementFactor element)
{
    return compute_field_at(view_of(profile), theta_rad, phi_rad, element);
}

std::complex<double> field_at(const ComplexProfile& profile, double theta_rad, double phi_rad,
                              ElementFactor element)
{
    return compute_field_at(view_of(profile), theta_rad, phi_rad, element);
}

double radiated_power(const Pattern& pattern)
{
    const auto wt = trapezoid_weights(pattern.angles.theta_rad, 0.0);
    const auto wp = trapezoid_weights(pattern.angles.phi_rad, kTwoPi);
    double total = 0.0;
    for (std::size_t i = 0; i < pattern.angles.theta_rad.size(); ++i) {
        const double st = std::sin(pattern.angles.theta_rad[i]);
        double row = 0.0;
        for (std::size_t j = 0; j < pattern.angles.phi_rad.size(); ++j)
            row += std::norm(pattern.field(i, j)) * wp[j];
        total += row * st * wt[i];
    }
    return total;
}

double directivity_db(const Pattern& pattern)
{
    const double mx = max_field_magnitude(pattern);
    if (mx <= 0.0)
        throw NumericError("directivity: all-zero field");
    const double power = radiated_power(pattern);
    return to_db_power(4.0 * std::numbers::pi * mx * mx / power);
}

double directivity_at_db(const Pattern& pattern, std::complex<double> field_value)
{
    const double power = radiated_power(pattern);
    if (power <= 0.0)
        throw NumericError("directivity_at: all-zero field");
    return to_db_power(4.0 * std::numbers::pi * std::norm(field_value) / power);
}

double amplitude_loss_db(const ComplexProfile& profile)
{
    double sum = 0.0;
    for (double a : profile.amplitude.storage())
        sum += a * a;
    return to_db_power(sum / static_cast<double>(profile.amplitude.size()));
}

double realized_gain_db(const Pattern& pattern, double efficiency)
{
    if (efficiency <= 0.0 || efficiency > 1.0)
        throw ValidationError("realized_gain: efficiency must lie in (0, 1]");
    return directivity_db(pattern) + 10.0 * std::log10(efficiency);
}

double realized_gain_db(const Pattern& pattern, const ComplexProfile& profile, double efficiency)
{
    return realized_gain_db(pattern, efficiency) + amplitude_loss_db(profile);
}

double Pattern::beamwidth_rad() const
{
    return grid.wavelength_m / (grid.m_count * grid.cell_size_m);
}

PeakList peak_directions(const Pattern& pattern, int count)
{
    if (count < 1)
        throw ValidationError("peak_directions: count must be >= 1");
    const auto& th = pattern.angles.theta_rad;
    const auto& ph = pattern.angles.phi_rad;
    const std::size_t nt = th.size();
    const std::size_t np = ph.size();
    const double mx = max_field_magnitude(pattern);
    if (mx <= 0.0)
        throw NumericError("peak_directions: all-zero field");

    struct Candidate {
        double mag;
        std::size_t i, j;
    };
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            const double v = std::abs(pattern.field(i, j));
            bool is_max = true;
            bool strict = false;
            for (int di = -1; di <= 1 && is_max; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0)
                        continue;
                    const std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(i) + di;
                    if (ii < 0 || ii >= static_cast<std::ptrdiff_t>(nt))
                        continue; // theta edge
                    const std::size_t jj = (j + np + dj) % np; // phi wraps
                    const double nb = std::abs(pattern.field(ii, jj));
                    if (nb > v) {
                        is_max = false;
                        break;
                    }
                    if (nb < v)
                        strict = true;
                }
            }
            if (is_max && strict)
                cands.push_back({v, i, j});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.mag != b.mag)
            return a.mag > b.mag;
        return (a.i != b.i) ? a.i < b.i : a.j < b.j;
    });

    // Keep the strongest maxima at pairwise great-circle separation of one
    // beamwidth; anything closer is a quantization-lobe duplicate of an
    // already accepted lobe. (Separation is angular, not theta-only:
    // distinct beams may share the same polar angle.)
    const double min_sep = pattern.beamwidth_rad();
    PeakList result;
    for (const auto& c : cands) {
        const double t = th[c.i];
        const double p = ph[c.j];
        bool separated = true;
        for (const auto& kept : result.peaks) {
            if (angular_separation(t, p, kept.theta_rad, kept.phi_rad) < min_sep) {
                separated = false;
                break;
            }
        }
        if (!separated)
            continue;
        result.peaks.push_back({t, p, to_db_amplitude(c.mag / mx)});
        if (static_cast<int>(result.peaks.size()) == count)
            break;
    }
    result.truncated = static_cast<int>(result.peaks.size()) < count;
    return result;
}

double specular_level_db(const Pattern& pattern)
{
    const double mx = max_field_magnitude(pattern);
    if (mx <= 0.0)
        throw NumericError("specular_level: all-zero field");
    if (pattern.angles.theta_rad.front() > 1e-12)
        throw ValidationError("specular_level: theta = 0 is not sampled");
    const double spec = std::abs(pattern.field(0, 0));
    return to_db_amplitude(spec / mx);
}

PatternMetrics pattern_metrics(const Pattern& pattern, int beam_count, double efficiency,
                               double amplitude_loss_db_term)
{
    if (beam_count < 1)
        throw ValidationError("pattern_metrics: beam count must be >= 1");
    PatternMetrics metrics;
    metrics.directivity_dbi = directivity_db(pattern);
    metrics.realized_gain_dbi =
        metrics.directivity_dbi + 10.0 * std::log10(efficiency) + amplitude_loss_db_term;
    // One extra peak past the main lobes gives the sidelobe level.
    PeakList found = peak_directions(pattern, beam_count + 1);
    metrics.sidelobe_level_db = (static_cast<int>(found.peaks.size()) > beam_count)
                                    ? found.peaks[beam_count].level_db
                                    : kLogFloorDb;
    if (static_cast<int>(found.peaks.size()) > beam_count)
        found.peaks.resize(beam_count);
    metrics.peak_list = std::move(found.peaks);
    metrics.specular_level_db = specular_level_db(pattern);
    return metrics;
}

} // namespace risbeam
