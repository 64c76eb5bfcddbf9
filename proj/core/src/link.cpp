// SPDX-License-Identifier: Apache-2.0

#include "risbeam/link.hpp"

#include <cmath>

#include "risbeam/angles.hpp"
#include "risbeam/error.hpp"

namespace risbeam {

double distance_3d_m(const Position& a, const Position& b)
{
    const double dx = a.x_m - b.x_m;
    const double dy = a.y_m - b.y_m;
    const double dz = a.height_m - b.height_m;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

namespace {

void check_distance(double d)
{
    if (d < 1.0)
        throw ValidationError("pathloss models are valid for distances >= 1 m");
}

} // namespace

double pathloss_umi_db(double frequency_hz, double distance_3d_m, double exponent)
{
    check_distance(distance_3d_m);
    if (frequency_hz <= 0.0)
        throw ValidationError("pathloss_umi: frequency must be positive");
    const double free_space_1m = 20.0 * std::log10(4.0 * std::numbers::pi * frequency_hz /
                                                   kSpeedOfLight);
    return free_space_1m + 10.0 * exponent * std::log10(distance_3d_m);
}

double pathloss_inh_los_db(double frequency_ghz, double distance_3d_m)
{
    check_distance(distance_3d_m);
    if (frequency_ghz <= 0.0)
        throw ValidationError("pathloss_inh_los: frequency must be positive");
    return 32.4 + 20.0 * std::log10(frequency_ghz) + 17.3 * std::log10(distance_3d_m);
}

double pathloss_inh_nlos_db(double frequency_ghz, double distance_3d_m)
{
    const double los = pathloss_inh_los_db(frequency_ghz, distance_3d_m);
    const double nlos = 38.3 * std::log10(distance_3d_m) + 17.30 +
                        24.9 * std::log10(frequency_ghz);
    return std::max(los, nlos);
}

double link_budget_dbm(double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi,
                       double pathloss_db, double other_losses_db)
{
    return tx_power_dbm + tx_gain_dbi + rx_gain_dbi - pathloss_db - other_losses_db;
}

double noise_power_dbm(double bandwidth_hz, double density_dbm_hz, double noise_figure_db)
{
    if (bandwidth_hz <= 0.0)
        throw ValidationError("noise_power: bandwidth must be positive");
    return density_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double shannon_throughput_bps(double bandwidth_hz, double snr_db)
{
    if (bandwidth_hz <= 0.0)
        throw ValidationError("shannon_throughput: bandwidth must be positive");
    return bandwidth_hz * std::log2(1.0 + std::pow(10.0, snr_db / 10.0));
}

double fading_sample(const FadingSpec& spec, RandomStream& stream)
{
    const double x = stream.standard_normal();
    const double y = stream.standard_normal();
    if (spec.kind == FadingKind::nlos) {
        // Rayleigh envelope: exponential power with unit mean.
        return 0.5 * (x * x + y * y);
    }
    // Ricean with linear K-factor: dominant path sqrt(2K) plus diffuse
    // components, scaled to unit mean power.
    const double k = std::pow(10.0, spec.ricean_k_db / 10.0);
    const double direct = x + std::sqrt(2.0 * k);
    return (direct * direct + y * y) / (2.0 * (k + 1.0));
}

double hop_pathloss_db(const HopModel& model, double frequency_hz, double distance_m)
{
    switch (model.kind) {
    case HopModel::Kind::umi_ci:
        return pathloss_umi_db(frequency_hz, distance_m, model.exponent);
    case HopModel::Kind::inh_los:
        return pathloss_inh_los_db(frequency_hz / 1e9, distance_m);
    case HopModel::Kind::inh_nlos:
        return pathloss_inh_nlos_db(frequency_hz / 1e9, distance_m);
    }
    throw ValidationError("hop_pathloss: unknown model");
}

double cascade_received_power_dbm(const CascadeTerms& terms)
{
    if (terms.efficiency <= 0.0 || terms.efficiency > 1.0)
        throw ValidationError("cascade: efficiency must lie in (0, 1]");
    return terms.tx_power_dbm + terms.tx_gain_dbi - terms.hop1_pathloss_db +
           terms.ris_rx_gain_dbi + 10.0 * std::log10(terms.efficiency) +
           terms.ris_beam_gain_dbi - terms.hop2_pathloss_db + terms.ue_rx_gain_dbi +
           terms.fading_db;
}

LinkResult cascade_ris_link(const RadioNode& tx, const RisNode& ris, const RadioNode& ue,
                            double ris_beam_gain_dbi, double efficiency, const HopModel& hops,
                            const FadingPair& fading, double noise_figure_db)
{
    CascadeTerms terms;
    terms.tx_power_dbm = tx.tx_power_dbm;
    terms.tx_gain_dbi = tx.tx_gain_dbi;
    terms.hop1_pathloss_db =
        hop_pathloss_db(hops, tx.frequency_hz, distance_3d_m(tx.position, ris.position));
    terms.ris_rx_gain_dbi = 0.0;
    terms.efficiency = efficiency;
    terms.ris_beam_gain_dbi = ris_beam_gain_dbi;
    terms.hop2_pathloss_db =
        hop_pathloss_db(hops, tx.frequency_hz, distance_3d_m(ris.position, ue.position));
    terms.ue_rx_gain_dbi = ue.rx_gain_dbi;

    double fading_db = 0.0;
    if (fading.hop1) {
        RandomStream s = RandomStream::derive(fading.hop1->seed, 1);
        fading_db += 10.0 * std::log10(fading_sample(*fading.hop1, s));
    }
    if (fading.hop2) {
        RandomStream s = RandomStream::derive(fading.hop2->seed, 2);
        fading_db += 10.0 * std::log10(fading_sample(*fading.hop2, s));
    }
    terms.fading_db = fading_db;

    LinkResult result;
    result.pathloss_db = terms.hop1_pathloss_db + terms.hop2_pathloss_db;
    result.received_power_dbm = cascade_received_power_dbm(terms);
    result.noise_power_dbm = noise_power_dbm(ue.bandwidth_hz, -174.0, noise_figure_db);
    result.snr_db = result.received_power_dbm - result.noise_power_dbm;
    result.throughput_bps = shannon_throughput_bps(ue.bandwidth_hz, result.snr_db);
    return result;
}

} // namespace risbeam
