// SPDX-License-Identifier: Apache-2.0

#ifndef RISBEAM_LINK_HPP
#define RISBEAM_LINK_HPP

#include <cstdint>
#include <optional>

#include "risbeam/random.hpp"

namespace risbeam {

struct Position {
    double x_m = 0.0;
    double y_m = 0.0;
    double height_m = 0.0;
};

double distance_3d_m(const Position& a, const Position& b);

struct RadioNode {
    Position position;
    double tx_power_dbm = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    double frequency_hz = 0.0;
    double bandwidth_hz = 0.0;
};

struct RisNode {
    Position position;
};

/// Close-in pathloss: 20*log10(4*pi*f/c) + 10*n*log10(d), f in Hz.
/// Valid for d >= 1 m.
double pathloss_umi_db(double frequency_hz, double distance_3d_m, double exponent);

/// 3GPP indoor-office LoS: 32.4 + 20*log10(f) + 17.3*log10(d), f in GHz
/// (the constants assume GHz). Valid for d >= 1 m.
double pathloss_inh_los_db(double frequency_ghz, double distance_3d_m);

/// 3GPP indoor-office NLoS: max(LoS, 38.3*log10(d) + 17.30 + 24.9*log10(f)),
/// f in GHz.
double pathloss_inh_nlos_db(double frequency_ghz, double distance_3d_m);

/// P_r = P_t + G_t + G_r - PL - L_o, all in dB domain.
double link_budget_dbm(double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi,
                       double pathloss_db, double other_losses_db = 0.0);

/// Thermal noise: density + 10*log10(B) + NF, density defaults to
/// -174 dBm/Hz.
double noise_power_dbm(double bandwidth_hz, double density_dbm_hz = -174.0,
                       double noise_figure_db = 0.0);

/// Shannon-Hartley: B * log2(1 + 10^(snr_db/10)), bits/s.
double shannon_throughput_bps(double bandwidth_hz, double snr_db);

enum class FadingKind { los, nlos };

/// Fast-fading draw specification. LoS paths fade Ricean with the given
/// K-factor, NLoS paths Rayleigh. Both are normalized to unit mean power.
struct FadingSpec {
    FadingKind kind = FadingKind::los;
    double ricean_k_db = 10.0;
    std::uint64_t seed = 0;
};

/// One power-gain draw (linear, unit mean) from the stream.
double fading_sample(const FadingSpec& spec, RandomStream& stream);

/// Pathloss model selector for a hop of the cascaded link.
struct HopModel {
    enum class Kind { umi_ci, inh_los, inh_nlos } kind = Kind::inh_los;
    double exponent = 2.0; // used by umi_ci only
};

double hop_pathloss_db(const HopModel& model, double frequency_hz, double distance_m);

struct LinkResult {
    double pathloss_db = 0.0; // sum over hops
    double received_power_dbm = 0.0;
    double noise_power_dbm = 0.0;
    double snr_db = 0.0;
    double throughput_bps = 0.0;
};

/// dB bookkeeping of the two-hop budget, exposed separately so the cascade
/// can be checked against a hand-chained pair of one-hop budgets.
struct CascadeTerms {
    double tx_power_dbm = 0.0;
    double tx_gain_dbi = 0.0;
    double hop1_pathloss_db = 0.0;
    double ris_rx_gain_dbi = 0.0; // 0 dBi by convention
    double efficiency = 1.0;
    double ris_beam_gain_dbi = 0.0;
    double hop2_pathloss_db = 0.0;
    double ue_rx_gain_dbi = 0.0;
    double fading_db = 0.0;
};

double cascade_received_power_dbm(const CascadeTerms& terms);

struct FadingPair {
    std::optional<FadingSpec> hop1;
    std::optional<FadingSpec> hop2;
};

/// Two-hop budget through the reflecting surface.
///
/// P_r = P_t + G_t - PL(tx->ris) + G_r(ris) + 10*log10(eff)
///       + beam_gain - PL(ris->ue) + G_r(ue) + fading terms.
///
/// `ris_beam_gain_dbi` is the pattern gain towards the UE *excluding* the
/// surface efficiency, which enters once through `efficiency` here. Both
/// hops use the same (LoS) pathloss model at the transmitter's frequency.
/// SNR and throughput use the UE bandwidth.
LinkResult cascade_ris_link(const RadioNode& tx, const RisNode& ris, const RadioNode& ue,
                            double ris_beam_gain_dbi, double efficiency, const HopModel& hops,
                            const FadingPair& fading = {}, double noise_figure_db = 0.0);

} // namespace risbeam

#endif
