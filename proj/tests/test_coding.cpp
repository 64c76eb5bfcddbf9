// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "risbeam/angles.hpp"
#include "risbeam/coding.hpp"
#include "risbeam/error.hpp"

using namespace risbeam;

namespace {

const UnitCellGrid kGrid = build_grid(24, 24, 1.0 / 3.0, 28e9);

std::vector<BeamTarget> random_targets(std::mt19937_64& rng, int count)
{
    std::uniform_real_distribution<double> theta(0.05, 1.4);
    std::uniform_real_distribution<double> phi(0.0, kTwoPi - 1e-6);
    std::vector<BeamTarget> out;
    while (static_cast<int>(out.size()) < count) {
        BeamTarget t(theta(rng), phi(rng));
        bool dup = false;
        for (const auto& u : out)
            dup = dup || (circular_distance(t.phi_rad, u.phi_rad) < 1e-3 &&
                          std::fabs(t.theta_rad - u.theta_rad) < 1e-3);
        if (!dup)
            out.push_back(t);
    }
    return out;
}

} // namespace

TEST_CASE("diagonal 45/45 target gives the pi*(m+n)/3 gradient")
{
    // cos(phi)sin(theta) = sin(phi)sin(theta) = 1/2 at (pi/4, pi/4), so
    // with D_u = lambda/3 the profile is pi*(m+n)/3 mod 2*pi (1-based m, n).
    const PhaseProfile p = single_beam_profile(kGrid, BeamTarget(std::numbers::pi / 4,
                                                                 std::numbers::pi / 4));
    for (int m = 1; m <= kGrid.m_count; ++m)
        for (int n = 1; n <= kGrid.n_count; ++n)
            CHECK(circular_distance(p.phase(m - 1, n - 1),
                                    std::numbers::pi * (m + n) / 3.0) < 1e-9);
}

TEST_CASE("broadside target needs no phase gradient")
{
    const PhaseProfile p = single_beam_profile(kGrid, BeamTarget(0.0, 1.0));
    for (const double v : p.phase.storage())
        CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("specular target of an oblique incidence cancels the gradient")
{
    const IncidentWave incidence(0.4, 1.2);
    const PhaseProfile p = single_beam_profile(kGrid, BeamTarget(0.4, 1.2), incidence);
    for (const double v : p.phase.storage())
        CHECK(std::min(v, kTwoPi - v) < 1e-9);
}

TEST_CASE("single-beam profiles are linear along both axes")
{
    std::mt19937_64 rng(7);
    for (const BeamTarget& t : random_targets(rng, 6)) {
        const PhaseProfile p = single_beam_profile(kGrid, t);
        const double dm = circular_distance(p.phase(1, 0), p.phase(0, 0));
        const double dn = circular_distance(p.phase(0, 1), p.phase(0, 0));
        for (int m = 0; m + 1 < kGrid.m_count; ++m)
            for (int n = 0; n < kGrid.n_count; ++n)
                CHECK(circular_distance(p.phase(m + 1, n), p.phase(m, n)) ==
                      doctest::Approx(dm).epsilon(1e-9));
        for (int m = 0; m < kGrid.m_count; ++m)
            for (int n = 0; n + 1 < kGrid.n_count; ++n)
                CHECK(circular_distance(p.phase(m, n + 1), p.phase(m, n)) ==
                      doctest::Approx(dn).epsilon(1e-9));
    }
}

TEST_CASE("superpose with one target has unit amplitude and the single-beam phase")
{
    const BeamTarget t(0.6, 2.0);
    const ComplexProfile c = superpose(kGrid, std::vector<BeamTarget>{t});
    const PhaseProfile single = single_beam_profile(kGrid, t);
    for (std::size_t i = 0; i < c.amplitude.rows(); ++i) {
        for (std::size_t j = 0; j < c.amplitude.cols(); ++j) {
            CHECK(c.amplitude(i, j) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(circular_distance(c.phase(i, j), single.phase(i, j)) < 1e-9);
        }
    }
}

TEST_CASE("two-target amplitude follows the two-phasor closed form")
{
    const BeamTarget a(std::numbers::pi / 4, std::numbers::pi / 4);
    const BeamTarget b(std::numbers::pi / 4, std::numbers::pi / 2);
    const ComplexProfile c = superpose(kGrid, std::vector<BeamTarget>{a, b});
    const PhaseProfile pa = single_beam_profile(kGrid, a);
    const PhaseProfile pb = single_beam_profile(kGrid, b);
    // |e^{ja} + e^{jb}| = 2*|cos((a-b)/2)|; the normalization maximum is 2
    // because some cell aligns the pair to machine precision on this grid.
    double max_amp = 0.0;
    for (std::size_t i = 0; i < c.amplitude.rows(); ++i)
        for (std::size_t j = 0; j < c.amplitude.cols(); ++j)
            max_amp = std::max(max_amp, std::abs(std::polar(1.0, pa.phase(i, j)) +
                                                 std::polar(1.0, pb.phase(i, j))));
    for (std::size_t i = 0; i < c.amplitude.rows(); ++i) {
        for (std::size_t j = 0; j < c.amplitude.cols(); ++j) {
            const double delta = pa.phase(i, j) - pb.phase(i, j);
            const double expected = 2.0 * std::fabs(std::cos(delta / 2.0)) / max_amp;
            CHECK(c.amplitude(i, j) == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("destructive cells get zero amplitude and the tie-break phase")
{
    // Mirror pair at theta = asin(3/4): the combined gradient steps by pi
    // per m-cell, so odd columns cancel exactly.
    const double theta = std::asin(0.75);
    const std::vector<BeamTarget> pair{BeamTarget(theta, 0.0), BeamTarget(theta, std::numbers::pi)};
    const ComplexProfile c = superpose(kGrid, pair);
    bool saw_destructive = false;
    for (int m = 1; m <= kGrid.m_count; ++m) {
        for (int n = 1; n <= kGrid.n_count; ++n) {
            if (m % 2 == 1) {
                saw_destructive = true;
                CHECK(c.amplitude(m - 1, n - 1) == doctest::Approx(0.0).epsilon(1e-9));
                CHECK(c.phase(m - 1, n - 1) == 0.0); // pinned by the tie-break rule
            }
        }
    }
    CHECK(saw_destructive);

    const PhaseProfile po = phase_only_profile(kGrid, pair);
    for (int m = 1; m <= kGrid.m_count; m += 2)
        for (int n = 1; n <= kGrid.n_count; ++n)
            CHECK(po.phase(m - 1, n - 1) == 0.0);
}

TEST_CASE("phase_only with one target equals the single-beam profile exactly")
{
    const BeamTarget t(0.8, 4.0);
    const PhaseProfile po = phase_only_profile(kGrid, std::vector<BeamTarget>{t});
    const PhaseProfile single = single_beam_profile(kGrid, t);
    for (std::size_t i = 0; i < po.phase.rows(); ++i)
        for (std::size_t j = 0; j < po.phase.cols(); ++j)
            CHECK(circular_distance(po.phase(i, j), single.phase(i, j)) < 1e-12);
}

TEST_CASE("symmetric pair reduces to the circular midpoint of the two gradients")
{
    // arg(e^{ja} + e^{jb}) is the midpoint of the shorter arc between a and
    // b; checked against that closed form rather than against another
    // phasor sum.
    const double phi0 = 0.7;
    const BeamTarget a(0.5, phi0);
    const BeamTarget b(0.5, kTwoPi - phi0);
    const PhaseProfile po = phase_only_profile(kGrid, std::vector<BeamTarget>{a, b});
    const PhaseProfile pa = single_beam_profile(kGrid, a);
    const PhaseProfile pb = single_beam_profile(kGrid, b);
    for (std::size_t i = 0; i < po.phase.rows(); ++i) {
        for (std::size_t j = 0; j < po.phase.cols(); ++j) {
            double diff = pa.phase(i, j) - pb.phase(i, j); // signed arc b -> a
            while (diff > std::numbers::pi)
                diff -= kTwoPi;
            while (diff <= -std::numbers::pi)
                diff += kTwoPi;
            if (std::fabs(std::fabs(diff) - std::numbers::pi) < 1e-9)
                continue; // destructive: covered by the tie-break test
            const double midpoint = wrap_two_pi(pb.phase(i, j) + diff / 2.0);
            CHECK(circular_distance(po.phase(i, j), midpoint) < 1e-9);
        }
    }
}

TEST_CASE("multi-beam profiles are invariant under target permutation")
{
    std::mt19937_64 rng(11);
    const std::vector<BeamTarget> targets = random_targets(rng, 4);
    std::vector<BeamTarget> shuffled = targets;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);

    const ComplexProfile c1 = superpose(kGrid, targets);
    const ComplexProfile c2 = superpose(kGrid, shuffled);
    for (std::size_t i = 0; i < c1.amplitude.rows(); ++i) {
        for (std::size_t j = 0; j < c1.amplitude.cols(); ++j) {
            CHECK(c1.amplitude(i, j) == doctest::Approx(c2.amplitude(i, j)).epsilon(1e-10));
            CHECK(circular_distance(c1.phase(i, j), c2.phase(i, j)) < 1e-9);
        }
    }

    // SDM is ordered by construction (band k belongs to target k), so only
    // the superposition coders are permutation invariant.
    const PhaseProfile p1 = phase_only_profile(kGrid, targets);
    const PhaseProfile p2 = phase_only_profile(kGrid, shuffled);
    for (std::size_t i = 0; i < p1.phase.rows(); ++i)
        for (std::size_t j = 0; j < p1.phase.cols(); ++j)
            CHECK(circular_distance(p1.phase(i, j), p2.phase(i, j)) < 1e-9);
}

TEST_CASE("superposition modulus stays within [0, K]")
{
    std::mt19937_64 rng(13);
    for (int k = 1; k <= 6; ++k) {
        const auto targets = random_targets(rng, k);
        const ComplexProfile c = superpose(kGrid, targets);
        // amplitudes are normalized; reconstruct the raw modulus bound via
        // the phasor sum of the individual profiles
        std::vector<PhaseProfile> singles;
        for (const auto& t : targets)
            singles.push_back(single_beam_profile(kGrid, t));
        for (std::size_t i = 0; i < c.amplitude.rows(); ++i) {
            for (std::size_t j = 0; j < c.amplitude.cols(); ++j) {
                std::complex<double> s{0.0, 0.0};
                for (const auto& p : singles)
                    s += std::polar(1.0, p.phase(i, j));
                CHECK(std::abs(s) <= k + 1e-9);
                CHECK(c.amplitude(i, j) <= 1.0 + 1e-12);
                CHECK(c.amplitude(i, j) >= 0.0);
            }
        }
    }
}

TEST_CASE("superpose rejects empty and duplicate target lists")
{
    CHECK_THROWS_AS(superpose(kGrid, std::vector<BeamTarget>{}), ValidationError);
    const BeamTarget t(0.5, 0.5);
    CHECK_THROWS_AS(superpose(kGrid, std::vector<BeamTarget>{t, t}), ValidationError);
    const std::vector<double> weights{1.0};
    CHECK_THROWS_AS(
        superpose(kGrid, std::vector<BeamTarget>{t, BeamTarget(0.6, 0.5)}, weights),
        ValidationError);
}

TEST_CASE("sdm splits 24 rows into the documented bands")
{
    const BeamTarget a(std::numbers::pi / 4, std::numbers::pi / 4);
    const BeamTarget b(std::numbers::pi / 4, std::numbers::pi / 2);

    SUBCASE("two targets: rows 1-12 and 13-24")
    {
        const PhaseProfile p = sdm_partition_profile(kGrid, std::vector<BeamTarget>{a, b},
                                                     PartitionAxis::row);
        const PhaseProfile pa = single_beam_profile(kGrid, a);
        const PhaseProfile pb = single_beam_profile(kGrid, b);
        for (int m = 0; m < 24; ++m)
            for (int n = 0; n < 24; ++n)
                CHECK(p.phase(m, n) == ((m < 12) ? pa.phase(m, n) : pb.phase(m, n)));
    }
    SUBCASE("single target equals the single-beam profile")
    {
        const PhaseProfile p =
            sdm_partition_profile(kGrid, std::vector<BeamTarget>{a}, PartitionAxis::row);
        const PhaseProfile pa = single_beam_profile(kGrid, a);
        for (int m = 0; m < 24; ++m)
            for (int n = 0; n < 24; ++n)
                CHECK(p.phase(m, n) == pa.phase(m, n));
    }
    SUBCASE("24 targets: one row each")
    {
        std::mt19937_64 rng(3);
        const auto targets = random_targets(rng, 24);
        const PhaseProfile p = sdm_partition_profile(kGrid, targets, PartitionAxis::row);
        for (int m = 0; m < 24; ++m) {
            const PhaseProfile pm = single_beam_profile(kGrid, targets[m]);
            for (int n = 0; n < 24; ++n)
                CHECK(p.phase(m, n) == pm.phase(m, n));
        }
    }
    SUBCASE("remainders go to the earlier bands")
    {
        std::mt19937_64 rng(5);
        const auto targets = random_targets(rng, 5); // 24 = 5+5+5+5+4
        const PhaseProfile p = sdm_partition_profile(kGrid, targets, PartitionAxis::row);
        const int band_of_row[24] = {0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 2, 2,
                                     2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4};
        for (int m = 0; m < 24; ++m) {
            const PhaseProfile pk = single_beam_profile(kGrid, targets[band_of_row[m]]);
            for (int n = 0; n < 24; ++n)
                CHECK(p.phase(m, n) == pk.phase(m, n));
        }
    }
    SUBCASE("column axis splits along n")
    {
        const PhaseProfile p = sdm_partition_profile(kGrid, std::vector<BeamTarget>{a, b},
                                                     PartitionAxis::column);
        const PhaseProfile pa = single_beam_profile(kGrid, a);
        const PhaseProfile pb = single_beam_profile(kGrid, b);
        for (int m = 0; m < 24; ++m)
            for (int n = 0; n < 24; ++n)
                CHECK(p.phase(m, n) == ((n < 12) ? pa.phase(m, n) : pb.phase(m, n)));
    }
    SUBCASE("more targets than rows is rejected")
    {
        std::mt19937_64 rng(9);
        CHECK_THROWS_AS(
            sdm_partition_profile(kGrid, random_targets(rng, 25), PartitionAxis::row),
            ValidationError);
    }
}

TEST_CASE("every cell belongs to exactly one sdm band")
{
    // Marker targets: band k is identified by its unique constant gradient.
    std::mt19937_64 rng(17);
    for (int k : {2, 3, 5, 7}) {
        const auto targets = random_targets(rng, k);
        const PhaseProfile p = sdm_partition_profile(kGrid, targets, PartitionAxis::row);
        std::vector<PhaseProfile> singles;
        for (const auto& t : targets)
            singles.push_back(single_beam_profile(kGrid, t));
        for (int m = 0; m < 24; ++m) {
            for (int n = 0; n < 24; ++n) {
                int owners = 0;
                for (const auto& s : singles)
                    owners += (p.phase(m, n) == s.phase(m, n)) ? 1 : 0;
                CHECK(owners >= 1);
            }
        }
    }
}

TEST_CASE("tdm subframe length")
{
    CHECK(tdm_subframe_length(TdmBudget(10, 90e-6, 10e-6)) == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(tdm_subframe_length(TdmBudget(1, 1e-3, 0.0)) == doctest::Approx(1e-3).epsilon(1e-12));
    // 10 * (90 + 20) us = 1.1 ms, exceeding the 1 ms budget
    CHECK(tdm_subframe_length(TdmBudget(10, 90e-6, 20e-6)) == doctest::Approx(1.1e-3).epsilon(1e-12));
    CHECK_THROWS_AS(TdmBudget(0, 1e-6, 1e-6), ValidationError);
    CHECK_THROWS_AS(TdmBudget(10, 0.0, 1e-6), ValidationError);
}

TEST_CASE("targets outside the hemisphere are rejected")
{
    CHECK_THROWS_AS(BeamTarget(std::numbers::pi / 2, 0.0), ValidationError);
    CHECK_THROWS_AS(BeamTarget(-0.1, 0.0), ValidationError);
    CHECK_THROWS_AS(BeamTarget(0.5, kTwoPi), ValidationError);
    CHECK_THROWS_AS(IncidentWave(2.0, 0.0), ValidationError);
}
