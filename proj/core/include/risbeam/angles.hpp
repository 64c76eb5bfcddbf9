// SPDX-License-Identifier: Apache-2.0

#ifndef RISBEAM_ANGLES_HPP
#define RISBEAM_ANGLES_HPP

#include <cmath>
#include <numbers>

namespace risbeam {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduce an angle to [0, 2*pi).
inline double wrap_two_pi(double angle_rad)
{
    double a = std::fmod(angle_rad, kTwoPi);
    if (a < 0.0)
        a += kTwoPi;
    // fmod can return exactly 2*pi after the negative fixup
    return (a == kTwoPi) ? 0.0 : a;
}

/// Shortest angular distance between two phases on the circle, in [0, pi].
inline double circular_distance(double a_rad, double b_rad)
{
    double d = std::fabs(wrap_two_pi(a_rad) - wrap_two_pi(b_rad));
    return (d > std::numbers::pi) ? kTwoPi - d : d;
}

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Great-circle angle between two directions given in polar coordinates
/// (theta from broadside, phi azimuth).
inline double angular_separation(double theta1, double phi1, double theta2, double phi2)
{
    double c = std::sin(theta1) * std::sin(theta2) * std::cos(phi1 - phi2) +
               std::cos(theta1) * std::cos(theta2);
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

} // namespace risbeam

#endif
