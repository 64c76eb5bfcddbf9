// SPDX-License-Identifier: Apache-2.0

#ifndef RISBEAM_RANDOM_HPP
#define RISBEAM_RANDOM_HPP

#include <cstdint>
#include <random>

namespace risbeam {

/// Seeded random stream for fading draws.
///
/// Parallel Monte-Carlo consumers must not share a stream; derive one per
/// work item with derive(seed, stream_id). The split rule is a splitmix64
/// hash of the base seed combined with the stream id, so streams with
/// distinct ids are statistically independent and reproducible.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    static std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static RandomStream derive(std::uint64_t seed, std::uint64_t stream_id)
    {
        return RandomStream(splitmix64(splitmix64(seed) ^ stream_id));
    }

    double standard_normal() { return normal_(engine_); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace risbeam

#endif
