#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "swipt/params.hpp"

namespace swipt {

/// One quasi-static block: squared gains of the B-F, B-N and N-F links.
/// The N-F link is reciprocal, so `z` serves both relay directions.
struct ChannelRealization {
    double x = 0.0; // |h_BF|^2
    double y = 0.0; // |h_BN|^2
    double z = 0.0; // |h_NF|^2
};

/// Seed of substream `index` derived from a base seed (seed XOR splitmix64(index)).
/// Pure, so any worker can reconstruct any substream.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Draws exponential squared gains by inverse CDF from a 64-bit Mersenne
/// Twister. The uniform-to-double mapping is done by hand so the stream is
/// bit-identical across standard library implementations.
class ChannelSampler {
public:
    explicit ChannelSampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on (0, 1], 53-bit resolution; never returns 0.
    double uniform()
    {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Exponential with the given mean.
    double exponential(double mean) { return -mean * std::log(uniform()); }

    ChannelRealization sample(const SystemParams& p)
    {
        ChannelRealization ch;
        ch.x = exponential(p.lambda_BF);
        ch.y = exponential(p.lambda_BN);
        ch.z = exponential(p.lambda_NF);
        return ch;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace swipt
