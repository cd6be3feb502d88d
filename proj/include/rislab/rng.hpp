#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>

namespace rislab {

// Philox4x64-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3", SC 2011). The output is a pure function of
// (counter, key), so any trial and substream can be addressed directly and
// results never depend on which worker produced them.
struct Philox4x64 {
    static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> ctr,
                                              std::array<std::uint64_t, 2> key)
    {
        for (int round = 0; round < 10; ++round) {
            const auto [lo0, hi0] = mulhilo(kMul0, ctr[0]);
            const auto [lo1, hi1] = mulhilo(kMul1, ctr[2]);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }

private:
    static std::pair<std::uint64_t, std::uint64_t> mulhilo(std::uint64_t a, std::uint64_t b)
    {
        const auto p = static_cast<unsigned __int128>(a) * b;
        return {static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(p >> 64)};
    }
};

// One logical random stream addressed by (seed, trial, substream). Streams
// with distinct addresses are independent; the draw sequence within a stream
// is fixed, so identical addresses replay identical values.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t trial, std::uint64_t substream = 0)
        : key_{seed, substream}, trial_(trial)
    {
    }

    std::uint64_t next_u64()
    {
        if (pos_ == 4) {
            buffer_ = Philox4x64::block({block_index_++, trial_, 0, 0}, key_);
            pos_ = 0;
        }
        return buffer_[pos_++];
    }

    // Uniform on [0, 1), 53 random mantissa bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1], safe as a logarithm argument.
    double next_unit_positive()
    {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on [-pi, pi).
    double next_angle() { return (2.0 * next_unit() - 1.0) * std::numbers::pi; }

    // Circularly-symmetric complex normal with E|z|^2 = variance (Box-Muller).
    std::complex<double> next_cnormal(double variance)
    {
        const double u1 = next_unit_positive();
        const double u2 = next_unit();
        const double r = std::sqrt(-variance * std::log(u1));
        const double arg = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(arg), r * std::sin(arg)};
    }

private:
    std::array<std::uint64_t, 2> key_;
    std::uint64_t trial_;
    std::uint64_t block_index_ = 0;
    std::array<std::uint64_t, 4> buffer_{};
    int pos_ = 4;
};

// Substream labels used across the library so that consumers drawing from the
// same (seed, trial) never collide.
inline constexpr std::uint64_t kChannelSubstream = 0;
inline constexpr std::uint64_t kPhaseSubstream = 1;
inline constexpr std::uint64_t kDestinationSubstream = 2;

} // namespace rislab
