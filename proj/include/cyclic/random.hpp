#pragma once

#include <array>
#include <cstdint>

namespace cyclic {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// Output is a pure function of (key, counter), so any sample can be
/// regenerated from its global index without replaying a sequence.
class Philox4x32 {
  public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter generate(Counter ctr, Key key) noexcept {
        for (int round = 0; round < 10; ++round) {
            ctr = single_round(ctr, key);
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }

  private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static constexpr Counter single_round(const Counter& c, const Key& k) noexcept {
        const std::uint64_t p0 = std::uint64_t{kMul0} * c[0];
        const std::uint64_t p1 = std::uint64_t{kMul1} * c[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const auto lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const auto lo1 = static_cast<std::uint32_t>(p1);
        return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
};

/// Stream of uniforms for one sample, keyed by (seed, global sample index).
///
/// Each Philox block yields two doubles; the block number is the third
/// counter word, so a sample may draw up to 2^33 values.
class SampleStream {
  public:
    SampleStream(std::uint64_t seed, std::uint64_t sample_index) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          index_(sample_index) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept {
        if (buffered_ == 0) refill();
        return buffer_[--buffered_];
    }

  private:
    static double to_unit(std::uint32_t hi, std::uint32_t lo) noexcept {
        const std::uint64_t bits = (std::uint64_t{hi} << 32) | lo;
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

    void refill() noexcept {
        const auto out = Philox4x32::generate(
            {static_cast<std::uint32_t>(index_), static_cast<std::uint32_t>(index_ >> 32), block_++, 0u}, key_);
        // Consumed back to front by uniform().
        buffer_[1] = to_unit(out[0], out[1]);
        buffer_[0] = to_unit(out[2], out[3]);
        buffered_ = 2;
    }

    Philox4x32::Key key_;
    std::uint64_t index_;
    std::uint32_t block_ = 0;
    std::array<double, 2> buffer_{};
    int buffered_ = 0;
};

}  // namespace cyclic
