#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace ordwalk {

// Philox4x64-10 counter-based generator (standard constants: multipliers
// 0xD2E7470EE14C6C93 / 0xCA5A826395121157, Weyl keys 0x9E3779B97F4A7C15 /
// 0xBB67AE8584CAA73B, ten rounds with the key bumped after each round).
struct Philox4x64 {
    static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> x,
                                              std::array<std::uint64_t, 2> k) {
        constexpr std::uint64_t m0 = 0xD2E7470EE14C6C93ULL, m1 = 0xCA5A826395121157ULL;
        constexpr std::uint64_t w0 = 0x9E3779B97F4A7C15ULL, w1 = 0xBB67AE8584CAA73BULL;
        for (int round = 0; round < 10; ++round) {
            const unsigned __int128 p0 = static_cast<unsigned __int128>(m0) * x[0];
            const unsigned __int128 p1 = static_cast<unsigned __int128>(m1) * x[2];
            x = {static_cast<std::uint64_t>(p1 >> 64) ^ x[1] ^ k[0],
                 static_cast<std::uint64_t>(p1),
                 static_cast<std::uint64_t>(p0 >> 64) ^ x[3] ^ k[1],
                 static_cast<std::uint64_t>(p0)};
            k[0] += w0;
            k[1] += w1;
        }
        return x;
    }
};

// One independent stream per (seed, stream) key; blocks are consumed at counters
// 0, 1, 2, ... so a stream's output never depends on how work is partitioned.
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream) : key_{seed, stream} {}

    std::uint64_t next_u64() {
        if (pos_ == 4) {
            buf_ = Philox4x64::block({counter_++, 0, 0, 0}, key_);
            pos_ = 0;
        }
        return buf_[static_cast<std::size_t>(pos_++)];
    }

    // Double in the open interval (0,1), 53-bit resolution.
    double next_u01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> buf_{};
    std::uint64_t counter_ = 0;
    int pos_ = 4;
};

} // namespace ordwalk
