#include "rng.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdint>
#include <vector>

using namespace ordwalk;

namespace {

using Block = std::array<std::uint64_t, 4>;

TEST(Philox, KnownAnswerVectors) {
    // raw 4x64-10 blocks; counter is little-endian (word 0 increments first)
    struct Vector {
        Block counter;
        std::array<std::uint64_t, 2> key;
        Block want;
    };
    const std::vector<Vector> vectors = {
        {{1, 0, 0, 0},
         {0, 0},
         {0x02f4ba6408e4d89bull, 0x3dd62b0b9ca8c5b2ull, 0x1c8667a55d902e79ull,
          0x907d7a052fd5b4dcull}},
        {{1, 0, 0, 0},
         {1, 0},
         {0x4db6a27b756282dfull, 0xd944fa03babe0e2full, 0x27f872e577060d32ull,
          0x07f697696a0482a2ull}},
        {{6, 0, 0, 0},
         {7, 9},
         {0xca3338aabc68b165ull, 0xf59ac89340e9a844ull, 0x31d671c919168ce1ull,
          0x26084f673b9c63cdull}},
        {{1, 0, 0, 0},
         {0, 1},
         {0xd037f8c3f9a1d176ull, 0xc057419b4c210765ull, 0xabf13115117b0065ull,
          0x7bae035dea6ea5c0ull}},
        {{0x243f6a8885a308d4ull, 0x13198a2e03707344ull, 0xa4093822299f31d0ull,
          0x082efa98ec4e6c89ull},
         {0x452821e638d01377ull, 0xbe5466cf34e90c6cull},
         {0x4c8e672094922aa3ull, 0x527061cd2884102aull, 0xf4c265b2d783d553ull,
          0x0556e76cb0298c8dull}},
    };
    for (const Vector& v : vectors) {
        const Block got = Philox4x64::block(v.counter, v.key);
        EXPECT_EQ(got, v.want) << "counter[0]=" << v.counter[0];
    }
}

TEST(PhiloxStream, FirstWordsComeFromCounterZero) {
    PhiloxStream s(0, 0); // key = (seed, stream) = (0, 0)
    const Block b0 = Philox4x64::block({0, 0, 0, 0}, {0, 0});
    const Block b1 = Philox4x64::block({1, 0, 0, 0}, {0, 0});
    for (std::uint64_t w : b0) EXPECT_EQ(s.next_u64(), w);
    for (std::uint64_t w : b1) EXPECT_EQ(s.next_u64(), w);
}

TEST(PhiloxStream, DeterministicAndStreamSeparated) {
    PhiloxStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    bool differs_c = false, differs_d = false;
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t x = a.next_u64();
        EXPECT_EQ(x, b.next_u64());
        differs_c = differs_c || x != c.next_u64();
        differs_d = differs_d || x != d.next_u64();
    }
    EXPECT_TRUE(differs_c);
    EXPECT_TRUE(differs_d);
}

TEST(PhiloxStream, UnitUniformStaysInOpenInterval) {
    PhiloxStream s(123, 0);
    double sum = 0.0;
    constexpr int kDraws = 10000;
    for (int i = 0; i < kDraws; ++i) {
        const double u = s.next_u01();
        EXPECT_GT(u, 0.0);
        EXPECT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / kDraws, 0.5, 0.02);
}

TEST(PhiloxStream, CounterAdvancesThroughManyBlocks) {
    PhiloxStream s(5, 9);
    std::vector<std::uint64_t> direct;
    for (std::uint64_t ctr = 0; ctr < 25; ++ctr)
        for (std::uint64_t w : Philox4x64::block({ctr, 0, 0, 0}, {5, 9})) direct.push_back(w);
    for (std::uint64_t w : direct) EXPECT_EQ(s.next_u64(), w);
}

} // namespace
