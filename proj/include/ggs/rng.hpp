#pragma once

#include <cstdint>

namespace ggs {

/// xorshift64* stream: state update by shifts 12/25/27, output multiplied by
/// 0x2545F4914F6CDD1D. The seed passes through one splitmix64 mixing step so
/// that any seed (including 0) yields a valid nonzero state. Identical seeds
/// give identical streams on every platform.
class XorShift64Star {
public:
    explicit XorShift64Star(std::uint64_t seed) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        state_ = z ^ (z >> 31);
        if (state_ == 0) state_ = 0x2545F4914F6CDD1Dull;
    }

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

private:
    std::uint64_t state_;
};

}  // namespace ggs
