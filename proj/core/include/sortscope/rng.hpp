#pragma once

#include <cstdint>

namespace sortscope {

/// PCG32 (O'Neill, pcg-random.org, XSH-RR 64/32 variant). Chosen as the
/// project-wide random source because its output is fully specified by
/// (seed, stream): fixtures regenerate bit-identically on any platform or
/// reimplementation, unlike std::uniform_* distributions.
class Pcg32 {
public:
    explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0) {
        state_ = 0u;
        inc_ = (stream << 1u) | 1u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    /// Uniform in [0, bound) via Lemire's multiply-shift with rejection.
    std::uint32_t next_below(std::uint32_t bound) {
        if (bound == 0) return 0;
        std::uint64_t m = std::uint64_t(next_u32()) * bound;
        std::uint32_t low = static_cast<std::uint32_t>(m);
        if (low < bound) {
            std::uint32_t threshold = (0u - bound) % bound;
            while (low < threshold) {
                m = std::uint64_t(next_u32()) * bound;
                low = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32);
    }

    /// Uniform double in [0, 1) with 32 bits of resolution.
    double next_double() { return next_u32() * 0x1p-32; }

    bool bernoulli(double p) { return next_double() < p; }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

/// In-place Fisher-Yates with Pcg32; deterministic everywhere, unlike
/// std::shuffle.
template <typename Vec>
void shuffle(Vec& v, Pcg32& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = rng.next_below(static_cast<std::uint32_t>(i));
        using std::swap;
        swap(v[i - 1], v[j]);
    }
}

}  // namespace sortscope
