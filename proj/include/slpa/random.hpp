#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace slpa {

// Deterministic random source. std::mt19937_64 has a fully specified output
// sequence; the derived draws below avoid std::*_distribution and
// std::shuffle, whose algorithms are implementation-defined, so one seed
// reproduces the same stream on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Unbiased integer in [0, bound) by rejection. bound <= 1 returns 0
    // without consuming the generator.
    std::uint64_t bounded(std::uint64_t bound) {
        if (bound <= 1)
            return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = gen_();
        while (v >= limit)
            v = gen_();
        return v % bound;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Fisher-Yates, one bounded() call per position from the back.
    template <typename T>
    void shuffle(std::vector<T> &v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(bounded(i))]);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace slpa
