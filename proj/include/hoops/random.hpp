#pragma once

#include <cstdint>

#include "hoops/rational.hpp"

namespace hoops {

// Deterministic sampling support. Every draw sequence is a pure function of
// (seed, index), so parallel and repeated runs see identical streams without
// sharing generator state.

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

/// Stream of deterministic draws for sample #index of run `seed`.
class DrawRng {
public:
    DrawRng(std::uint64_t seed, std::uint64_t index) : sm_{mix(seed, index)} {}

    std::uint64_t bits() { return sm_.next(); }

    /// Uniform-ish value in [0, n). Modulo bias is irrelevant for test-bed
    /// sampling and keeps the stream platform-stable.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : sm_.next() % n; }

    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (sm_.next() & 1) != 0; }

    /// Nonzero-denominator rational with |num| <= bound, 1 <= den <= bound.
    Rational rational(long long bound, bool nonnegative = false) {
        long long den = range(1, bound);
        long long num = nonnegative ? range(0, bound) : range(-bound, bound);
        return Rational(num, den);
    }

    /// Strictly positive rational with num, den in [1, bound].
    Rational positive_rational(long long bound) {
        return Rational(range(1, bound), range(1, bound));
    }

private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 a{seed ^ 0x6a09e667f3bcc909ULL};
        std::uint64_t s = a.next();
        SplitMix64 b{s + index * 0x9e3779b97f4a7c15ULL};
        return b.next();
    }

    SplitMix64 sm_;
};

} // namespace hoops
