#pragma once

#include <cstdint>

#include "coxspin/rational.hpp"

namespace coxspin {

/// Deterministic splitmix64 generator. Fixed algorithm so identical seeds
/// give identical samples on every platform.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    /// Nonzero integer in [-bound, bound], as a Rational.
    Rational nonzero_int(long bound) {
        long v;
        do {
            v = uniform(-bound, bound);
        } while (v == 0);
        return Rational(v);
    }

  private:
    uint64_t state_;
};

}  // namespace coxspin
