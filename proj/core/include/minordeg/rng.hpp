#pragma once

#include "minordeg/bigint.hpp"
#include "minordeg/errors.hpp"

#include <cstdint>

namespace minordeg {

// Counter-based splittable generator. Each (seed, stream) pair yields an
// independent deterministic sequence, so parallel tasks can derive their
// stream from the task index and produce results that do not depend on the
// thread schedule. The core step is the splitmix64 finalizer, which is
// platform-stable (pure 64-bit arithmetic, no std::distribution involved).
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(mix(seed + 0x9E3779B97F4A7C15ULL) ^ mix(stream + 0xD1B54A32D192ED03ULL))) {}

    Rng derive(std::uint64_t stream) const { return Rng(state_, stream); }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform value in [0, n). Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t n) {
        require(n > 0, "EmptyRange", "below(0)");
        if ((n & (n - 1)) == 0) return next() & (n - 1);
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            std::uint64_t r = next();
            if (r < limit) return r % n;
        }
    }

    // Uniform big integer in [0, n), by rejection over whole 64-bit limbs.
    Int below_big(const Int& n) {
        require(n > 0, "EmptyRange", "below_big(<=0)");
        if (n <= UINT64_MAX) return Int(below(static_cast<std::uint64_t>(n)));
        unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
        unsigned words = (bits + 63) / 64;
        for (;;) {
            Int r = 0;
            for (unsigned i = 0; i < words; ++i) {
                r <<= 64;
                r |= Int(next());
            }
            r >>= words * 64 - bits;
            if (r < n) return r;
        }
    }

    bool coin() { return next() & 1; }

    // Fisher-Yates over indices 0..n-1.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace minordeg
