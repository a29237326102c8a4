#pragma once

#include <cstdint>

#include "pfq/rational.hpp"

namespace pfq {

// SplitMix64. Trials key their own substream off (seed, trial index), so
// results are order-independent and identical across platforms.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
        r.next();
        return r;
    }

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // k/d with |k| <= max_num, 1 <= d <= max_den.
    Rat rat(long max_num = 12, long max_den = 6) {
        long d = int_in(1, max_den);
        long k = int_in(-max_num, max_num);
        return Rat(k, d);
    }

    // Same, but never an integer (denominator after reduction > 1).
    Rat rat_noninteger(long max_num = 12, long max_den = 6) {
        for (;;) {
            Rat r = rat(max_num, max_den);
            if (!r.is_integer()) return r;
        }
    }

    // Noninteger rational in the open interval (lo, hi), step 1/den.
    Rat rat_in(const Rat& lo, const Rat& hi, long den = 6) {
        for (int tries = 0; tries < 4096; ++tries) {
            Rat span = hi - lo;
            long steps = int_in(1, 4 * den);
            Rat r = lo + span * Rat(steps, 4 * den + 1);
            if (!r.is_integer() && r > lo && r < hi) return r;
        }
        throw domain_error("rat_in: could not sample interval");
    }

    bool coin() { return (next() & 1) != 0; }
};

} // namespace pfq
