// Seed-to-state initialization in pure integer arithmetic.
//
// Integer rewrite of the Marsaglia-Zaman-Tsang initializer as used by
// LAMMPS-family codes: bits are accumulated at weight 2^(w-1), 2^(w-2), ...
// instead of 0.5, 0.25, ..., then shifted down to a 24-bit lane. Produces
// exactly the state of the floating-point procedure under x -> x * 2^24.
#pragma once

#include <cstdint>
#include <stdexcept>

#include "ranmar/core.hpp"

namespace ranmar {

inline constexpr std::uint32_t max_seed = 900000000u;

inline RanmarState init(std::uint32_t seed) {
    if (seed > max_seed)
        throw std::invalid_argument("ranmar: seed must be in [0, 900000000]");

    // Two-part seed expansion. seed == 0 makes (seed - 1) negative; the
    // quotients/remainders below follow C++ truncating semantics, matching
    // the int arithmetic of the floating-point original.
    const int ij = (static_cast<int>(seed) - 1) / 30082;
    const int kl = (static_cast<int>(seed) - 1) - 30082 * ij;
    int ii = (ij / 177) % 177 + 2;
    int jj = ij % 177 + 2;
    int kk = (kl / 169) % 178 + 1;
    int ll = kl % 169;

    RanmarState s{};
    for (int lane = 0; lane < long_lag; ++lane) {
        std::uint32_t acc = 0;
        std::uint32_t t = 1u << 31;  // 0.5 in w=32 fixed point
        for (int bit = 0; bit < 24; ++bit) {
            const int mm = ((ii * jj) % 179) * kk % 179;
            ii = jj;
            jj = kk;
            kk = mm;
            ll = (53 * ll + 1) % 169;
            if ((ll * mm) % 64 >= 32) acc += t;
            t >>= 1;
        }
        s.fib.lane[lane] = acc >> 8;  // w - 24
    }
    s.fib.i = long_lag - 1;
    s.fib.j = short_lag - 1;
    s.arith.v = arith_start;
    return s;
}

}  // namespace ranmar
