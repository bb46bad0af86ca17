// RANMAR combined generator (Marsaglia-Zaman-Tsang; F. James,
// Comp. Phys. Comm. 60 (1990) 329) in exact 24-bit integer arithmetic.
//
// The classic implementation keeps the state as 24-bit-precision doubles
// and subtracts mod 1. Here the state is the isomorphic image under
// x -> x * 2^24: lanes are residues mod 2^24, the arithmetic-sequence
// component a residue mod 2^24 - 3, and every output is a 24-bit integer
// u with u / 2^24 equal to the classic generator's double, bit for bit.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace ranmar {

inline constexpr int long_lag = 97;   // lagged Fibonacci lag r
inline constexpr int short_lag = 33;  // lagged Fibonacci lag s
inline constexpr unsigned word_bits = 24;
inline constexpr std::uint32_t word_mask = 0x00FFFFFFu;  // 2^24 - 1

inline constexpr std::uint32_t arith_mod = 16777213u;   // 2^24 - 3, prime
inline constexpr std::uint32_t arith_delta = 7654321u;  // per-step decrement
inline constexpr std::uint32_t arith_start = 362436u;   // initial residue

// Lagged Fibonacci component: 97 residues mod 2^24 in a ring buffer with
// two descending cursors. Lanes are stored fully reduced, and the cursors
// keep constant separation (i - j) mod 97 == 64.
struct FibState {
    std::array<std::uint32_t, long_lag> lane{};
    int i = long_lag - 1;   // 0-based; the serialized form is 1-based
    int j = short_lag - 1;

    bool operator==(const FibState&) const = default;
};

// Arithmetic-sequence component: one residue v in [0, 2^24 - 3).
struct ArithState {
    std::uint32_t v = arith_start;

    bool operator==(const ArithState&) const = default;
};

struct RanmarState {
    FibState fib;
    ArithState arith;

    bool operator==(const RanmarState&) const = default;
};

// Advances the generator one step and returns the 24-bit output.
// Unsigned wraparound plus masking replaces the classic +1.0 fix-ups:
// (u - v) mod 2^24 == ((u mod 2^24) - (v mod 2^24)) mod 2^24.
inline std::uint32_t step(RanmarState& s) noexcept {
    FibState& f = s.fib;
    const std::uint32_t u = (f.lane[f.i] - f.lane[f.j]) & word_mask;
    f.lane[f.i] = u;
    f.i = (f.i == 0) ? long_lag - 1 : f.i - 1;
    f.j = (f.j == 0) ? long_lag - 1 : f.j - 1;

    std::uint32_t v = s.arith.v + (arith_mod - arith_delta);
    if (v >= arith_mod) v -= arith_mod;
    s.arith.v = v;

    return (u - v) & word_mask;
}

// One step, output scaled to [0,1). Exact in binary64: the output has at
// most 24 significand bits and the scale is a power of two.
inline double next_f64(RanmarState& s) noexcept {
    return static_cast<double>(step(s)) * 0x1p-24;
}

// Maps a 24-bit output to its [0,1) value, u / 2^24, exactly.
inline double value_of(std::uint32_t u24) {
    if (u24 > word_mask)
        throw std::invalid_argument("ranmar: value_of argument exceeds 24 bits");
    return static_cast<double>(u24) * 0x1p-24;
}

}  // namespace ranmar
