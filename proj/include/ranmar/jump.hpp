// Exact J-step jump-ahead.
//
// The lagged Fibonacci component is linear: one step multiplies the state
// row vector by the companion matrix A of u_n = u_{n-97} - u_{n-33}
// (mod 2^24). By Cayley-Hamilton A^J = P_J(A) with P_J = t^J mod phi(t),
// so a jump is one modular exponentiation in the polynomial ring plus a
// Horner evaluation of u * P_J(A) using repeated multiply-by-A, O(r^2)
// with one accumulator vector. The arithmetic-sequence component jumps in
// closed form from J mod m alone. Together these advance the generator by
// any J -- 2^120 is as cheap as 2^20 per bit -- which is what makes
// provably disjoint parallel streams practical.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ranmar/core.hpp"
#include "ranmar/init.hpp"
#include "ranmar/jumpcount.hpp"
#include "ranmar/polyring.hpp"

namespace ranmar {

// Fibonacci lanes in recurrence order: u[0] is the next value consumed in
// the u_{n-97} slot, u[64] the next consumed in the u_{n-33} slot.
using CanonicalFibVector = std::array<std::uint32_t, long_lag>;

// Ring buffer -> canonical order. The buffer is consumed downward from
// cursor i, so the canonical vector walks lanes descending (with wrap).
inline CanonicalFibVector canonicalize(const FibState& f) {
    CanonicalFibVector u;
    for (int k = 0; k < long_lag; ++k)
        u[k] = f.lane[(f.i + long_lag - k) % long_lag];
    return u;
}

// Canonical order -> ring buffer with cursors reset to the fresh-state
// convention (i = 97, j = 33, 1-based). Behaviorally inverse to
// canonicalize: the future output sequence is preserved exactly.
inline FibState decanonicalize(const CanonicalFibVector& u) {
    FibState f;
    f.i = long_lag - 1;
    f.j = short_lag - 1;
    for (int k = 0; k < long_lag; ++k) f.lane[long_lag - 1 - k] = u[k];
    return f;
}

// One multiplication by the companion matrix: shift left and append
// (u_1 - u_65) mod 2^24. Equals one Fibonacci step of the generator.
inline CanonicalFibVector apply_companion(const CanonicalFibVector& u) {
    CanonicalFibVector out;
    for (int k = 0; k + 1 < long_lag; ++k) out[k] = u[k + 1];
    out[long_lag - 1] = (u[0] - u[long_lag - short_lag]) & word_mask;
    return out;
}

// u * P_J(A) by Horner: acc = b_96 u; acc = acc A + b_k u for k = 95..0.
inline CanonicalFibVector jump_fib(const CanonicalFibVector& u, const JumpCount& j_count) {
    const auto p = poly::pow_t_mod<word_bits>(j_count);

    CanonicalFibVector acc;
    const std::uint64_t top = p.coeff[long_lag - 1];
    for (int k = 0; k < long_lag; ++k)
        acc[k] = static_cast<std::uint32_t>(top * u[k]) & word_mask;

    for (int deg = long_lag - 2; deg >= 0; --deg) {
        acc = apply_companion(acc);
        const std::uint64_t b = p.coeff[deg];
        if (b == 0) continue;
        for (int k = 0; k < long_lag; ++k)
            acc[k] = static_cast<std::uint32_t>(acc[k] + b * u[k]) & word_mask;
    }
    return acc;
}

// v advances by -delta each step, so J steps subtract (J mod m) * delta mod m.
inline ArithState jump_arith(ArithState a, const JumpCount& j_count) {
    if (j_count < 0)
        throw std::invalid_argument("ranmar: jump count must be nonnegative");
    const auto jm = static_cast<std::uint64_t>(j_count % arith_mod);
    const std::uint64_t dec = (jm * arith_delta) % arith_mod;
    a.v = static_cast<std::uint32_t>((a.v + (arith_mod - dec)) % arith_mod);
    return a;
}

// Jumps the combined state: for every n >= 1 the n-th output afterwards
// equals the (J+n)-th output of the original state under step().
inline RanmarState jump_state(const RanmarState& s, const JumpCount& j_count) {
    RanmarState out;
    out.fib = decanonicalize(jump_fib(canonicalize(s.fib), j_count));
    out.arith = jump_arith(s.arith, j_count);
    return out;
}

// How make_streams spaces the stream starts along the base sequence.
// Both modes produce identical states; incremental avoids the big-integer
// products k * J, while independent jumps are self-contained and safe to
// compute concurrently.
enum class StreamMode {
    incremental,  // stream k jumped from stream k-1 by J
    independent,  // stream k jumped from the base state by k * J
};

// Partitions the output sequence of init(seed) into consecutive blocks of
// block_length outputs: stream k starts exactly where block k does.
inline std::vector<RanmarState> make_streams(std::uint32_t seed, const JumpCount& block_length,
                                             std::size_t n_streams,
                                             StreamMode mode = StreamMode::incremental) {
    if (n_streams == 0) throw std::invalid_argument("ranmar: need at least one stream");
    if (block_length < 1) throw std::invalid_argument("ranmar: block length must be >= 1");

    std::vector<RanmarState> streams;
    streams.reserve(n_streams);
    streams.push_back(init(seed));
    for (std::size_t k = 1; k < n_streams; ++k) {
        if (mode == StreamMode::incremental)
            streams.push_back(jump_state(streams.back(), block_length));
        else
            streams.push_back(jump_state(streams.front(), block_length * k));
    }
    return streams;
}

}  // namespace ranmar
