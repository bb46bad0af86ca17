// Reference RANMAR in the classic floating-point form (RANMAR of
// Marsaglia-Zaman-Tsang as popularized by F. James and used in
// LAMMPS-family codes: subtract mod 1 with +1.0 fix-ups, 24-bit-precision
// doubles). This is the correctness oracle for the integer generator --
// every state component and output is a dyadic a/2^24, all operations are
// exact in binary64, and equality against the integer path is exact, never
// approximate. Not part of the production API; include it explicitly.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "ranmar/core.hpp"

namespace ranmar::reference {

inline constexpr double float_delta = 7654321.0 / 16777216.0;    // d
inline constexpr double float_modulus = 16777213.0 / 16777216.0;  // m / M

struct FloatState {
    std::array<double, long_lag> x{};
    double c = 362436.0 / 16777216.0;
    int i = long_lag - 1;
    int j = short_lag - 1;

    bool operator==(const FloatState&) const = default;
};

// One call of the classic generator, verbatim: five branches, two of them
// data-dependent mod-1 fix-ups.
inline double step_float(FloatState& s) noexcept {
    double y = s.x[s.i] - s.x[s.j];
    if (y < 0.0) y += 1.0;
    s.x[s.i] = y;
    s.i = (s.i == 0) ? long_lag - 1 : s.i - 1;
    s.j = (s.j == 0) ? long_lag - 1 : s.j - 1;

    s.c -= float_delta;
    if (s.c < 0.0) s.c += float_modulus;

    y -= s.c;
    if (y < 0.0) y += 1.0;
    return y;
}

// Marsaglia-Zaman-Tsang seeding exactly as the floating-point original:
// identical integer mixing to ranmar::init, bits summed as 0.5, 0.25, ...
inline FloatState init_float(std::uint32_t seed) {
    if (seed > max_seed)
        throw std::invalid_argument("ranmar: seed must be in [0, 900000000]");

    const int ij = (static_cast<int>(seed) - 1) / 30082;
    const int kl = (static_cast<int>(seed) - 1) - 30082 * ij;
    int ii = (ij / 177) % 177 + 2;
    int jj = ij % 177 + 2;
    int kk = (kl / 169) % 178 + 1;
    int ll = kl % 169;

    FloatState f;
    for (int lane = 0; lane < long_lag; ++lane) {
        double s = 0.0;
        double t = 0.5;
        for (int bit = 0; bit < 24; ++bit) {
            const int mm = ((ii * jj) % 179) * kk % 179;
            ii = jj;
            jj = kk;
            kk = mm;
            ll = (53 * ll + 1) % 169;
            if ((ll * mm) % 64 >= 32) s += t;
            t *= 0.5;
        }
        f.x[lane] = s;
    }
    f.c = 362436.0 / 16777216.0;
    f.i = long_lag - 1;
    f.j = short_lag - 1;
    return f;
}

// True iff g is a 24-bit dyadic fraction in [0,1), i.e. representable as
// a / 2^24 -- the closure property every float-path value must keep.
inline bool is_dyadic24(double g) {
    if (!(g >= 0.0 && g < 1.0)) return false;
    const double scaled = g * 16777216.0;
    return scaled == std::floor(scaled);
}

// The state isomorphism: a 24-bit dyadic fraction to its integer residue.
inline std::uint32_t to_u24(double g) {
    if (!is_dyadic24(g))
        throw std::invalid_argument("ranmar: value is not a 24-bit dyadic in [0,1)");
    return static_cast<std::uint32_t>(g * 16777216.0);
}

}  // namespace ranmar::reference
