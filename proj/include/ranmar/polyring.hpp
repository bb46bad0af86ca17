// Polynomial arithmetic over Z/2^Bits Z modulo the trinomial
// phi(t) = t^97 + t^64 - 1, the characteristic polynomial of the lagged
// Fibonacci recurrence. The single consumer that matters is
// pow_t_mod(J) = t^J mod phi(t), whose coefficients drive the Horner
// jump-ahead; everything is kept dense and quadratic. At degree 97 the
// schoolbook product costs ~9.4k word multiplies, and the trinomial
// shape makes reduction linear.
//
// Bits is a template parameter so the kernel can be exercised at other
// word sizes; the generator itself uses Bits = 24.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "ranmar/jumpcount.hpp"

namespace ranmar::poly {

// Residue polynomial of degree < 97 with coefficients mod 2^Bits.
// coeff[k] holds the coefficient of t^k, always fully reduced.
template <unsigned Bits = 24>
struct PolyMod {
    static_assert(Bits >= 1 && Bits <= 32, "coefficients are stored in 32-bit words");

    static constexpr std::size_t degree_bound = 97;  // deg phi
    static constexpr std::size_t fold_offset = 64;   // exponent of phi's middle term
    static constexpr std::uint32_t coeff_mask =
        (Bits == 32) ? 0xFFFFFFFFu : ((std::uint32_t{1} << Bits) - 1u);

    std::array<std::uint32_t, degree_bound> coeff{};

    static PolyMod one() {
        PolyMod p;
        p.coeff[0] = 1;
        return p;
    }

    // t^k for k < 97.
    static PolyMod monomial(std::size_t k) {
        if (k >= degree_bound)
            throw std::invalid_argument("ranmar: monomial degree must be < 97");
        PolyMod p;
        p.coeff[k] = 1;
        return p;
    }

    bool operator==(const PolyMod&) const = default;
};

// Reduces a raw coefficient array (degree <= 192, as produced by a product
// of two reduced polynomials) mod phi. Since t^97 = 1 - t^64, each high
// term c_k folds as c_{k-97} += c_k and c_{k-33} -= c_k. Coefficient
// arithmetic wraps mod 2^32, which preserves every residue mod 2^Bits.
template <unsigned Bits = 24>
PolyMod<Bits> reduce_trinomial(std::span<const std::uint32_t> raw) {
    constexpr std::size_t max_terms = 2 * PolyMod<Bits>::degree_bound - 1;  // degree 192
    if (raw.size() > max_terms)
        throw std::invalid_argument("ranmar: reduce_trinomial input degree exceeds 192");

    std::array<std::uint32_t, max_terms> c{};
    for (std::size_t k = 0; k < raw.size(); ++k) c[k] = raw[k];

    for (std::size_t k = max_terms - 1; k >= PolyMod<Bits>::degree_bound; --k) {
        const std::uint32_t hi = c[k];
        c[k - 97] += hi;
        c[k - 33] -= hi;
        c[k] = 0;
    }

    PolyMod<Bits> p;
    for (std::size_t k = 0; k < PolyMod<Bits>::degree_bound; ++k)
        p.coeff[k] = c[k] & PolyMod<Bits>::coeff_mask;
    return p;
}

// Schoolbook product followed by trinomial reduction. 24-bit operands give
// 48-bit partial products; 97 of them accumulate in a 64-bit word, and for
// wider Bits the mod-2^64 wraparound still preserves residues mod 2^Bits.
template <unsigned Bits>
PolyMod<Bits> mul_mod(const PolyMod<Bits>& a, const PolyMod<Bits>& b) {
    constexpr std::size_t n = PolyMod<Bits>::degree_bound;
    std::array<std::uint64_t, 2 * n - 1> acc{};
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t ai = a.coeff[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < n; ++j) acc[i + j] += ai * b.coeff[j];
    }
    std::array<std::uint32_t, 2 * n - 1> raw;
    for (std::size_t k = 0; k < raw.size(); ++k)
        raw[k] = static_cast<std::uint32_t>(acc[k]) & PolyMod<Bits>::coeff_mask;
    return reduce_trinomial<Bits>(raw);
}

// p * t: shift one degree up and fold the spilled t^97 term.
template <unsigned Bits>
PolyMod<Bits> mul_by_t(const PolyMod<Bits>& p) {
    PolyMod<Bits> q;
    const std::uint32_t top = p.coeff[96];
    for (std::size_t k = 96; k >= 1; --k) q.coeff[k] = p.coeff[k - 1];
    q.coeff[0] = top;
    q.coeff[64] = (q.coeff[64] - top) & PolyMod<Bits>::coeff_mask;
    return q;
}

// t^J mod phi(t) by left-to-right square-and-multiply over the bits of J.
// O(r^2 log J) time, O(r) working memory.
template <unsigned Bits = 24>
PolyMod<Bits> pow_t_mod(const JumpCount& j_count) {
    if (j_count < 0)
        throw std::invalid_argument("ranmar: jump count must be nonnegative");
    PolyMod<Bits> acc = PolyMod<Bits>::one();
    if (j_count == 0) return acc;
    for (int k = static_cast<int>(boost::multiprecision::msb(j_count)); k >= 0; --k) {
        acc = mul_mod(acc, acc);
        if (bit_test(j_count, static_cast<unsigned>(k))) acc = mul_by_t(acc);
    }
    return acc;
}

}  // namespace ranmar::poly
