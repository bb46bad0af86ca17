// Acceptance suite: end-to-end checks of the properties the library is
// shipped on, one pass/fail line each. Exact equality throughout -- the
// integer/float correspondence is an isomorphism, not an approximation.
//
//   1. integer outputs == float reference outputs, 4 seeds x 10^6
//   2. initializer == float initializer, 100 random seeds, full state
//   3. jump_state == stepping for J up to 10^4, 20 random states
//   4. jump additivity at 2^64 scale (proxy for unsteppable jumps)
//   5. polynomial kernel vs independent oracles
//   6. pow_t_mod(2^120 - 1) completes within a second
//   7. integer generation >= 1.5x faster than the float reference, 10^8
//   8. make_streams tiles the base sequence exactly
//   9. serialize/deserialize preserves the output stream
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ranmar/ranmar.hpp"
#include "ranmar/reference/float_ranmar.hpp"
#include "test_util.hpp"

using namespace ranmar;

namespace {

int failures = 0;
std::string why;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs one criterion; budget_s <= 0 means no runtime bound.
void criterion(int number, const char* label, double budget_s,
               const std::function<bool()>& body) {
    why.clear();
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = body();
    const double elapsed = seconds_since(t0);
    if (ok && budget_s > 0 && elapsed > budget_s) {
        ok = false;
        why = "runtime " + std::to_string(elapsed) + " s exceeds budget " +
              std::to_string(budget_s) + " s";
    }
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number,
                label, elapsed, why.empty() ? "" : " -- ", why.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool fail(std::string reason) {
    why = std::move(reason);
    return false;
}

// Keeps the generation loops from being optimized away.
template <class T>
inline void keep(const T& value) {
    asm volatile("" : : "r,m"(value) : "memory");
}

bool float_integer_equivalence() {
    for (std::uint32_t seed : {0u, 1u, 12345u, 900000000u}) {
        auto s = init(seed);
        auto f = reference::init_float(seed);
        for (int n = 0; n < 1000000; ++n) {
            if (value_of(step(s)) != reference::step_float(f))
                return fail("seed " + std::to_string(seed) + " diverges at output " +
                            std::to_string(n + 1));
        }
    }
    return true;
}

bool initialization_equivalence() {
    std::mt19937 rng(20250801);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint32_t seed = rng() % (max_seed + 1);
        const auto s = init(seed);
        const auto f = reference::init_float(seed);
        for (int k = 0; k < long_lag; ++k)
            if (value_of(s.fib.lane[k]) != f.x[k])
                return fail("seed " + std::to_string(seed) + " lane " + std::to_string(k + 1));
        if (value_of(s.arith.v) != f.c)
            return fail("seed " + std::to_string(seed) + " arithmetic residue");
    }
    return true;
}

bool jump_matches_stepping() {
    std::mt19937 rng(20250802);
    const std::uint64_t jumps[] = {0, 1, 2, 33, 64, 97, 1000, 10000};
    for (int trial = 0; trial < 20; ++trial) {
        const auto base = testutil::random_state(rng);
        for (const auto j : jumps) {
            const auto jumped = jump_state(base, j);
            auto stepped = base;
            for (std::uint64_t n = 0; n < j; ++n) step(stepped);
            if (testutil::take_outputs(jumped, 100) != testutil::take_outputs(stepped, 100))
                return fail("state " + std::to_string(trial) + ", J = " + std::to_string(j));
        }
    }
    return true;
}

bool jump_additivity_at_scale() {
    const JumpCount big = (JumpCount(1) << 64) - 1;
    const auto s = init(555);
    const auto twice = jump_state(jump_state(s, big), big);
    const auto once = jump_state(s, (JumpCount(1) << 65) - 2);
    if (testutil::take_outputs(twice, 100) != testutil::take_outputs(once, 100))
        return fail("two jumps of 2^64-1 differ from one jump of 2^65-2");
    return true;
}

bool polynomial_oracles() {
    using poly::mul_mod;
    using poly::PolyMod;
    using poly::pow_t_mod;
    using poly::reduce_trinomial;

    auto iterated = PolyMod<24>::one();
    const auto t = PolyMod<24>::monomial(1);
    if (pow_t_mod<24>(JumpCount(0)) != iterated) return fail("t^0 != 1");
    for (int j = 1; j <= 2000; ++j) {
        iterated = mul_mod(iterated, t);
        if (pow_t_mod<24>(JumpCount(j)) != iterated)
            return fail("pow_t_mod(" + std::to_string(j) + ") != iterated product");
    }

    std::mt19937 rng(20250803);
    const auto phi = testutil::phi_coefficients<24>();
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<std::uint32_t> raw(193);
        for (auto& c : raw) c = rng() & word_mask;
        const auto reduced = reduce_trinomial<24>(raw);
        const auto expected = testutil::long_division_remainder<24>(
            std::vector<std::uint64_t>(raw.begin(), raw.end()), phi);
        for (std::size_t k = 0; k < 97; ++k)
            if (reduced.coeff[k] != expected[k])
                return fail("reduce differs from long division, trial " + std::to_string(trial));
    }

    for (int trial = 0; trial < 100; ++trial) {
        JumpCount j1 = 0, j2 = 0;
        for (int w = 0; w < 5; ++w) {
            j1 = (j1 << 26) + rng();
            j2 = (j2 << 26) + rng();
        }
        if (pow_t_mod<24>(j1 + j2) != mul_mod(pow_t_mod<24>(j1), pow_t_mod<24>(j2)))
            return fail("exponent additivity, trial " + std::to_string(trial));
    }
    return true;
}

bool large_jump_feasibility() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto p = poly::pow_t_mod<24>((JumpCount(1) << 120) - 1);
    const double elapsed = seconds_since(t0);
    if (p.coeff == poly::PolyMod<24>::one().coeff) return fail("degenerate result");
    if (elapsed >= 1.0)
        return fail("took " + std::to_string(elapsed) + " s, budget 1 s");
    return true;
}

bool generation_speedup() {
    constexpr int count = 100000000;  // 10^8

    auto s = init(12345);
    std::uint32_t acc_u = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 0; n < count; ++n) acc_u ^= step(s);
    keep(acc_u);
    const double integer_s = seconds_since(t0);

    auto f = reference::init_float(12345);
    double acc_f = 0.0;
    t0 = std::chrono::steady_clock::now();
    for (int n = 0; n < count; ++n) acc_f += reference::step_float(f);
    keep(acc_f);
    const double float_s = seconds_since(t0);

    const double ratio = float_s / integer_s;
    char buf[160];
    std::snprintf(buf, sizeof buf, "integer %.3f s, float %.3f s, speedup %.2fx", integer_s,
                  float_s, ratio);
    why = buf;  // report the measurement even on pass
    return ratio >= 1.5;
}

bool stream_partition_integrity() {
    const auto streams = make_streams(97531, 1000, 10);
    const auto base = testutil::take_outputs(init(97531), 10000);
    std::vector<std::uint32_t> tiled;
    tiled.reserve(10000);
    for (const auto& s : streams) {
        const auto block = testutil::take_outputs(s, 1000);
        tiled.insert(tiled.end(), block.begin(), block.end());
    }
    if (tiled != base) return fail("stream blocks do not tile the base sequence");
    return true;
}

bool serialization_round_trip() {
    std::mt19937 rng(20250804);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = testutil::random_state(rng);
        const auto restored = from_text(to_text(s));
        if (restored != s) return fail("state mismatch, trial " + std::to_string(trial));
        if (testutil::take_outputs(s, 10000) != testutil::take_outputs(restored, 10000))
            return fail("output mismatch, trial " + std::to_string(trial));
    }
    return true;
}

}  // namespace

int main() {
    std::printf("ranmar24 acceptance suite\n");
    criterion(1, "bit-exact float/integer equivalence, 4 seeds x 10^6 outputs", 10.0,
              float_integer_equivalence);
    criterion(2, "initialization equivalence, 100 random seeds, full state", 1.0,
              initialization_equivalence);
    criterion(3, "jump correctness vs stepping, J <= 10^4, 20 random states", 10.0,
              jump_matches_stepping);
    criterion(4, "jump additivity at 2^64 scale", 1.0, jump_additivity_at_scale);
    criterion(5, "polynomial kernel vs independent oracles", 10.0, polynomial_oracles);
    criterion(6, "pow_t_mod(2^120 - 1) under one second", 0.0, large_jump_feasibility);
    criterion(7, "integer generation >= 1.5x float reference, 10^8 values", 0.0,
              generation_speedup);
    criterion(8, "stream partition tiles the base sequence, 10 x 1000", 1.0,
              stream_partition_integrity);
    criterion(9, "serialization round-trip preserves outputs, 20 states", 0.0,
              serialization_round_trip);

    if (failures != 0) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
