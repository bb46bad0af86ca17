// Text serialization of a generator state. Line-based, version-tagged,
// decimal, fully reduced; round-trips bit-exactly on every platform.
//
//   ranmar24 v1
//   i <i> j <j>        cursors, 1-based
//   v <v>              arithmetic-sequence residue
//   u <k> <lane[k]>    k = 1..97
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ranmar/core.hpp"

namespace ranmar {

inline constexpr std::string_view state_magic = "ranmar24 v1";

inline std::string to_text(const RanmarState& s) {
    std::string out;
    out.reserve(16 * (long_lag + 3));
    out += state_magic;
    out += "\ni ";
    out += std::to_string(s.fib.i + 1);
    out += " j ";
    out += std::to_string(s.fib.j + 1);
    out += "\nv ";
    out += std::to_string(s.arith.v);
    out += '\n';
    for (int k = 0; k < long_lag; ++k) {
        out += "u ";
        out += std::to_string(k + 1);
        out += ' ';
        out += std::to_string(s.fib.lane[k]);
        out += '\n';
    }
    return out;
}

namespace detail {

[[noreturn]] inline void parse_fail(int line, const std::string& what) {
    throw std::invalid_argument("ranmar: state parse error at line " +
                                std::to_string(line) + ": " + what);
}

// Consumes the next line (without terminator) from text.
inline std::string_view next_line(std::string_view& text, int line) {
    if (text.empty()) parse_fail(line, "unexpected end of input");
    const auto nl = text.find('\n');
    std::string_view out = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!out.empty() && out.back() == '\r') out.remove_suffix(1);
    return out;
}

// Strict unsigned decimal field; rejects signs, leading junk, overflow.
inline std::uint64_t take_uint(std::string_view& sv, int line) {
    std::uint64_t value = 0;
    std::size_t n = 0;
    while (n < sv.size() && sv[n] >= '0' && sv[n] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(sv[n] - '0');
        if (value > 0xFFFFFFFFull) parse_fail(line, "number out of range");
        ++n;
    }
    if (n == 0) parse_fail(line, "expected a decimal number");
    sv.remove_prefix(n);
    return value;
}

inline void take_literal(std::string_view& sv, std::string_view lit, int line) {
    if (sv.substr(0, lit.size()) != lit)
        parse_fail(line, "expected \"" + std::string(lit) + "\"");
    sv.remove_prefix(lit.size());
}

}  // namespace detail

inline RanmarState from_text(std::string_view text) {
    using detail::next_line;
    using detail::parse_fail;
    using detail::take_literal;
    using detail::take_uint;

    int line = 1;
    if (next_line(text, line) != state_magic)
        parse_fail(line, "bad magic (want \"" + std::string(state_magic) + "\")");

    RanmarState s{};

    ++line;
    std::string_view sv = next_line(text, line);
    take_literal(sv, "i ", line);
    const auto i = take_uint(sv, line);
    take_literal(sv, " j ", line);
    const auto j = take_uint(sv, line);
    if (!sv.empty()) parse_fail(line, "trailing characters");
    if (i < 1 || i > 97 || j < 1 || j > 97) parse_fail(line, "cursor out of range");
    if ((i + 97 - j) % 97 != long_lag - short_lag)
        parse_fail(line, "cursor separation must be 64");
    s.fib.i = static_cast<int>(i) - 1;
    s.fib.j = static_cast<int>(j) - 1;

    ++line;
    sv = next_line(text, line);
    take_literal(sv, "v ", line);
    const auto v = take_uint(sv, line);
    if (!sv.empty()) parse_fail(line, "trailing characters");
    if (v >= arith_mod) parse_fail(line, "v must be < 16777213");
    s.arith.v = static_cast<std::uint32_t>(v);

    for (int k = 0; k < long_lag; ++k) {
        ++line;
        sv = next_line(text, line);
        take_literal(sv, "u ", line);
        const auto idx = take_uint(sv, line);
        take_literal(sv, " ", line);
        const auto lane = take_uint(sv, line);
        if (!sv.empty()) parse_fail(line, "trailing characters");
        if (idx != static_cast<std::uint64_t>(k) + 1)
            parse_fail(line, "lane index out of order");
        if (lane > word_mask) parse_fail(line, "lane value exceeds 24 bits");
        s.fib.lane[k] = static_cast<std::uint32_t>(lane);
    }

    // Nothing but whitespace may follow the last lane.
    while (!text.empty()) {
        const char c = text.front();
        if (c != '\n' && c != '\r' && c != ' ' && c != '\t')
            parse_fail(line + 1, "trailing content after state");
        text.remove_prefix(1);
    }
    return s;
}

}  // namespace ranmar
