// Arbitrary-precision jump length. Jumps of 2^120 and beyond are routine,
// so counts are unbounded; the CLI-facing parser also accepts the
// power-of-two forms common in benchmarking ("2^64-1").
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ranmar {

using JumpCount = boost::multiprecision::cpp_int;

// Accepts plain decimal, "2^k", "2^k-1", and "2^k+1".
inline JumpCount parse_jump_count(std::string_view text) {
    const auto fail = [&] {
        throw std::invalid_argument("ranmar: bad jump count \"" + std::string(text) +
                                    "\" (want decimal, 2^k, 2^k-1, or 2^k+1)");
    };
    if (text.empty()) fail();

    if (text.substr(0, 2) == "2^") {
        std::string_view rest = text.substr(2);
        unsigned long k = 0;
        std::size_t n = 0;
        while (n < rest.size() && rest[n] >= '0' && rest[n] <= '9') {
            k = k * 10 + static_cast<unsigned long>(rest[n] - '0');
            if (k > 1000000) throw std::invalid_argument("ranmar: jump exponent too large");
            ++n;
        }
        if (n == 0) fail();
        rest.remove_prefix(n);
        JumpCount j = JumpCount(1) << k;
        if (rest == "-1")
            j -= 1;
        else if (rest == "+1")
            j += 1;
        else if (!rest.empty())
            fail();
        return j;
    }

    for (char c : text)
        if (c < '0' || c > '9') fail();
    return JumpCount(std::string(text));
}

}  // namespace ranmar
