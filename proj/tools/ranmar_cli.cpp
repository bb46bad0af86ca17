// ranmar -- command-line front end: generate outputs, jump states by
// arbitrary J, partition a sequence into provably disjoint streams,
// benchmark integer vs floating-point generation, and self-test the
// library against its oracles.
//
// Exit codes: 0 success, 1 verification/runtime failure, 2 usage error.
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ranmar/ranmar.hpp"
#include "ranmar/reference/float_ranmar.hpp"

namespace {

using namespace ranmar;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

template <class T>
void keep(const T& value) {
    asm volatile("" : : "r,m"(value) : "memory");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --------------------------------------------------------------- generate

struct GenerateOpts {
    std::uint32_t seed = 0;
    std::uint64_t count = 0;
    std::string skip = "0";
    std::string format = "u24";
};

// Buffered line output; u24 is the canonical cross-platform format.
class LineWriter {
public:
    ~LineWriter() { flush(); }

    void put_u24(std::uint32_t u) {
        reserve(16);
        auto [p, ec] = std::to_chars(buf_ + n_, buf_ + n_ + 15, u);
        (void)ec;
        *p++ = '\n';
        n_ = static_cast<std::size_t>(p - buf_);
    }

    void put_hex(std::uint32_t u) {
        reserve(8);
        n_ += static_cast<std::size_t>(std::snprintf(buf_ + n_, 9, "%06x\n", u));
    }

    void put_f64(std::uint32_t u) {
        reserve(32);
        n_ += static_cast<std::size_t>(
            std::snprintf(buf_ + n_, 33, "%.17g\n", static_cast<double>(u) * 0x1p-24));
    }

    void flush() {
        if (n_ != 0) std::fwrite(buf_, 1, n_, stdout);
        n_ = 0;
    }

private:
    void reserve(std::size_t need) {
        if (n_ + need + 1 > sizeof buf_) flush();
    }

    char buf_[1 << 16];
    std::size_t n_ = 0;
};

int run_generate(const GenerateOpts& opt) {
    auto s = init(opt.seed);
    const JumpCount skip = parse_jump_count(opt.skip);
    if (skip > 0) s = jump_state(s, skip);

    LineWriter out;
    if (opt.format == "u24") {
        for (std::uint64_t n = 0; n < opt.count; ++n) out.put_u24(step(s));
    } else if (opt.format == "hex") {
        for (std::uint64_t n = 0; n < opt.count; ++n) out.put_hex(step(s));
    } else {
        for (std::uint64_t n = 0; n < opt.count; ++n) out.put_f64(step(s));
    }
    return exit_ok;
}

// ------------------------------------------------------------------- jump

struct JumpOpts {
    std::string state_file;
    std::string by = "1";
    std::string out_file;
};

RanmarState load_state(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return from_text(text.str());
    } catch (const std::invalid_argument& e) {
        // A corrupt file is a data failure, not a usage error.
        throw std::runtime_error(std::string(e.what()) + " (" + path + ")");
    }
}

void store_state(const RanmarState& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write state file: " + path);
    out << to_text(s);
    if (!out) throw std::runtime_error("write failed: " + path);
}

int run_jump(const JumpOpts& opt) {
    const JumpCount by = parse_jump_count(opt.by);
    store_state(jump_state(load_state(opt.state_file), by), opt.out_file);
    return exit_ok;
}

// ---------------------------------------------------------------- streams

struct StreamsOpts {
    std::uint32_t seed = 0;
    std::string block;
    std::uint64_t n_streams = 1;
    std::string out_dir;
};

int run_streams(const StreamsOpts& opt) {
    const JumpCount block = parse_jump_count(opt.block);
    const auto streams = make_streams(opt.seed, block, opt.n_streams);

    std::filesystem::create_directories(opt.out_dir);
    for (std::size_t k = 0; k < streams.size(); ++k) {
        const auto path =
            std::filesystem::path(opt.out_dir) / ("stream_" + std::to_string(k) + ".state");
        store_state(streams[k], path.string());
        std::printf("%s\n", path.c_str());
    }
    return exit_ok;
}

// ------------------------------------------------------------------ bench

struct BenchOpts {
    std::uint64_t count = 100000000;  // 10^8
    std::vector<std::string> jumps = {"2^64-1", "2^120-1"};
    std::string label;
};

std::string default_machine_label() {
    std::string label;
#if defined(__clang__)
    label = "clang-" + std::to_string(__clang_major__) + "." + std::to_string(__clang_minor__);
#elif defined(__GNUC__)
    label = "gcc-" + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__);
#else
    label = "unknown-compiler";
#endif
#if defined(__x86_64__)
    label += " x86_64";
#elif defined(__aarch64__)
    label += " aarch64";
#endif
    return label;
}

int run_bench(const BenchOpts& opt) {
    json report;
    report["count"] = opt.count;
    report["machine"] = opt.label.empty() ? default_machine_label() : opt.label;

    {
        auto s = init(12345);
        std::uint32_t acc = 0;
        const auto t0 = std::chrono::steady_clock::now();
        for (std::uint64_t n = 0; n < opt.count; ++n) acc ^= step(s);
        keep(acc);
        report["integer_seconds"] = seconds_since(t0);
    }
    {
        auto f = reference::init_float(12345);
        double acc = 0.0;
        const auto t0 = std::chrono::steady_clock::now();
        for (std::uint64_t n = 0; n < opt.count; ++n) acc += reference::step_float(f);
        keep(acc);
        report["float_seconds"] = seconds_since(t0);
    }
    report["speedup"] =
        report["float_seconds"].get<double>() / report["integer_seconds"].get<double>();

    report["jumps"] = json::array();
    for (const auto& text : opt.jumps) {
        const JumpCount j = parse_jump_count(text);
        constexpr int reps = 25;
        auto p = poly::pow_t_mod<word_bits>(j);  // warm-up, also keeps a result live
        const auto t0 = std::chrono::steady_clock::now();
        for (int n = 0; n < reps; ++n) {
            p = poly::pow_t_mod<word_bits>(j);
            keep(p.coeff[0]);
        }
        const double micros = seconds_since(t0) * 1e6 / reps;
        report["jumps"].push_back({{"j", text},
                                   {"bits", j == 0 ? 0 : boost::multiprecision::msb(j) + 1},
                                   {"microseconds", micros}});
    }

    std::printf("%s\n", report.dump(2).c_str());
    return exit_ok;
}

// --------------------------------------------------------------- selftest

int selftest_failures = 0;

void check(const char* label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = body(detail);
    std::printf("[%s] %s (%.2f s)%s%s\n", ok ? "ok" : "FAIL", label, seconds_since(t0),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++selftest_failures;
}

// General monic long division over Z/2^24Z; independent of the library's
// trinomial fold.
std::vector<std::uint32_t> division_remainder(std::vector<std::uint64_t> dividend) {
    std::vector<std::uint64_t> phi(98, 0);
    phi[0] = word_mask;  // -1
    phi[64] = 1;
    phi[97] = 1;
    while (dividend.size() > 97) {
        const std::uint64_t q = dividend.back() & word_mask;
        const std::size_t shift = dividend.size() - 98;
        for (std::size_t k = 0; k < phi.size(); ++k) dividend[shift + k] -= q * phi[k];
        dividend.pop_back();
    }
    std::vector<std::uint32_t> rem(97, 0);
    for (std::size_t k = 0; k < dividend.size(); ++k)
        rem[k] = static_cast<std::uint32_t>(dividend[k] & word_mask);
    return rem;
}

std::vector<std::uint32_t> outputs_of(RanmarState s, std::size_t n) {
    std::vector<std::uint32_t> out(n);
    for (auto& o : out) o = step(s);
    return out;
}

int run_selftest() {
    check("float/integer equivalence, 5 seeds x 10^5 outputs", [](std::string& detail) {
        for (std::uint32_t seed : {0u, 1u, 97u, 12345u, 900000000u}) {
            auto s = init(seed);
            auto f = reference::init_float(seed);
            for (int n = 0; n < 100000; ++n) {
                if (value_of(step(s)) != reference::step_float(f)) {
                    detail = "seed " + std::to_string(seed) + " diverges at output " +
                             std::to_string(n + 1);
                    return false;
                }
            }
        }
        return true;
    });

    check("initializer equivalence, 50 seeds", [](std::string& detail) {
        std::mt19937 rng(1);
        for (int trial = 0; trial < 50; ++trial) {
            const std::uint32_t seed = rng() % (max_seed + 1);
            const auto s = init(seed);
            const auto f = reference::init_float(seed);
            for (int k = 0; k < long_lag; ++k) {
                if (value_of(s.fib.lane[k]) != f.x[k]) {
                    detail = "seed " + std::to_string(seed) + ", lane " + std::to_string(k + 1);
                    return false;
                }
            }
        }
        return true;
    });

    check("jump vs stepping, J up to 10^4", [](std::string& detail) {
        for (const std::uint64_t j : {0ull, 1ull, 2ull, 33ull, 64ull, 97ull, 1000ull, 10000ull}) {
            auto base = init(31415);
            const auto jumped = jump_state(base, j);
            for (std::uint64_t n = 0; n < j; ++n) step(base);
            const auto a = outputs_of(base, 100);
            const auto b = outputs_of(jumped, 100);
            if (a != b) {
                const auto at = std::mismatch(a.begin(), a.end(), b.begin());
                detail = "J = " + std::to_string(j) + ", first divergence at output " +
                         std::to_string(at.first - a.begin() + 1);
                return false;
            }
        }
        return true;
    });

    check("jump additivity at 2^64 scale", [](std::string& detail) {
        const JumpCount big = (JumpCount(1) << 64) - 1;
        const auto s = init(8128);
        const auto twice = jump_state(jump_state(s, big), big);
        const auto once = jump_state(s, (JumpCount(1) << 65) - 2);
        if (outputs_of(twice, 100) != outputs_of(once, 100)) {
            detail = "(2^64-1) twice != 2^65-2";
            return false;
        }
        return true;
    });

    check("polynomial oracles", [](std::string& detail) {
        auto iterated = poly::PolyMod<24>::one();
        const auto t = poly::PolyMod<24>::monomial(1);
        for (int j = 1; j <= 1000; ++j) {
            iterated = poly::mul_mod(iterated, t);
            if (poly::pow_t_mod<24>(JumpCount(j)) != iterated) {
                detail = "pow_t_mod(" + std::to_string(j) + ") != iterated product";
                return false;
            }
        }
        std::mt19937 rng(2);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::uint32_t> raw(193);
            for (auto& c : raw) c = rng() & word_mask;
            const auto reduced = poly::reduce_trinomial<24>(raw);
            const auto expected =
                division_remainder(std::vector<std::uint64_t>(raw.begin(), raw.end()));
            for (std::size_t k = 0; k < 97; ++k) {
                if (reduced.coeff[k] != expected[k]) {
                    detail = "reduction differs from long division at degree " +
                             std::to_string(k);
                    return false;
                }
            }
        }
        for (int trial = 0; trial < 25; ++trial) {
            JumpCount j1 = 0, j2 = 0;
            for (int w = 0; w < 5; ++w) {
                j1 = (j1 << 26) + rng();
                j2 = (j2 << 26) + rng();
            }
            if (poly::pow_t_mod<24>(j1 + j2) !=
                poly::mul_mod(poly::pow_t_mod<24>(j1), poly::pow_t_mod<24>(j2))) {
                detail = "exponent additivity, trial " + std::to_string(trial);
                return false;
            }
        }
        return true;
    });

    if (selftest_failures != 0) {
        std::printf("selftest: %d check(s) FAILED\n", selftest_failures);
        return exit_failure;
    }
    std::printf("selftest: all checks passed\n");
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RANMAR pseudorandom number generator in exact 24-bit integer arithmetic,\n"
                 "with arbitrary-length jump-ahead and non-overlapping parallel streams."};
    app.require_subcommand(1);

    GenerateOpts gen;
    auto* cmd_gen = app.add_subcommand("generate", "Emit pseudorandom outputs to stdout");
    cmd_gen->add_option("--seed", gen.seed, "Seed in [0, 900000000]")
        ->required()
        ->check(CLI::Range(std::uint32_t{0}, max_seed));
    cmd_gen->add_option("--count", gen.count, "Number of outputs")->required();
    cmd_gen->add_option("--skip", gen.skip, "Jump ahead this many steps first (decimal or 2^k[+-1])");
    cmd_gen->add_option("--format", gen.format, "Output format (default u24)")
        ->check(CLI::IsMember({"u24", "hex", "f64"}));

    JumpOpts jmp;
    auto* cmd_jump = app.add_subcommand("jump", "Advance a serialized state by J steps");
    cmd_jump->add_option("--state", jmp.state_file, "Input state file")->required();
    cmd_jump->add_option("--by", jmp.by, "Jump length (decimal or 2^k[+-1])")->required();
    cmd_jump->add_option("--out", jmp.out_file, "Output state file")->required();

    StreamsOpts str;
    auto* cmd_streams =
        app.add_subcommand("streams", "Write stream start states spaced J apart");
    cmd_streams->add_option("--seed", str.seed, "Seed in [0, 900000000]")
        ->required()
        ->check(CLI::Range(std::uint32_t{0}, max_seed));
    cmd_streams->add_option("--block", str.block, "Block length J per stream")->required();
    cmd_streams->add_option("--n", str.n_streams, "Number of streams")->required();
    cmd_streams->add_option("--out-dir", str.out_dir, "Directory for stream_<k>.state files")
        ->required();

    BenchOpts bench;
    auto* cmd_bench =
        app.add_subcommand("bench", "Time integer vs float generation and jump computation");
    cmd_bench->add_option("--count", bench.count, "Generations to time (default 10^8)");
    cmd_bench->add_option("--jumps", bench.jumps, "Jump lengths to time")->delimiter(',');
    cmd_bench->add_option("--label", bench.label, "Machine label for the report");

    auto* cmd_selftest = app.add_subcommand("selftest", "Run the built-in oracle checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (app.got_subcommand(cmd_gen)) return run_generate(gen);
        if (app.got_subcommand(cmd_jump)) return run_jump(jmp);
        if (app.got_subcommand(cmd_streams)) return run_streams(str);
        if (app.got_subcommand(cmd_bench)) return run_bench(bench);
        if (app.got_subcommand(cmd_selftest)) return run_selftest();
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_failure;
    }
    return exit_usage;
}
