#include "patternforge/simd/mod_kernels.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace patternforge::simd;

namespace {

std::vector<Isa> available()
{
    std::vector<Isa> out{Isa::scalar};
    if (detected_isa() != Isa::scalar)
        out.push_back(detected_isa());
    return out;
}

// Largest primes below 2^26, plus small ones where lanes wrap often.
constexpr std::uint32_t kPrimes[] = {67108859, 67108837, 65537, 97, 2};

}  // namespace

TEST_CASE("helpers agree with 128-bit arithmetic")
{
    std::mt19937_64 rng(1);
    for (auto p : kPrimes)
        for (int t = 0; t < 1000; ++t) {
            const auto a = static_cast<std::uint32_t>(rng() % p), b = static_cast<std::uint32_t>(rng() % p);
            REQUIRE(mulmod(a, b, p) == static_cast<std::uint32_t>((unsigned __int128)a * b % p));
            REQUIRE(addmod(a, b, p) == (a + b) % p);
            REQUIRE(submod(a, b, p) == (a + p - b) % p);
            if (a != 0)
                REQUIRE(mulmod(a, invmod(a, p), p) == 1);
        }
    CHECK(powmod(3, 0, 97) == 1);
    CHECK(powmod(3, 96, 97) == 1);
}

TEST_CASE("every kernel family matches the scalar reference")
{
    std::mt19937_64 rng(2);
    for (auto p : kPrimes) {
        const Modulus m(p);
        // lengths cover empty input, partial vectors and tails
        for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 31u, 64u, 1001u}) {
            std::vector<std::uint32_t> x(n), y(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = static_cast<std::uint32_t>(rng() % p);
                y[i] = static_cast<std::uint32_t>(rng() % p);
            }
            if (n > 2) {
                x[0] = p - 1;
                y[0] = p - 1;
                x[1] = 0;
            }
            const auto scale = static_cast<std::uint32_t>(rng() % p), offset = static_cast<std::uint32_t>(rng() % p);
            std::vector<std::uint32_t> ref_axpy(n), ref_mul(n);
            scalar::axpy_mod(m, scale, offset, x, ref_axpy);
            scalar::mul_mod(m, x, y, ref_mul);
            for (std::size_t i = 0; i < n; ++i) {
                REQUIRE(ref_axpy[i] == addmod(offset, mulmod(scale, x[i], p), p));
                REQUIRE(ref_mul[i] == mulmod(x[i], y[i], p));
            }
            for (Isa isa : available()) {
                CAPTURE(isa_name(isa));
                REQUIRE(set_isa_override(isa));
                CHECK(active_isa() == isa);
                std::vector<std::uint32_t> out(n), prod(n);
                axpy_mod(m, scale, offset, x, out);
                mul_mod(m, x, y, prod);
                REQUIRE(out == ref_axpy);
                REQUIRE(prod == ref_mul);
                // in place
                std::vector<std::uint32_t> inplace = x;
                axpy_mod(m, scale, offset, inplace, inplace);
                REQUIRE(inplace == ref_axpy);
            }
        }
    }
    set_isa_override(std::nullopt);
    CHECK(active_isa() == detected_isa());
}

TEST_CASE("an unavailable ISA is refused")
{
#if defined(__x86_64__)
    CHECK_FALSE(set_isa_override(Isa::neon));
#elif defined(__aarch64__)
    CHECK_FALSE(set_isa_override(Isa::avx2));
#endif
    CHECK(set_isa_override(Isa::scalar));
    set_isa_override(std::nullopt);
}
