#pragma once

// Batched arithmetic modulo a prime p < 2^26.
//
// Products of two residues stay below 2^52, so every kernel can evaluate
// x*y exactly in double precision and reduce with one floor() and one multiply-subtract.
// The scalar versions are the reference; vector versions must agree bit for
// bit (tests/test_simd.cpp).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace patternforge::simd {

inline constexpr std::uint32_t kMaxModulus = (1u << 26);

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// Best instruction set available on this CPU.
Isa detected_isa();

/// Instruction set used by the dispatching entry points.
Isa active_isa();

/// Force a specific kernel family (tests, benchmarking).  Passing an ISA the
/// CPU lacks is rejected; nullopt restores auto-detection.
bool set_isa_override(std::optional<Isa> isa);

struct Modulus {
    std::uint32_t p;
    double inv;  // 1.0 / p

    explicit Modulus(std::uint32_t prime) : p(prime), inv(1.0 / static_cast<double>(prime)) {}
};

// out[i] = (offset + scale * x[i]) mod p.  Inputs must already be reduced.
// out may alias x.
void axpy_mod(const Modulus &m, std::uint32_t scale, std::uint32_t offset,
              std::span<const std::uint32_t> x, std::span<std::uint32_t> out);

// out[i] = (x[i] * y[i]) mod p.
void mul_mod(const Modulus &m, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
             std::span<std::uint32_t> out);

namespace scalar {
void axpy_mod(const Modulus &m, std::uint32_t scale, std::uint32_t offset,
              std::span<const std::uint32_t> x, std::span<std::uint32_t> out);
void mul_mod(const Modulus &m, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
             std::span<std::uint32_t> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define PATTERNFORGE_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy_mod(const Modulus &m, std::uint32_t scale, std::uint32_t offset,
              std::span<const std::uint32_t> x, std::span<std::uint32_t> out);
void mul_mod(const Modulus &m, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
             std::span<std::uint32_t> out);
}  // namespace avx2
#endif

#if defined(__aarch64__)
#define PATTERNFORGE_HAVE_NEON_KERNELS 1
namespace neon {
void axpy_mod(const Modulus &m, std::uint32_t scale, std::uint32_t offset,
              std::span<const std::uint32_t> x, std::span<std::uint32_t> out);
void mul_mod(const Modulus &m, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
             std::span<std::uint32_t> out);
}  // namespace neon
#endif

/// Scalar helpers shared by callers outside the batched loops.
inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t addmod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t submod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return a >= b ? a - b : a + p - b;
}

std::uint32_t powmod(std::uint32_t base, std::uint64_t exp, std::uint32_t p);

/// Multiplicative inverse; a must be nonzero mod p.
inline std::uint32_t invmod(std::uint32_t a, std::uint32_t p) { return powmod(a, p - 2, p); }

}  // namespace patternforge::simd
