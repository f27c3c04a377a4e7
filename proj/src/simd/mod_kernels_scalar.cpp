#include "patternforge/simd/mod_kernels.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace patternforge::simd {

namespace {

std::atomic<int> g_override{-1};

void check_lengths(std::size_t a, std::size_t b)
{
    if (a != b)
        throw std::invalid_argument("mod kernel: length mismatch");
}

}  // namespace

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    case Isa::neon:
        return "neon";
    }
    return "unknown";
}

Isa detected_isa()
{
#if defined(PATTERNFORGE_HAVE_AVX2_KERNELS)
    static const bool has_avx2 = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (has_avx2)
        return Isa::avx2;
#endif
#if defined(PATTERNFORGE_HAVE_NEON_KERNELS)
    return Isa::neon;
#endif
    return Isa::scalar;
}

Isa active_isa()
{
    int o = g_override.load(std::memory_order_relaxed);
    return o < 0 ? detected_isa() : static_cast<Isa>(o);
}

bool set_isa_override(std::optional<Isa> isa)
{
    if (!isa) {
        g_override.store(-1);
        return true;
    }
    if (*isa != Isa::scalar && *isa != detected_isa())
        return false;
    g_override.store(static_cast<int>(*isa));
    return true;
}

std::uint32_t powmod(std::uint32_t base, std::uint64_t exp, std::uint32_t p)
{
    std::uint64_t result = 1 % p, b = base % p;
    while (exp) {
        if (exp & 1)
            result = result * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

namespace scalar {

// Same arithmetic as the vector lanes: exact double product, floor quotient,
// remainder, one correction step.  Every intermediate is an integer below 2^53.
static inline std::uint32_t reduce(double prod, const Modulus &m)
{
    double q = std::floor(prod * m.inv);
    double r = prod - q * static_cast<double>(m.p);
    if (r < 0)
        r += m.p;
    else if (r >= m.p)
        r -= m.p;
    return static_cast<std::uint32_t>(r);
}

void axpy_mod(const Modulus &m, std::uint32_t scale, std::uint32_t offset,
              std::span<const std::uint32_t> x, std::span<std::uint32_t> out)
{
    check_lengths(x.size(), out.size());
    const double s = scale, o = offset;
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = reduce(static_cast<double>(x[i]) * s + o, m);
}

void mul_mod(const Modulus &m, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
             std::span<std::uint32_t> out)
{
    check_lengths(x.size(), y.size());
    check_lengths(x.size(), out.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = reduce(static_cast<double>(x[i]) * static_cast<double>(y[i]), m);
}

}  // namespace scalar

void axpy_mod(const Modulus &m, std::uint32_t scale, std::uint32_t offset,
              std::span<const std::uint32_t> x, std::span<std::uint32_t> out)
{
    switch (active_isa()) {
#if defined(PATTERNFORGE_HAVE_AVX2_KERNELS)
    case Isa::avx2:
        return avx2::axpy_mod(m, scale, offset, x, out);
#endif
#if defined(PATTERNFORGE_HAVE_NEON_KERNELS)
    case Isa::neon:
        return neon::axpy_mod(m, scale, offset, x, out);
#endif
    default:
        return scalar::axpy_mod(m, scale, offset, x, out);
    }
}

void mul_mod(const Modulus &m, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
             std::span<std::uint32_t> out)
{
    switch (active_isa()) {
#if defined(PATTERNFORGE_HAVE_AVX2_KERNELS)
    case Isa::avx2:
        return avx2::mul_mod(m, x, y, out);
#endif
#if defined(PATTERNFORGE_HAVE_NEON_KERNELS)
    case Isa::neon:
        return neon::mul_mod(m, x, y, out);
#endif
    default:
        return scalar::mul_mod(m, x, y, out);
    }
}

}  // namespace patternforge::simd
