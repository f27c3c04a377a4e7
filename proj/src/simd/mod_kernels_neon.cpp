#include "patternforge/simd/mod_kernels.hpp"

#if defined(PATTERNFORGE_HAVE_NEON_KERNELS)

#include <arm_neon.h>

#include <cmath>
#include <stdexcept>

namespace patternforge::simd::neon {

namespace {

inline float64x2_t reduce(float64x2_t prod, float64x2_t p, float64x2_t inv)
{
    float64x2_t q = vrndmq_f64(vmulq_f64(prod, inv));
    float64x2_t r = vfmsq_f64(prod, q, p);
    uint64x2_t neg = vcltzq_f64(r);
    r = vaddq_f64(r, vreinterpretq_f64_u64(vandq_u64(neg, vreinterpretq_u64_f64(p))));
    uint64x2_t over = vcgeq_f64(r, p);
    r = vsubq_f64(r, vreinterpretq_f64_u64(vandq_u64(over, vreinterpretq_u64_f64(p))));
    return r;
}

inline float64x2_t load2(const std::uint32_t *src) { return vcvtq_f64_u64(vmovl_u32(vld1_u32(src))); }

inline void store2(std::uint32_t *dst, float64x2_t v) { vst1_u32(dst, vmovn_u64(vcvtq_u64_f64(v))); }

inline std::uint32_t reduce_one(double prod, std::uint32_t p, double inv)
{
    double q = std::floor(prod * inv);
    double r = prod - q * static_cast<double>(p);
    if (r < 0)
        r += p;
    else if (r >= p)
        r -= p;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

void axpy_mod(const Modulus &m, std::uint32_t scale, std::uint32_t offset,
              std::span<const std::uint32_t> x, std::span<std::uint32_t> out)
{
    if (x.size() != out.size())
        throw std::invalid_argument("mod kernel: length mismatch");
    const float64x2_t p = vdupq_n_f64(m.p), inv = vdupq_n_f64(m.inv);
    const float64x2_t s = vdupq_n_f64(scale), o = vdupq_n_f64(offset);
    const std::size_t n = x.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        store2(out.data() + i, reduce(vfmaq_f64(o, load2(x.data() + i), s), p, inv));
    for (; i < n; ++i)
        out[i] = reduce_one(static_cast<double>(x[i]) * scale + offset, m.p, m.inv);
}

void mul_mod(const Modulus &m, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
             std::span<std::uint32_t> out)
{
    if (x.size() != y.size() || x.size() != out.size())
        throw std::invalid_argument("mod kernel: length mismatch");
    const float64x2_t p = vdupq_n_f64(m.p), inv = vdupq_n_f64(m.inv);
    const std::size_t n = x.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        store2(out.data() + i, reduce(vmulq_f64(load2(x.data() + i), load2(y.data() + i)), p, inv));
    for (; i < n; ++i)
        out[i] = reduce_one(static_cast<double>(x[i]) * static_cast<double>(y[i]), m.p, m.inv);
}

}  // namespace patternforge::simd::neon

#endif
