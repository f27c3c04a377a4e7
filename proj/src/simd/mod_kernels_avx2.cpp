#include "patternforge/simd/mod_kernels.hpp"

#if defined(PATTERNFORGE_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <stdexcept>

namespace patternforge::simd::avx2 {

#define PF_AVX2 __attribute__((target("avx2,fma")))

namespace {

// Four lanes of exact integer-valued doubles, reduced into [0, p).
PF_AVX2 inline __m256d reduce(__m256d prod, __m256d p, __m256d inv)
{
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, inv));
    __m256d r = _mm256_fnmadd_pd(q, p, prod);
    __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
    r = _mm256_add_pd(r, _mm256_and_pd(neg, p));
    __m256d over = _mm256_cmp_pd(r, p, _CMP_GE_OQ);
    r = _mm256_sub_pd(r, _mm256_and_pd(over, p));
    return r;
}

PF_AVX2 inline __m256d load4(const std::uint32_t *src)
{
    // residues are < 2^26, so the signed conversion is exact
    return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i *>(src)));
}

PF_AVX2 inline void store4(std::uint32_t *dst, __m256d v)
{
    _mm_storeu_si128(reinterpret_cast<__m128i *>(dst), _mm256_cvttpd_epi32(v));
}

inline std::uint32_t reduce_one(double prod, std::uint32_t p, double inv)
{
    double q = __builtin_floor(prod * inv);
    double r = prod - q * static_cast<double>(p);
    if (r < 0)
        r += p;
    else if (r >= p)
        r -= p;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

PF_AVX2 void axpy_mod(const Modulus &m, std::uint32_t scale, std::uint32_t offset,
                      std::span<const std::uint32_t> x, std::span<std::uint32_t> out)
{
    if (x.size() != out.size())
        throw std::invalid_argument("mod kernel: length mismatch");
    const __m256d p = _mm256_set1_pd(m.p), inv = _mm256_set1_pd(m.inv);
    const __m256d s = _mm256_set1_pd(scale), o = _mm256_set1_pd(offset);
    const std::size_t n = x.size();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d a = load4(x.data() + i), b = load4(x.data() + i + 4);
        store4(out.data() + i, reduce(_mm256_fmadd_pd(a, s, o), p, inv));
        store4(out.data() + i + 4, reduce(_mm256_fmadd_pd(b, s, o), p, inv));
    }
    for (; i + 4 <= n; i += 4)
        store4(out.data() + i, reduce(_mm256_fmadd_pd(load4(x.data() + i), s, o), p, inv));
    for (; i < n; ++i)
        out[i] = reduce_one(static_cast<double>(x[i]) * scale + offset, m.p, m.inv);
}

PF_AVX2 void mul_mod(const Modulus &m, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
                     std::span<std::uint32_t> out)
{
    if (x.size() != y.size() || x.size() != out.size())
        throw std::invalid_argument("mod kernel: length mismatch");
    const __m256d p = _mm256_set1_pd(m.p), inv = _mm256_set1_pd(m.inv);
    const std::size_t n = x.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d prod = _mm256_mul_pd(load4(x.data() + i), load4(y.data() + i));
        store4(out.data() + i, reduce(prod, p, inv));
    }
    for (; i < n; ++i)
        out[i] = reduce_one(static_cast<double>(x[i]) * static_cast<double>(y[i]), m.p, m.inv);
}

#undef PF_AVX2

}  // namespace patternforge::simd::avx2

#endif
