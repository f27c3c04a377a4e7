#pragma once

// Ring homomorphisms Z[zeta_M]_(p) -> F_p.
//
// For a prime p = 1 (mod M) and a primitive M-th root of unity g in F_p,
// zeta_M -> g extends to a homomorphism on every element whose denominator is
// a unit mod p.  Equal field elements therefore have equal images, so a
// mismatch of images proves two elements differ.  Matching images prove
// nothing; callers confirm those with exact arithmetic.

#include "patternforge/exactnum.hpp"
#include "patternforge/simd/mod_kernels.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace patternforge {

class ModularEmbedding {
public:
    /// The `index`-th embedding for conductor `order`, walking primes
    /// p = 1 (mod order) downward from 2^26.
    static ModularEmbedding nth(int order, int index);

    int order() const { return order_; }
    std::uint32_t prime() const { return prime_; }
    std::uint32_t root() const { return root_; }
    const simd::Modulus &modulus() const { return modulus_; }

    /// Image under zeta -> root; nullopt when the denominator vanishes mod p.
    std::optional<std::uint32_t> image(const CycloNum &a) const;

    /// Image of conj(a), i.e. a evaluated at root^-1.
    std::optional<std::uint32_t> conj_image(const CycloNum &a) const;

    std::optional<std::uint32_t> image(const Rational &q) const;

private:
    ModularEmbedding(int order, std::uint32_t prime, std::uint32_t root);
    std::optional<std::uint32_t> evaluate(const CycloNum &a, const std::vector<std::uint32_t> &powers) const;

    int order_;
    std::uint32_t prime_;
    std::uint32_t root_;
    simd::Modulus modulus_;
    std::vector<std::uint32_t> powers_;      // root^i, i < phi(M)
    std::vector<std::uint32_t> inv_powers_;  // root^-i
};

/// Images of a list of field elements under two independent embeddings,
/// chosen so every element (and every `extra` element) has a defined image.
class DualImages {
public:
    DualImages(int order, std::span<const CycloNum> points, std::span<const CycloNum> extras = {},
               bool with_conjugates = false);

    const ModularEmbedding &embedding(int k) const { return embeddings_[static_cast<std::size_t>(k)]; }
    std::span<const std::uint32_t> values(int k) const { return values_[static_cast<std::size_t>(k)]; }
    std::span<const std::uint32_t> conj_values(int k) const { return conj_values_[static_cast<std::size_t>(k)]; }
    std::span<const std::uint32_t> extras(int k) const { return extras_[static_cast<std::size_t>(k)]; }

    /// 52-bit key combining both residues.
    static std::uint64_t key(std::uint32_t r0, std::uint32_t r1)
    {
        return (static_cast<std::uint64_t>(r0) << 26) | r1;
    }

private:
    std::vector<ModularEmbedding> embeddings_;
    std::vector<std::uint32_t> values_[2];
    std::vector<std::uint32_t> conj_values_[2];
    std::vector<std::uint32_t> extras_[2];
};

/// Open-addressing set of 64-bit keys.
class KeySet {
public:
    explicit KeySet(std::size_t expected);
    void insert(std::uint64_t key);
    bool contains(std::uint64_t key) const;

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
    std::size_t slot(std::uint64_t key) const;
    std::vector<std::uint64_t> table_;
    std::size_t mask_;
};

}  // namespace patternforge
