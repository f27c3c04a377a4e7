#include "patternforge/modular.hpp"

#include <stdexcept>
#include <string>

namespace patternforge {

namespace {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::uint32_t residue(const Integer &v, std::uint32_t p)
{
    return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
}

}  // namespace

ModularEmbedding::ModularEmbedding(int order, std::uint32_t prime, std::uint32_t root)
    : order_(order), prime_(prime), root_(root), modulus_(prime)
{
    const int degree = CyclotomicField::of(order).degree();
    const std::uint32_t root_inv = simd::invmod(root, prime);
    powers_.resize(static_cast<std::size_t>(degree));
    inv_powers_.resize(static_cast<std::size_t>(degree));
    std::uint32_t a = 1, b = 1;
    for (int i = 0; i < degree; ++i) {
        powers_[static_cast<std::size_t>(i)] = a;
        inv_powers_[static_cast<std::size_t>(i)] = b;
        a = simd::mulmod(a, root, prime);
        b = simd::mulmod(b, root_inv, prime);
    }
}

ModularEmbedding ModularEmbedding::nth(int order, int index)
{
    if (order < 1 || order > kMaxConductor)
        throw std::invalid_argument("ModularEmbedding: bad conductor " + std::to_string(order));
    const auto m = static_cast<std::uint32_t>(order);
    const auto factors = prime_factors(m);
    int seen = 0;
    for (std::uint32_t t = (simd::kMaxModulus - 2) / m; t > 0; --t) {
        std::uint32_t p = 1 + t * m;
        if (!is_prime(p))
            continue;
        if (seen++ < index)
            continue;
        // g = h^((p-1)/M) has order dividing M; accept the first of exact order M
        for (std::uint32_t h = 2; h < p; ++h) {
            std::uint32_t g = simd::powmod(h, (p - 1) / m, p);
            bool primitive = g != 1 || m == 1;
            for (auto q : factors)
                if (simd::powmod(g, m / q, p) == 1)
                    primitive = false;
            if (primitive)
                return ModularEmbedding(order, p, g);
        }
    }
    throw std::runtime_error("ModularEmbedding: ran out of primes");
}

std::optional<std::uint32_t> ModularEmbedding::evaluate(const CycloNum &a,
                                                        const std::vector<std::uint32_t> &powers) const
{
    if (a.order() != order_)
        throw OrderMismatch("ModularEmbedding: conductor mismatch");
    std::uint32_t den = residue(a.denominator(), prime_);
    if (den == 0)
        return std::nullopt;
    std::uint64_t acc = 0;
    auto nums = a.numerators();
    for (std::size_t i = 0; i < nums.size(); ++i) {
        if (nums[i] == 0)
            continue;
        acc = (acc + static_cast<std::uint64_t>(residue(nums[i], prime_)) * powers[i]) % prime_;
    }
    return simd::mulmod(static_cast<std::uint32_t>(acc), simd::invmod(den, prime_), prime_);
}

std::optional<std::uint32_t> ModularEmbedding::image(const CycloNum &a) const { return evaluate(a, powers_); }

std::optional<std::uint32_t> ModularEmbedding::conj_image(const CycloNum &a) const
{
    return evaluate(a, inv_powers_);
}

std::optional<std::uint32_t> ModularEmbedding::image(const Rational &q) const
{
    std::uint32_t den = residue(q.get_den(), prime_);
    if (den == 0)
        return std::nullopt;
    return simd::mulmod(residue(q.get_num(), prime_), simd::invmod(den, prime_), prime_);
}

DualImages::DualImages(int order, std::span<const CycloNum> points, std::span<const CycloNum> extras,
                       bool with_conjugates)
{
    int next = 0;
    constexpr int kMaxAttempts = 256;
    while (embeddings_.size() < 2) {
        if (next >= kMaxAttempts)
            throw std::runtime_error("DualImages: no prime with all denominators invertible");
        auto emb = ModularEmbedding::nth(order, next++);
        const std::size_t k = embeddings_.size();
        std::vector<std::uint32_t> vals, conj, ext;
        bool ok = true;
        vals.reserve(points.size());
        for (const auto &pt : points) {
            auto v = emb.image(pt);
            if (!v) {
                ok = false;
                break;
            }
            vals.push_back(*v);
            if (with_conjugates)
                conj.push_back(*emb.conj_image(pt));
        }
        for (std::size_t i = 0; ok && i < extras.size(); ++i) {
            auto v = emb.image(extras[i]);
            if (!v)
                ok = false;
            else
                ext.push_back(*v);
        }
        if (!ok)
            continue;
        values_[k] = std::move(vals);
        conj_values_[k] = std::move(conj);
        extras_[k] = std::move(ext);
        embeddings_.push_back(std::move(emb));
    }
}

KeySet::KeySet(std::size_t expected)
{
    std::size_t cap = 16;
    while (cap < expected * 2 + 1)
        cap <<= 1;
    table_.assign(cap, kEmpty);
    mask_ = cap - 1;
}

std::size_t KeySet::slot(std::uint64_t key) const
{
    std::uint64_t h = key * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(h >> 20) & mask_;
}

void KeySet::insert(std::uint64_t key)
{
    for (std::size_t s = slot(key);; s = (s + 1) & mask_) {
        if (table_[s] == key)
            return;
        if (table_[s] == kEmpty) {
            table_[s] = key;
            return;
        }
    }
}

bool KeySet::contains(std::uint64_t key) const
{
    for (std::size_t s = slot(key);; s = (s + 1) & mask_) {
        if (table_[s] == key)
            return true;
        if (table_[s] == kEmpty)
            return false;
    }
}

}  // namespace patternforge
