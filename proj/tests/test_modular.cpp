#include "patternforge/modular.hpp"

#include <doctest.h>

#include <random>
#include <unordered_set>

using namespace patternforge;

namespace {

CycloNum random_element(int order, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    std::vector<Rational> c(static_cast<std::size_t>(totient(order)));
    for (auto &q : c) {
        const long n = num(rng);
        const long d = den(rng);
        q = Rational(n, d);
        q.canonicalize();
    }
    return CycloNum::from_coefficients(order, c);
}

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("embeddings use primes 1 mod M with a primitive root of order M")
{
    for (int order : {4, 12, 20, 60, 120}) {
        CAPTURE(order);
        for (int k = 0; k < 3; ++k) {
            const auto e = ModularEmbedding::nth(order, k);
            REQUIRE(is_prime(e.prime()));
            REQUIRE(e.prime() < simd::kMaxModulus);
            REQUIRE(e.prime() % static_cast<std::uint32_t>(order) == 1);
            REQUIRE(simd::powmod(e.root(), static_cast<std::uint64_t>(order), e.prime()) == 1);
            for (int d = 1; d < order; ++d)
                if (order % d == 0)
                    REQUIRE(simd::powmod(e.root(), static_cast<std::uint64_t>(d), e.prime()) != 1);
        }
        CHECK(ModularEmbedding::nth(order, 0).prime() > ModularEmbedding::nth(order, 1).prime());
    }
}

TEST_CASE("image is a ring homomorphism")
{
    for (int order : {4, 12, 40, 120}) {
        CAPTURE(order);
        std::mt19937_64 rng(static_cast<std::uint64_t>(order));
        const auto e = ModularEmbedding::nth(order, 0);
        const auto p = e.prime();
        for (int t = 0; t < 300; ++t) {
            const CycloNum a = random_element(order, rng), b = random_element(order, rng);
            const auto ia = e.image(a), ib = e.image(b);
            REQUIRE(ia);
            REQUIRE(ib);
            REQUIRE(e.image(a + b) == simd::addmod(*ia, *ib, p));
            REQUIRE(e.image(a - b) == simd::submod(*ia, *ib, p));
            REQUIRE(e.image(a * b) == simd::mulmod(*ia, *ib, p));
            if (*ib != 0)
                REQUIRE(e.image(a / b) == simd::mulmod(*ia, simd::invmod(*ib, p), p));
            REQUIRE(e.conj_image(a) == e.image(a.conj()));
        }
        CHECK(e.image(CycloNum::zeta(order)) == e.root());
        CHECK(e.image(Rational(1, 2)) == simd::invmod(2, p));
    }
}

TEST_CASE("a denominator divisible by p has no image")
{
    const auto e = ModularEmbedding::nth(4, 0);
    const CycloNum a(4, Rational(1, static_cast<long>(e.prime())));
    CHECK_FALSE(e.image(a).has_value());
    CHECK_THROWS_AS(e.image(CycloNum(12, 1)), OrderMismatch);
}

TEST_CASE("dual images skip primes that divide a denominator")
{
    const auto first = ModularEmbedding::nth(12, 0);
    std::vector<CycloNum> pts{CycloNum(12, 1), CycloNum(12, Rational(1, static_cast<long>(first.prime())))};
    const DualImages d(12, pts);
    CHECK(d.embedding(0).prime() != first.prime());
    CHECK(d.embedding(0).prime() != d.embedding(1).prime());
    for (int k = 0; k < 2; ++k) {
        REQUIRE(d.values(k).size() == 2);
        CHECK(d.values(k)[0] == 1);
        CHECK(d.embedding(k).image(pts[1]) == d.values(k)[1]);
    }
    CHECK(DualImages::key(1, 2) == ((std::uint64_t{1} << 26) | 2));
}

TEST_CASE("key set membership")
{
    std::mt19937_64 rng(4);
    std::unordered_set<std::uint64_t> ref;
    KeySet ks(500);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t k = rng() >> 12;
        ref.insert(k);
        ks.insert(k);
    }
    for (auto k : ref)
        REQUIRE(ks.contains(k));
    int false_hits = 0;
    for (int i = 0; i < 10000; ++i) {
        const std::uint64_t k = rng() >> 12;
        if (!ref.count(k) && ks.contains(k))
            ++false_hits;
    }
    CHECK(false_hits == 0);
    ks.insert(0);
    CHECK(ks.contains(0));
}
