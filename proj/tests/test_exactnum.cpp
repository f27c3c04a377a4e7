#include "patternforge/exactnum.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace patternforge;

namespace {

CycloNum random_element(int order, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    std::vector<Rational> c(static_cast<std::size_t>(totient(order)));
    for (auto &q : c) {
        const long n = num(rng);
        const long d = den(rng);
        q = Rational(n, d);
        q.canonicalize();
    }
    return CycloNum::from_coefficients(order, c);
}

}  // namespace

TEST_CASE("totient and cyclotomic polynomials")
{
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(20) == 8);
    CHECK(totient(120) == 32);
    CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(20) == std::vector<std::int64_t>{1, 0, -1, 0, 1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
}

TEST_CASE("field axioms hold on random elements")
{
    for (int order : {4, 12, 20, 24, 40}) {
        CAPTURE(order);
        std::mt19937_64 rng(static_cast<std::uint64_t>(order) * 7919);
        const CycloNum zero(order), one(order, 1);
        for (int trial = 0; trial < 1000; ++trial) {
            const CycloNum a = random_element(order, rng);
            const CycloNum b = random_element(order, rng);
            const CycloNum c = random_element(order, rng);
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + zero == a);
            REQUIRE(a * one == a);
            REQUIRE(a - a == zero);
            if (!a.is_zero()) {
                REQUIRE(a * a.inverse() == one);
                REQUIRE((b / a) * a == b);
            }
            REQUIRE(a.conj().conj() == a);
            REQUIRE((a * b).conj() == a.conj() * b.conj());
            REQUIRE((a * a.conj()).is_real());
            REQUIRE(CycloNum::parse(a.to_string()) == a);
            REQUIRE((a == b) == (a.hash() == b.hash() && a.to_string() == b.to_string()));
        }
    }
}

TEST_CASE("lifting is a ring homomorphism")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const CycloNum a = random_element(12, rng);
        const CycloNum b = random_element(12, rng);
        REQUIRE((a * b).lift(60) == a.lift(60) * b.lift(60));
        REQUIRE((a + b).lift(120) == a.lift(120) + b.lift(120));
        REQUIRE(a.lift(24).conj() == a.conj().lift(24));
    }
    CHECK_THROWS_AS(CycloNum(12, 1).lift(20), OrderMismatch);
}

TEST_CASE("sqrt 5 from Gauss sums in Q(zeta_5)")
{
    const int m = 20;
    const auto z = [&](long e) { return CycloNum::zeta(m, 4 * e); };  // zeta_5^e
    const CycloNum root5 = z(1) + z(4) - z(2) - z(3);
    CHECK(root5 * root5 == CycloNum(m, 5));
    CHECK(root5.is_real());
    CHECK(to_complex(root5).real() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
    // 2 cos(2 pi / 5) = (sqrt 5 - 1) / 2
    CHECK(z(1) + z(4) == (root5 - CycloNum(m, 1)) / CycloNum(m, 2));
    // golden ratio identity phi^2 = phi + 1
    const CycloNum phi = (root5 + CycloNum(m, 1)) / CycloNum(m, 2);
    CHECK(phi * phi == phi + CycloNum(m, 1));
}

TEST_CASE("roots of unity and the complex embedding")
{
    for (int order : {3, 4, 5, 8, 12, 20, 24, 40, 60, 120}) {
        CAPTURE(order);
        const CycloNum z = CycloNum::zeta(order);
        CycloNum p(order, 1);
        for (int k = 0; k < order; ++k) {
            const auto approx = to_complex(p);
            const double t = 2 * std::numbers::pi * k / order;
            REQUIRE(std::abs(approx - std::polar(1.0, t)) < 1e-12);
            REQUIRE(p == CycloNum::zeta(order, k));
            p *= z;
        }
        CHECK(p == CycloNum(order, 1));
        CHECK(CycloNum::zeta(order, -1) == z.conj());
    }
}

TEST_CASE("gaussian rationals and predicates")
{
    const CycloNum a = CycloNum::gaussian(4, Rational(1, 2), Rational(-3, 4));
    CHECK(a.coefficient(0) == Rational(1, 2));
    CHECK(a.coefficient(1) == Rational(-3, 4));
    CHECK_FALSE(a.is_real());
    CHECK((a + a.conj()).is_rational());
    CHECK(a.denominator() == 4);
    CHECK_THROWS_AS(CycloNum::gaussian(6, 1, 1), std::invalid_argument);
    CHECK(to_float(a, 128).real.substr(0, 3) == "0.5");
}

TEST_CASE("errors are typed")
{
    CHECK_THROWS_AS(CycloNum(12).inverse(), ArithmeticError);
    CHECK_THROWS_AS(CycloNum(12, 1) / CycloNum(12), ArithmeticError);
    CHECK_THROWS_AS(CycloNum(12, 1) + CycloNum(20, 1), OrderMismatch);
    CHECK_THROWS_AS(CycloNum(121), std::invalid_argument);
    CHECK_THROWS_AS(CycloNum::parse("12:[1,2]"), ParseError);
    CHECK_THROWS_AS(CycloNum::parse("garbage"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
}

TEST_CASE("cyclo_arith matches the operators")
{
    std::mt19937_64 rng(5);
    const CycloNum a = random_element(24, rng), b = random_element(24, rng);
    CHECK(cyclo_arith(a, b, ArithOp::add) == a + b);
    CHECK(cyclo_arith(a, b, ArithOp::sub) == a - b);
    CHECK(cyclo_arith(a, b, ArithOp::mul) == a * b);
    CHECK(cyclo_arith(a, b, ArithOp::div) == a / b);
}
