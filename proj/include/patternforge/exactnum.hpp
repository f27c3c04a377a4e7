#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_M).
//
// An element is stored as an integer coefficient vector over the power basis
// {1, zeta, ..., zeta^(phi(M)-1)} together with one positive common
// denominator.  The pair is kept in lowest terms, so two elements are equal
// iff their (order, numerators, denominator) triples are identical.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace patternforge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest conductor any construction may request (phi(120) = 32).
inline constexpr int kMaxConductor = 120;

class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Euler's totient.
int totient(int n);

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

/// Per-conductor reduction data, built once and shared.
class CyclotomicField {
public:
    static const CyclotomicField &of(int order);

    int order() const { return order_; }
    int degree() const { return degree_; }

    /// Phi_M, low degree first, monic, length degree()+1.
    std::span<const std::int64_t> modulus() const { return modulus_; }

    /// x^(e mod M) reduced modulo Phi_M, length degree().
    std::span<const std::int64_t> power(long e) const;

private:
    explicit CyclotomicField(int order);

    int order_;
    int degree_;
    std::vector<std::int64_t> modulus_;
    std::vector<std::int64_t> powers_;  // order_ rows of degree_ entries
};

class CycloNum {
public:
    /// Zero of Q(zeta_order).
    explicit CycloNum(int order = 4);
    CycloNum(int order, const Rational &value);
    CycloNum(int order, long value) : CycloNum(order, Rational(value)) {}

    /// Build from rational coefficients over the power basis; entries beyond
    /// the field degree are reduced, so any length is accepted.
    static CycloNum from_coefficients(int order, std::span<const Rational> coeffs);

    /// zeta_order^exponent.
    static CycloNum zeta(int order, long exponent = 1);

    /// a + b*i for rationals a, b (order must be divisible by 4).
    static CycloNum gaussian(int order, const Rational &re, const Rational &im);

    int order() const { return order_; }
    int degree() const { return static_cast<int>(num_.size()); }

    Rational coefficient(int i) const;
    std::vector<Rational> coefficients() const;
    std::span<const Integer> numerators() const { return num_; }
    const Integer &denominator() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_real() const;

    CycloNum conj() const;
    CycloNum inverse() const;
    CycloNum lift(int new_order) const;

    CycloNum operator-() const;
    CycloNum &operator+=(const CycloNum &o);
    CycloNum &operator-=(const CycloNum &o);
    CycloNum &operator*=(const CycloNum &o);
    CycloNum &operator/=(const CycloNum &o);

    friend CycloNum operator+(CycloNum a, const CycloNum &b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum &b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum &b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum &b) { return a /= b; }

    friend bool operator==(const CycloNum &a, const CycloNum &b);
    friend bool operator!=(const CycloNum &a, const CycloNum &b) { return !(a == b); }

    /// Lexicographic order on the rational coefficient vectors.  Only used for
    /// normalisation (pattern anchors, sorted output), never geometrically.
    friend bool lex_less(const CycloNum &a, const CycloNum &b);

    std::size_t hash() const;

    /// Canonical text form "M:[c0,c1,...]".
    std::string to_string() const;
    static CycloNum parse(std::string_view text);

private:
    CycloNum(int order, std::vector<Integer> num, Integer den);
    void normalize();
    void require_same_order(const CycloNum &o, const char *op) const;

    int order_;
    std::vector<Integer> num_;
    Integer den_;
};

enum class ArithOp { add, sub, mul, div };

CycloNum cyclo_arith(const CycloNum &a, const CycloNum &b, ArithOp op);

/// Complex approximation of the canonical embedding zeta_M -> exp(2 pi i / M),
/// accurate to roughly 2^(1 - precision_bits) relative error.  Never used for
/// equality or sign decisions.
struct ComplexApprox {
    std::string real;
    std::string imag;
    std::complex<double> value;
};

ComplexApprox to_float(const CycloNum &a, unsigned precision_bits = 53);
std::complex<double> to_complex(const CycloNum &a);

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational &q);

}  // namespace patternforge

template <>
struct std::hash<patternforge::CycloNum> {
    std::size_t operator()(const patternforge::CycloNum &a) const noexcept { return a.hash(); }
};
