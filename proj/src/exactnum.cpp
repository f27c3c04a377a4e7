#include "patternforge/exactnum.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace patternforge {

namespace {

void check_order(int order)
{
    if (order < 1 || order > kMaxConductor)
        throw std::invalid_argument("conductor " + std::to_string(order) + " outside [1, " +
                                    std::to_string(kMaxConductor) + "]");
}

// result += coeff * value, for a small signed coefficient.
void add_scaled(Integer &result, const Integer &value, std::int64_t coeff)
{
    if (coeff > 0)
        mpz_addmul_ui(result.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(coeff));
    else if (coeff < 0)
        mpz_submul_ui(result.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(-coeff));
}

}  // namespace

int totient(int n)
{
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(int n)
{
    if (n < 1)
        throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, each division exact by a monic.
    std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        auto divisor = cyclotomic_polynomial(d);
        std::size_t dd = divisor.size() - 1;
        std::vector<std::int64_t> quotient(poly.size() - dd, 0);
        for (std::size_t k = poly.size(); k-- > dd;) {
            std::int64_t c = poly[k];
            quotient[k - dd] = c;
            for (std::size_t i = 0; i <= dd; ++i)
                poly[k - dd + i] -= c * divisor[i];
        }
        poly = std::move(quotient);
    }
    return poly;
}

CyclotomicField::CyclotomicField(int order)
    : order_(order), degree_(totient(order)), modulus_(cyclotomic_polynomial(order))
{
    const auto d = static_cast<std::size_t>(degree_);
    powers_.assign(static_cast<std::size_t>(order_) * d, 0);
    std::vector<std::int64_t> row(d, 0);
    row[0] = 1;
    for (int e = 0; e < order_; ++e) {
        std::copy(row.begin(), row.end(), powers_.begin() + static_cast<std::ptrdiff_t>(e * d));
        // multiply by x and fold x^d back using the monic modulus
        std::int64_t top = row[d - 1];
        for (std::size_t i = d - 1; i > 0; --i)
            row[i] = row[i - 1];
        row[0] = 0;
        if (top != 0)
            for (std::size_t i = 0; i < d; ++i)
                row[i] -= top * modulus_[i];
    }
}

const CyclotomicField &CyclotomicField::of(int order)
{
    check_order(order);
    static std::array<std::unique_ptr<CyclotomicField>, kMaxConductor + 1> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto &slot = cache[static_cast<std::size_t>(order)];
    if (!slot)
        slot.reset(new CyclotomicField(order));
    return *slot;
}

std::span<const std::int64_t> CyclotomicField::power(long e) const
{
    long r = e % order_;
    if (r < 0)
        r += order_;
    const auto d = static_cast<std::size_t>(degree_);
    return {powers_.data() + static_cast<std::size_t>(r) * d, d};
}

// ---------------------------------------------------------------------------

CycloNum::CycloNum(int order) : order_(order), den_(1)
{
    check_order(order);
    num_.assign(static_cast<std::size_t>(CyclotomicField::of(order).degree()), Integer(0));
}

CycloNum::CycloNum(int order, const Rational &value) : CycloNum(order)
{
    num_[0] = value.get_num();
    den_ = value.get_den();
}

CycloNum::CycloNum(int order, std::vector<Integer> num, Integer den)
    : order_(order), num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

CycloNum CycloNum::from_coefficients(int order, std::span<const Rational> coeffs)
{
    const auto &field = CyclotomicField::of(order);
    Integer den = 1;
    for (const auto &c : coeffs)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> num(static_cast<std::size_t>(field.degree()), Integer(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0)
            continue;
        Integer scaled = coeffs[i].get_num() * (den / coeffs[i].get_den());
        auto row = field.power(static_cast<long>(i));
        for (std::size_t k = 0; k < num.size(); ++k)
            add_scaled(num[k], scaled, row[k]);
    }
    return CycloNum(order, std::move(num), std::move(den));
}

CycloNum CycloNum::zeta(int order, long exponent)
{
    const auto &field = CyclotomicField::of(order);
    auto row = field.power(exponent);
    std::vector<Integer> num(row.begin(), row.end());
    return CycloNum(order, std::move(num), Integer(1));
}

CycloNum CycloNum::gaussian(int order, const Rational &re, const Rational &im)
{
    if (order % 4 != 0)
        throw std::invalid_argument("gaussian: conductor must be divisible by 4");
    return CycloNum(order, re) + CycloNum(order, im) * zeta(order, order / 4);
}

void CycloNum::normalize()
{
    if (den_ < 0) {
        den_ = -den_;
        for (auto &c : num_)
            c = -c;
    }
    Integer g = den_;
    for (const auto &c : num_) {
        if (g == 1)
            break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1 && g != 0) {
        for (auto &c : num_)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    if (is_zero())
        den_ = 1;
}

void CycloNum::require_same_order(const CycloNum &o, const char *op) const
{
    if (order_ != o.order_)
        throw OrderMismatch(std::string(op) + ": conductor mismatch (" + std::to_string(order_) +
                            " vs " + std::to_string(o.order_) + "); lift to a common conductor first");
}

Rational CycloNum::coefficient(int i) const
{
    Rational q(num_.at(static_cast<std::size_t>(i)), den_);
    q.canonicalize();
    return q;
}

std::vector<Rational> CycloNum::coefficients() const
{
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (int i = 0; i < degree(); ++i)
        out.push_back(coefficient(i));
    return out;
}

bool CycloNum::is_zero() const
{
    return std::all_of(num_.begin(), num_.end(), [](const Integer &c) { return c == 0; });
}

bool CycloNum::is_rational() const
{
    return std::all_of(num_.begin() + 1, num_.end(), [](const Integer &c) { return c == 0; });
}

bool CycloNum::is_real() const { return conj() == *this; }

CycloNum CycloNum::conj() const
{
    const auto &field = CyclotomicField::of(order_);
    std::vector<Integer> out(num_.size(), Integer(0));
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0)
            continue;
        auto row = field.power(order_ - static_cast<long>(i));
        for (std::size_t k = 0; k < out.size(); ++k)
            add_scaled(out[k], num_[i], row[k]);
    }
    return CycloNum(order_, std::move(out), den_);
}

CycloNum CycloNum::lift(int new_order) const
{
    check_order(new_order);
    if (new_order % order_ != 0)
        throw OrderMismatch("lift: conductor " + std::to_string(order_) + " does not divide " +
                            std::to_string(new_order));
    if (new_order == order_)
        return *this;
    const long step = new_order / order_;
    const auto &field = CyclotomicField::of(new_order);
    std::vector<Integer> out(static_cast<std::size_t>(field.degree()), Integer(0));
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0)
            continue;
        auto row = field.power(static_cast<long>(i) * step);
        for (std::size_t k = 0; k < out.size(); ++k)
            add_scaled(out[k], num_[i], row[k]);
    }
    return CycloNum(new_order, std::move(out), den_);
}

CycloNum CycloNum::operator-() const
{
    CycloNum r = *this;
    for (auto &c : r.num_)
        c = -c;
    return r;
}

CycloNum &CycloNum::operator+=(const CycloNum &o)
{
    require_same_order(o, "add");
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i)
            num_[i] += o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i)
            num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloNum &CycloNum::operator-=(const CycloNum &o)
{
    require_same_order(o, "sub");
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i)
            num_[i] -= o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i)
            num_[i] = num_[i] * o.den_ - o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloNum &CycloNum::operator*=(const CycloNum &o)
{
    require_same_order(o, "mul");
    const auto &field = CyclotomicField::of(order_);
    const std::size_t d = num_.size();
    std::vector<Integer> prod(2 * d - 1, Integer(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (num_[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j)
            if (o.num_[j] != 0)
                mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
    auto modulus = field.modulus();
    for (std::size_t k = 2 * d - 1; k-- > d;) {
        if (prod[k] == 0)
            continue;
        Integer t = prod[k];
        for (std::size_t i = 0; i < d; ++i)
            add_scaled(prod[k - d + i], t, -modulus[i]);
        prod[k] = 0;
    }
    prod.resize(d);
    num_ = std::move(prod);
    den_ *= o.den_;
    normalize();
    return *this;
}

CycloNum CycloNum::inverse() const
{
    if (is_zero())
        throw ArithmeticError("division by zero in Q(zeta_" + std::to_string(order_) + ")");
    // Solve M y = e_0, M the matrix of multiplication by the numerator
    // polynomial, by fraction-free (Bareiss) elimination: every intermediate
    // is a minor of M, so coefficient growth stays linear in the degree.
    const std::size_t d = num_.size();
    const auto modulus = CyclotomicField::of(order_).modulus();
    std::vector<std::vector<Integer>> m(d, std::vector<Integer>(d + 1, Integer(0)));
    std::vector<Integer> col = num_;  // numerator * x^j mod Phi
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i)
            m[i][j] = col[i];
        Integer top = col[d - 1];
        for (std::size_t i = d - 1; i > 0; --i)
            col[i] = col[i - 1];
        col[0] = 0;
        for (std::size_t i = 0; i < d; ++i)
            add_scaled(col[i], top, -modulus[i]);
    }
    m[0][d] = 1;

    Integer prev = 1;
    for (std::size_t k = 0; k < d; ++k) {
        std::size_t pivot = k;
        while (m[pivot][k] == 0)
            ++pivot;  // M is invertible, so some row below has a nonzero entry
        std::swap(m[k], m[pivot]);
        for (std::size_t i = k + 1; i < d; ++i) {
            for (std::size_t j = k + 1; j <= d; ++j) {
                m[i][j] *= m[k][k];
                mpz_submul(m[i][j].get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    // With det = m[d-1][d-1], det * y is integral (adjugate), so each
    // back-substitution division is exact.
    const Integer det = m[d - 1][d - 1];
    std::vector<Integer> z(d);
    for (std::size_t i = d; i-- > 0;) {
        Integer acc = det * m[i][d];
        for (std::size_t j = i + 1; j < d; ++j)
            mpz_submul(acc.get_mpz_t(), m[i][j].get_mpz_t(), z[j].get_mpz_t());
        mpz_divexact(z[i].get_mpz_t(), acc.get_mpz_t(), m[i][i].get_mpz_t());
    }
    // (num / den)^-1 = den * y
    for (auto &c : z)
        c *= den_;
    return CycloNum(order_, std::move(z), det);
}

CycloNum &CycloNum::operator/=(const CycloNum &o)
{
    require_same_order(o, "div");
    return *this *= o.inverse();
}

bool operator==(const CycloNum &a, const CycloNum &b)
{
    if (a.order_ != b.order_) {
        int common = std::lcm(a.order_, b.order_);
        if (common > kMaxConductor)
            return false;
        return a.lift(common) == b.lift(common);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
}

bool lex_less(const CycloNum &a, const CycloNum &b)
{
    if (a.order_ != b.order_)
        return a.order_ < b.order_;
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        // compare a_i / da with b_i / db
        int c = cmp(a.num_[i] * b.den_, b.num_[i] * a.den_);
        if (c != 0)
            return c < 0;
    }
    return false;
}

std::size_t CycloNum::hash() const
{
    std::size_t h = static_cast<std::size_t>(order_) * 0x9E3779B97F4A7C15ULL;
    auto mix = [&h](const Integer &v) {
        std::size_t x = mpz_get_ui(v.get_mpz_t()) ^ (static_cast<std::size_t>(mpz_sgn(v.get_mpz_t()) + 1) << 62);
        h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    };
    mix(den_);
    for (const auto &c : num_)
        mix(c);
    return h;
}

std::string rational_to_string(const Rational &q) { return q.get_str(); }

Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '"')
            s.push_back(c);
    if (s.empty())
        throw ParseError("empty rational");
    auto slash = s.find('/');
    auto valid_int = [](std::string_view t) {
        if (t.empty())
            return false;
        std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size())
            return false;
        return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view sv(s);
    if (slash == std::string::npos) {
        if (!valid_int(sv))
            throw ParseError("malformed rational '" + s + "'");
        return Rational(Integer(sv[0] == '+' ? s.substr(1) : s));
    }
    auto ns = sv.substr(0, slash), ds = sv.substr(slash + 1);
    if (!valid_int(ns) || !valid_int(ds))
        throw ParseError("malformed rational '" + s + "'");
    Integer n(std::string(ns[0] == '+' ? ns.substr(1) : ns));
    Integer d(std::string(ds[0] == '+' ? ds.substr(1) : ds));
    if (d == 0)
        throw ParseError("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string CycloNum::to_string() const
{
    std::string out = std::to_string(order_) + ":[";
    for (int i = 0; i < degree(); ++i) {
        if (i)
            out += ',';
        out += rational_to_string(coefficient(i));
    }
    out += ']';
    return out;
}

CycloNum CycloNum::parse(std::string_view text)
{
    auto colon = text.find(':');
    auto open = text.find('[');
    auto close = text.rfind(']');
    if (colon == std::string_view::npos || open == std::string_view::npos || close == std::string_view::npos ||
        open < colon || close < open)
        throw ParseError("expected 'M:[c0,c1,...]', got '" + std::string(text) + "'");
    std::string order_text(text.substr(0, colon));
    int order = 0;
    try {
        std::size_t used = 0;
        order = std::stoi(order_text, &used);
        if (used != order_text.size())
            throw ParseError("bad conductor");
    } catch (const std::exception &) {
        throw ParseError("bad conductor in '" + std::string(text) + "'");
    }
    if (order < 1 || order > kMaxConductor)
        throw ParseError("conductor out of range in '" + std::string(text) + "'");
    std::vector<Rational> coeffs;
    auto body = text.substr(open + 1, close - open - 1);
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        auto item = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        coeffs.push_back(parse_rational(item));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    if (static_cast<int>(coeffs.size()) != totient(order))
        throw ParseError("expected " + std::to_string(totient(order)) + " coefficients for conductor " +
                         std::to_string(order));
    return from_coefficients(order, coeffs);
}

CycloNum cyclo_arith(const CycloNum &a, const CycloNum &b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    case ArithOp::div:
        return a / b;
    }
    throw std::invalid_argument("cyclo_arith: unknown op");
}

ComplexApprox to_float(const CycloNum &a, unsigned precision_bits)
{
    if (precision_bits < 53)
        throw std::invalid_argument("to_float: precision must be at least 53 bits");
    const mpfr_prec_t work = static_cast<mpfr_prec_t>(precision_bits) + 64;
    mpfr_t re, im, angle, c, s, term, pi2;
    for (auto *v : {&re, &im, &angle, &c, &s, &term, &pi2})
        mpfr_init2(*v, work);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    mpfr_const_pi(pi2, MPFR_RNDN);
    mpfr_mul_ui(pi2, pi2, 2, MPFR_RNDN);
    const int order = a.order();
    auto nums = a.numerators();
    for (std::size_t i = 0; i < nums.size(); ++i) {
        if (nums[i] == 0)
            continue;
        mpfr_mul_ui(angle, pi2, static_cast<unsigned long>(i), MPFR_RNDN);
        mpfr_div_ui(angle, angle, static_cast<unsigned long>(order), MPFR_RNDN);
        mpfr_sin_cos(s, c, angle, MPFR_RNDN);
        mpfr_mul_z(term, c, nums[i].get_mpz_t(), MPFR_RNDN);
        mpfr_add(re, re, term, MPFR_RNDN);
        mpfr_mul_z(term, s, nums[i].get_mpz_t(), MPFR_RNDN);
        mpfr_add(im, im, term, MPFR_RNDN);
    }
    mpfr_div_z(re, re, a.denominator().get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(im, im, a.denominator().get_mpz_t(), MPFR_RNDN);

    ComplexApprox out;
    const int digits = static_cast<int>(std::ceil(precision_bits * 0.30103)) + 1;
    auto render = [digits](mpfr_t v) {
        char *buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", digits, v);
        std::string sres(buf);
        mpfr_free_str(buf);
        return sres;
    };
    out.real = render(re);
    out.imag = render(im);
    out.value = {mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN)};
    for (auto *v : {&re, &im, &angle, &c, &s, &term, &pi2})
        mpfr_clear(*v);
    return out;
}

std::complex<double> to_complex(const CycloNum &a) { return to_float(a, 64).value; }

}  // namespace patternforge
