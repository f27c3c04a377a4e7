#include "patternforge/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace patternforge {

namespace {

Integer to_int(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

std::vector<std::complex<double>> approximate(const PointSet &s, double &scale)
{
    std::vector<std::complex<double>> z;
    z.reserve(s.size());
    scale = 1.0;
    for (const auto &p : s) {
        z.push_back(to_complex(p));
        scale = std::max(scale, std::abs(z.back()));
    }
    return z;
}

}  // namespace

LedgerEntry check_minkowski_lemma(const Pattern &p, const PointSet &b, const PointSet &c, const GenericSum &sum,
                                  const std::string &claim_id)
{
    const Integer i(static_cast<unsigned long>(p.sym_order()));
    const auto term = [&](const PointSet &s) -> Integer { return i * count_similar(p, s).copies + to_int(s.size()); };
    const Integer rhs = term(b) * term(c);
    const Integer lhs = i * count_similar(p, sum.sum).copies + to_int(b.size() * c.size());
    return LedgerEntry::lower(claim_id, "I S(B+vC) + |B||C| >= (I S(B) + |B|)(I S(C) + |C|)", rhs, lhs);
}

LedgerEntry check_minkowski_lemma(const Pattern &p, const PointSet &b, const PointSet &c, ParamSampler &rng,
                                  const std::string &claim_id)
{
    const std::size_t m = std::max(max_collinear(b), max_collinear(c)) + 1;
    const GenericSum sum = minkowski_sum_generic(b, c, static_cast<int>(std::max<std::size_t>(m, 3)), rng);
    return check_minkowski_lemma(p, b, c, sum, claim_id);
}

VerdictLedger check_iteration_bound(const BuildReport &report, const PointSet &base, const std::string &claim_prefix)
{
    if (!report.pattern)
        throw std::invalid_argument("check_iteration_bound: report carries no pattern");
    const int j = std::stoi(report.params.at("j"));
    const CountReport b = count_similar(*report.pattern, base);
    VerdictLedger l;
    l.add(LedgerEntry::lower(claim_prefix + "/integer", "S(A_j) >= ((I S + |A|)^j - |A|^j) / I",
                             iteration_bound(b.sym_order, b.copies, base.size(), j), report.count.copies));
    // ((n/|A|)^i - n) / I with n = |A|^j
    const double n = std::pow(static_cast<double>(base.size()), j);
    const double bound =
        (std::pow(n / static_cast<double>(base.size()), b.index) - n) / static_cast<double>(b.sym_order);
    l.add(LedgerEntry::real(claim_prefix + "/index", "S(A_j) >= ((n/|A|)^i - n) / I", BoundKind::lower, bound,
                            report.count.copies.get_d(), 1e-9 * std::max(1.0, std::fabs(bound))));
    return l;
}

VerdictLedger check_pfree_bounds(const BuildReport &report, const std::string &claim_prefix)
{
    if (!report.pattern)
        throw std::invalid_argument("check_pfree_bounds: report carries no pattern");
    const int m = std::stoi(report.params.at("m"));
    Integer lower;
    mpz_ui_pow_ui(lower.get_mpz_t(), static_cast<unsigned long>(report.pattern->size()),
                  static_cast<unsigned long>(m - 1));
    lower *= m;
    VerdictLedger l;
    l.add(LedgerEntry::lower(claim_prefix + "/lower", "S >= m |P|^(m-1)", lower, report.count.copies));
    l.add(LedgerEntry::upper(claim_prefix + "/upper", "S <= n^(3/2) + n", pfree_upper_bound(report.output.size()),
                             report.count.copies));
    return l;
}

VerdictLedger check_k22_freeness(const Pattern &p, const PointSet &a, std::size_t cap, const std::string &claim_prefix)
{
    const std::size_t n = a.size();
    if (n > cap)
        throw std::length_error("check_k22_freeness: |A| = " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(cap));
    VerdictLedger l;
    const bool general = n < 3 || max_collinear(a) <= 2;
    const bool pfree = !find_parallelogram(a);
    if (!general || !pfree) {
        l.add(LedgerEntry::holds(claim_prefix + "/precondition",
                                 std::string("input must be parallelogram-free and in general position: ") +
                                     (pfree ? "" : "has a parallelogram") + (!pfree && !general ? ", " : "") +
                                     (general ? "" : "has collinear triple"),
                                 1));
        return l;
    }
    const int order = common_conductor(p.order(), a.order());
    const Pattern pat = p.lift(order);
    const PointSet set = a.lift(order);
    const auto [i1, i2] = pat.anchors();
    std::size_t i3 = 0;
    while (i3 == i1 || i3 == i2)
        ++i3;
    const CycloNum &lambda = pat.ratios()[i3];

    // left vertex a1, right vertex a2; adjacency as bit rows
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> adj(n * words, 0);
    std::size_t edges = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y)
                continue;
            if (set.contains(set[y] + (set[x] - set[y]) * lambda)) {
                adj[x * words + y / 64] |= std::uint64_t{1} << (y % 64);
                ++edges;
            }
        }
    std::size_t k22 = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t x2 = x + 1; x2 < n; ++x2) {
            int common = 0;
            for (std::size_t w = 0; w < words; ++w)
                common += std::popcount(adj[x * words + w] & adj[x2 * words + w]);
            if (common >= 2)
                ++k22;
        }
    l.add(LedgerEntry::holds(claim_prefix + "/no-K22", "the similar-triangle graph contains no K_{2,2}", k22));
    l.add(LedgerEntry::lower(claim_prefix + "/edges", "E >= S_P(A)", count_similar(pat, set).copies, to_int(edges)));
    return l;
}

std::size_t collinear_triples(const PointSet &s)
{
    double scale;
    const auto z = approximate(s, scale);
    const double tol = 1e-9 * scale * scale;
    const std::size_t n = s.size();
    std::size_t found = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto u = z[j] - z[i];
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto v = z[k] - z[i];
                if (std::fabs(u.real() * v.imag() - u.imag() * v.real()) > tol)
                    continue;
                if (((s[k] - s[i]) * (s[j] - s[i]).conj()).is_real())
                    ++found;
            }
        }
    return found;
}

std::size_t parallelogram_quadruples(const PointSet &s)
{
    double scale;
    const auto z = approximate(s, scale);
    const double tol = 1e-9 * scale;
    const std::size_t n = s.size();
    std::size_t found = 0;
    // each parallelogram has exactly one pairing into diagonals with equal sums
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = a + 1; c < n; ++c) {
                if (c == b)
                    continue;
                for (std::size_t d = c + 1; d < n; ++d) {
                    if (d == b || std::abs(z[a] + z[b] - z[c] - z[d]) > tol)
                        continue;
                    if (s[a] + s[b] == s[c] + s[d])
                        ++found;
                }
            }
    return found;
}

}  // namespace patternforge
