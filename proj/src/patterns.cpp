#include "patternforge/patterns.hpp"

#include "parallel.hpp"
#include "patternforge/modular.hpp"
#include "patternforge/simd/mod_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace patternforge {

namespace {

using Perm = std::vector<std::size_t>;

// Images of the base under every similarity sending (p_a1, p_a2) to an
// ordered pair of base points; keeps those that land inside the base.
std::vector<Perm> compute_symmetries(const PointSet &base, const std::vector<CycloNum> &ratios)
{
    const std::size_t k = base.size();
    std::vector<Perm> out;
    for (std::size_t u = 0; u < k; ++u) {
        for (std::size_t v = 0; v < k; ++v) {
            if (u == v)
                continue;
            const CycloNum d = base[u] - base[v];
            Perm perm(k);
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                auto idx = base.find(base[v] + d * ratios[j]);
                if (idx)
                    perm[j] = *idx;
                else
                    ok = false;
            }
            if (ok)
                out.push_back(std::move(perm));
        }
    }
    return out;
}

std::vector<CycloNum> anchor_ratios(const PointSet &base, std::size_t a1, std::size_t a2)
{
    const CycloNum inv = (base[a1] - base[a2]).inverse();
    std::vector<CycloNum> out;
    out.reserve(base.size());
    for (const auto &pt : base)
        out.push_back((pt - base[a2]) * inv);
    return out;
}

// True iff t is lexicographically minimal among its symmetric relabelings.
bool canonical(const std::vector<std::size_t> &t, const std::vector<Perm> &syms)
{
    for (const auto &s : syms) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::size_t other = t[s[i]];
            if (other < t[i])
                return false;
            if (other > t[i])
                break;
        }
    }
    return true;
}

}  // namespace

int common_conductor(int a, int b)
{
    int m = std::lcm(a, b);
    if (m > kMaxConductor)
        throw OrderMismatch("conductors " + std::to_string(a) + " and " + std::to_string(b) + " need Q(zeta_" +
                            std::to_string(m) + "), above the supported maximum " + std::to_string(kMaxConductor));
    return m;
}

Pattern::Pattern(PointSet base) : base_(std::move(base))
{
    if (base_.size() < 3)
        throw std::invalid_argument("Pattern: needs at least 3 points, got " + std::to_string(base_.size()));
    std::vector<std::size_t> idx(base_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::partial_sort(idx.begin(), idx.begin() + 2, idx.end(),
                      [this](std::size_t x, std::size_t y) { return lex_less(base_[x], base_[y]); });
    anchors_ = {idx[0], idx[1]};
    ratios_ = anchor_ratios(base_, anchors_.first, anchors_.second);
    symmetries_ = compute_symmetries(base_, ratios_);
    sym_order_ = symmetries_.size();
}

Pattern::Pattern(PointSet base, std::size_t anchor1, std::size_t anchor2) : base_(std::move(base))
{
    if (base_.size() < 3)
        throw std::invalid_argument("Pattern: needs at least 3 points, got " + std::to_string(base_.size()));
    if (anchor1 == anchor2 || anchor1 >= base_.size() || anchor2 >= base_.size())
        throw std::invalid_argument("Pattern: anchors must be two distinct point indices");
    anchors_ = {anchor1, anchor2};
    ratios_ = anchor_ratios(base_, anchor1, anchor2);
    symmetries_ = compute_symmetries(base_, ratios_);
    sym_order_ = symmetries_.size();
}

Pattern Pattern::lift(int new_order) const
{
    return Pattern(base_.lift(new_order), anchors_.first, anchors_.second);
}

std::size_t proper_symmetry_order(const Pattern &p)
{
    return compute_symmetries(p.base(), anchor_ratios(p.base(), p.anchors().first, p.anchors().second)).size();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
        if (r > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

double index_value(std::size_t sym_order, const Integer &copies, std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("index: needs |A| >= 2");
    Integer top = Integer(static_cast<unsigned long>(sym_order)) * copies + static_cast<unsigned long>(n);
    return std::log(top.get_d()) / std::log(static_cast<double>(n));
}

CountReport count_similar(const Pattern &pattern, const PointSet &target, const CountOptions &options)
{
    const int order = common_conductor(pattern.order(), target.order());
    const Pattern p = pattern.order() == order ? pattern : pattern.lift(order);
    const PointSet a = target.order() == order ? target : target.lift(order);
    const std::size_t n = a.size(), k = p.size();

    CountReport rep;
    rep.pattern_size = k;
    rep.sym_order = p.sym_order();
    rep.target_size = n;
    rep.conductor = order;
    if (options.incidence)
        rep.incidence.assign(n, 0);
    if (n < k) {
        rep.index = n >= 2 ? index_value(rep.sym_order, 0, n) : 1.0;
        return rep;
    }

    const auto [anchor1, anchor2] = p.anchors();
    std::vector<std::size_t> others;
    std::vector<CycloNum> lambdas;
    for (std::size_t j = 0; j < k; ++j)
        if (j != anchor1 && j != anchor2) {
            others.push_back(j);
            lambdas.push_back(p.ratios()[j]);
        }
    const std::size_t extra = others.size();

    const auto pts = a.points();
    DualImages img(order, pts, lambdas);
    KeySet members(n);
    for (std::size_t i = 0; i < n; ++i)
        members.insert(DualImages::key(img.values(0)[i], img.values(1)[i]));

    struct Partial {
        std::uint64_t matches = 0;
        std::vector<std::vector<std::size_t>> witnesses;
        std::vector<std::uint64_t> incidence;
    };
    const std::size_t witness_cap = options.full_witnesses ? std::numeric_limits<std::size_t>::max()
                                                           : options.witness_limit;
    std::vector<Partial> parts(detail::block_count(n, 4));

    detail::parallel_blocks(
        n,
        [&](std::size_t block, std::size_t lo, std::size_t hi) {
            Partial &part = parts[block];
            if (options.incidence)
                part.incidence.assign(n, 0);
            std::vector<std::uint32_t> out[2] = {std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
            std::vector<std::uint32_t> offsets[2] = {std::vector<std::uint32_t>(extra),
                                                     std::vector<std::uint32_t>(extra)};
            std::vector<std::size_t> cand, next;
            std::vector<std::size_t> tuple(k);

            for (std::size_t i2 = lo; i2 < hi; ++i2) {
                // image of p_j is a2 + (a1 - a2) * lambda_j = (1 - lambda_j) a2 + lambda_j a1
                for (int e = 0; e < 2; ++e) {
                    const std::uint32_t q = img.embedding(e).prime();
                    const std::uint32_t v2 = img.values(e)[i2];
                    for (std::size_t t = 0; t < extra; ++t) {
                        const std::uint32_t lam = img.extras(e)[t];
                        offsets[e][t] = simd::mulmod(simd::submod(1, lam, q), v2, q);
                    }
                }
                cand.clear();
                if (extra == 0) {
                    for (std::size_t i1 = 0; i1 < n; ++i1)
                        if (i1 != i2)
                            cand.push_back(i1);
                } else {
                    for (int e = 0; e < 2; ++e)
                        simd::axpy_mod(img.embedding(e).modulus(), img.extras(e)[0], offsets[e][0], img.values(e),
                                       out[e]);
                    for (std::size_t i1 = 0; i1 < n; ++i1)
                        if (i1 != i2 && members.contains(DualImages::key(out[0][i1], out[1][i1])))
                            cand.push_back(i1);
                    for (std::size_t t = 1; t < extra && !cand.empty(); ++t) {
                        next.clear();
                        for (std::size_t i1 : cand) {
                            std::uint32_t r[2];
                            for (int e = 0; e < 2; ++e) {
                                const std::uint32_t q = img.embedding(e).prime();
                                r[e] = simd::addmod(offsets[e][t],
                                                    simd::mulmod(img.extras(e)[t], img.values(e)[i1], q), q);
                            }
                            if (members.contains(DualImages::key(r[0], r[1])))
                                next.push_back(i1);
                        }
                        cand.swap(next);
                    }
                }

                for (std::size_t i1 : cand) {
                    const CycloNum d = pts[i1] - pts[i2];
                    tuple[anchor1] = i1;
                    tuple[anchor2] = i2;
                    bool ok = true;
                    for (std::size_t t = 0; t < extra && ok; ++t) {
                        auto idx = a.find(pts[i2] + d * lambdas[t]);
                        if (idx)
                            tuple[others[t]] = *idx;
                        else
                            ok = false;
                    }
                    if (!ok)
                        continue;
                    ++part.matches;
                    if (!canonical(tuple, p.symmetries()))
                        continue;
                    if (part.witnesses.size() < witness_cap)
                        part.witnesses.push_back(tuple);
                    if (options.incidence)
                        for (std::size_t i : tuple)
                            ++part.incidence[i];
                }
            }
        },
        4);

    std::uint64_t total = 0;
    for (auto &part : parts) {
        total += part.matches;
        for (auto &w : part.witnesses) {
            if (rep.witnesses.size() >= witness_cap)
                break;
            rep.witnesses.push_back(std::move(w));
        }
        if (options.incidence)
            for (std::size_t i = 0; i < n; ++i)
                rep.incidence[i] += part.incidence[i];
    }
    rep.ordered_matches = Integer(static_cast<unsigned long>(total));
    const Integer sym(static_cast<unsigned long>(rep.sym_order));
    if (rep.ordered_matches % sym != 0)
        throw std::logic_error("count_similar: ordered match count " + rep.ordered_matches.get_str() +
                               " not divisible by symmetry order " + sym.get_str());
    rep.copies = rep.ordered_matches / sym;
    // Elekes-Erdos: each ordered pair of distinct points anchors at most one match
    const Integer pairs = Integer(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n - 1);
    if (rep.ordered_matches > pairs)
        throw std::logic_error("count_similar: I*S exceeds |A|^2 - |A|");
    rep.index = n >= 2 ? index_value(rep.sym_order, rep.copies, n) : 1.0;
    return rep;
}

double index(const Pattern &p, const PointSet &a) { return count_similar(p, a).index; }

Integer brute_force_count(const Pattern &pattern, const PointSet &target, std::uint64_t guard)
{
    const int order = common_conductor(pattern.order(), target.order());
    const PointSet pb = pattern.base().lift(order);
    const PointSet a = target.lift(order);
    const std::size_t n = a.size(), k = pb.size();
    if (n < k)
        return 0;
    const std::uint64_t subsets = binomial(n, k);
    if (subsets > guard)
        throw OracleGuardError("brute_force_count: C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " +
                               std::to_string(subsets) + " subsets exceeds the guard of " + std::to_string(guard));

    // Q ~ P iff for some ordered pair (u, v) of Q, q_u + mu_j (q_v - q_u) is in Q
    // for every j, with mu_j = (p_j - p_0) / (p_1 - p_0).
    std::vector<CycloNum> mu;
    const CycloNum base_inv = (pb[1] - pb[0]).inverse();
    for (std::size_t j = 2; j < k; ++j)
        mu.push_back((pb[j] - pb[0]) * base_inv);

    // double precision screens out most (u, v); every survivor is decided exactly
    std::vector<std::complex<double>> za(n), zmu(mu.size());
    double scale = 1.0, mscale = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        za[i] = to_complex(a[i]);
        scale = std::max(scale, std::abs(za[i]));
    }
    for (std::size_t j = 0; j < mu.size(); ++j) {
        zmu[j] = to_complex(mu[j]);
        mscale = std::max(mscale, std::abs(zmu[j]));
    }
    const double tol = 1e-7 * scale * mscale;

    auto similar = [&](const std::vector<std::size_t> &q) {
        for (std::size_t u = 0; u < k; ++u) {
            for (std::size_t v = 0; v < k; ++v) {
                if (u == v)
                    continue;
                const std::complex<double> zd = za[q[v]] - za[q[u]];
                bool close = true;
                for (std::size_t j = 0; j < mu.size() && close; ++j) {
                    const std::complex<double> w = za[q[u]] + zmu[j] * zd;
                    close = std::any_of(q.begin(), q.end(), [&](std::size_t i) { return std::abs(za[i] - w) <= tol; });
                }
                if (!close)
                    continue;
                const CycloNum d = a[q[v]] - a[q[u]];
                bool exact = true;
                for (std::size_t j = 0; j < mu.size() && exact; ++j) {
                    const CycloNum w = a[q[u]] + mu[j] * d;
                    exact = std::any_of(q.begin(), q.end(), [&](std::size_t i) { return a[i] == w; });
                }
                if (exact)
                    return true;
            }
        }
        return false;
    };

    std::uint64_t count = 0;
    std::vector<std::size_t> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        if (similar(comb))
            ++count;
        std::size_t i = k;
        while (i > 0 && comb[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++comb[i - 1];
        for (std::size_t j = i; j < k; ++j)
            comb[j] = comb[j - 1] + 1;
    }
    return Integer(static_cast<unsigned long>(count));
}

VerdictLedger subset_regular_bound(const Pattern &p, const Pattern &r, const PointSet &a,
                                   const std::string &claim_prefix)
{
    const int order = common_conductor(p.order(), r.order());
    const PointSet rb = r.base().lift(order);
    for (const auto &pt : p.base())
        if (!rb.contains(pt.lift(order)))
            throw std::invalid_argument("subset_regular_bound: pattern point " + pt.to_string() +
                                        " is not a vertex of the polygon");
    const std::size_t rsize = rb.size();
    const Integer per_polygon(static_cast<unsigned long>(rsize / p.sym_order()));

    VerdictLedger ledger;
    const CountReport in_polygon = count_similar(p, rb);
    ledger.add(LedgerEntry::exact(claim_prefix + "/S_P(R)", "copies of P inside R equal |R|/I", per_polygon,
                                  in_polygon.copies));
    if (rsize % p.sym_order() != 0)
        ledger.add(LedgerEntry::holds(claim_prefix + "/I-divides-R", "|Iso+(P)| divides |R|", 1));

    const CountReport pr = count_similar(p, a);
    const CountReport rr = count_similar(r, a);
    ledger.add(LedgerEntry::lower(claim_prefix + "/S_P(A)", "S_P(A) >= S_R(A) |R| / I", rr.copies * per_polygon,
                                  pr.copies));
    ledger.add(LedgerEntry::real(claim_prefix + "/index", "i_P(A) >= i_R(A)", BoundKind::lower, rr.index, pr.index,
                                 1e-12));
    return ledger;
}

}  // namespace patternforge
