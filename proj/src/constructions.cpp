#include "patternforge/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace patternforge {

namespace {

Integer to_int(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

Integer ipow(std::size_t base, int e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

CycloNum c(int order, long v) { return CycloNum(order, v); }

std::vector<CycloNum> scaled(const std::vector<CycloNum> &pts, const CycloNum &s, const CycloNum &t)
{
    std::vector<CycloNum> out;
    out.reserve(pts.size());
    for (const auto &p : pts)
        out.push_back(s * p + t);
    return out;
}

void append(std::vector<CycloNum> &dst, const std::vector<CycloNum> &src) { dst.insert(dst.end(), src.begin(), src.end()); }

std::string first_failure(const VerdictLedger &l)
{
    for (const auto &e : l.entries())
        if (!e.passed())
            return e.claim_id + " (expected " + bound_kind_name(e.kind) + " " + claim_value_to_string(e.expected) +
                   ", computed " + claim_value_to_string(e.computed) + ")";
    return {};
}

// Standard checks.  Each returns false once the candidate is known bad so the
// caller can skip the expensive count.
bool check_size(BuildReport &r, const Integer &expected)
{
    r.expected_size = expected;
    r.checks.add(LedgerEntry::exact(r.recipe + "/size", "number of points", expected, to_int(r.output.size())));
    return to_int(r.output.size()) == expected;
}

// At most `limit` points on a line; `exact` additionally pins the value.
bool check_collinear(BuildReport &r, std::size_t limit, bool exact)
{
    r.max_collinear = max_collinear(r.output);
    const std::string statement = "maximum number of collinear points";
    if (exact)
        r.checks.add(LedgerEntry::exact(r.recipe + "/max-collinear", statement, to_int(limit), to_int(r.max_collinear)));
    else
        r.checks.add(LedgerEntry::upper(r.recipe + "/max-collinear", statement, to_int(limit), to_int(r.max_collinear)));
    return r.checks.entries().back().passed();
}

bool check_parallelogram_free(BuildReport &r, bool strict)
{
    r.checks.add(LedgerEntry::holds(r.recipe + "/parallelogram-free", "no four points form a parallelogram",
                                    find_parallelogram(r.output) ? 1 : 0));
    bool ok = r.checks.entries().back().passed();
    if (strict && r.output.size() >= 4) {
        r.checks.add(LedgerEntry::holds(r.recipe + "/parallel-segment-free", "no two disjoint parallel segments",
                                        has_parallel_segments(r.output) ? 1 : 0));
        ok = ok && r.checks.entries().back().passed();
    }
    return ok;
}

void check_copies(BuildReport &r, const Pattern &p, const Integer &expected, BoundKind kind, CountOptions opt = {})
{
    r.pattern = p;
    r.count = count_similar(p, r.output, opt);
    r.expected_copies = expected;
    r.copies_kind = kind;
    const std::string statement = "similar copies of the pattern";
    r.checks.add(kind == BoundKind::exact ? LedgerEntry::exact(r.recipe + "/copies", statement, expected, r.count.copies)
                                          : LedgerEntry::lower(r.recipe + "/copies", statement, expected, r.count.copies));
}

// {pts} is one similar copy of p and lies in r.output.
void check_witness(BuildReport &r, const Pattern &p, const std::string &name, const std::vector<CycloNum> &pts)
{
    std::size_t bad = 0;
    for (const auto &q : pts)
        if (!r.output.contains(q))
            ++bad;
    PointSet w = PointSet::union_of(r.output.order(), pts);
    if (w.size() != pts.size() || count_similar(p, w).copies != 1)
        ++bad;
    r.checks.add(LedgerEntry::holds(r.recipe + "/witness/" + name, "listed triple is a copy inside the set", bad));
}

// Draws parameters until `attempt` yields a report whose checks all pass.
// `attempt` may return nullopt to reject a draw before building anything.
BuildReport sample_until_valid(const std::string &recipe, ParamSampler &rng, int budget,
                               const std::function<std::optional<BuildReport>(ParamSampler &)> &attempt)
{
    std::string last = "no draw accepted by the preconditions";
    for (int i = 0; i < budget; ++i) {
        std::optional<BuildReport> r;
        try {
            r = attempt(rng);
        } catch (const ArithmeticError &e) {
            last = e.what();
            continue;
        }
        if (!r)
            continue;
        if (r->checks.all_passed()) {
            r->resamples = i;
            r->seed = rng.seed();
            return std::move(*r);
        }
        last = first_failure(r->checks);
    }
    throw BuildError(recipe + ": resample budget exhausted after " + std::to_string(budget) +
                     " attempts; last failure: " + last);
}

BuildReport require_valid(BuildReport r)
{
    if (!r.checks.all_passed())
        throw BuildError(r.recipe + ": check failed: " + first_failure(r.checks));
    return r;
}

BuildReport start(const std::string &recipe, int order)
{
    BuildReport r;
    r.recipe = recipe;
    r.output = PointSet(order);
    return r;
}

}  // namespace

std::uint64_t size_cap()
{
    if (const char *env = std::getenv("PATTERNFORGE_SIZE_CAP")) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return kDefaultSizeCap;
}

// ---------------------------------------------------------------------------

ParamSampler::ParamSampler(std::uint64_t seed, int height) : seed_(seed), height_(height), rng_(seed)
{
    if (height < 1)
        throw std::invalid_argument("ParamSampler: height must be positive");
}

long ParamSampler::uniform(long lo, long hi)
{
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do
        x = rng_();
    while (x >= limit);
    return lo + static_cast<long>(x % range);
}

Rational ParamSampler::rational()
{
    auto nonzero = [this] {
        long v = uniform(-height_, height_ - 1);
        return v >= 0 ? v + 1 : v;  // [-H, H] \ {0}
    };
    long p = nonzero();
    long q = nonzero();
    Rational r(p, q);
    r.canonicalize();
    return r;
}

CycloNum ParamSampler::gaussian(int order)
{
    Rational re = rational();
    Rational im = rational();
    return CycloNum::gaussian(order, re, im);
}

// ---------------------------------------------------------------------------

Pattern regular_polygon(int k, int order)
{
    if (k < 3)
        throw std::invalid_argument("regular_polygon: k >= 3 required");
    if (order == 0)
        order = std::lcm(k, 4);
    if (order % k != 0)
        throw std::invalid_argument("regular_polygon: conductor must be a multiple of k");
    std::vector<CycloNum> pts;
    for (int j = 0; j < k; ++j)
        pts.push_back(CycloNum::zeta(order, static_cast<long>(j) * (order / k)));
    return Pattern(PointSet(order, std::move(pts)));
}

Pattern equilateral_triangle(int order) { return regular_polygon(3, order); }

Pattern unit_square() { return regular_polygon(4, 4); }

Pattern isosceles_triangle(long num, long den)
{
    const long g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (num <= 0 || 2 * num >= den)
        throw std::invalid_argument("isosceles_triangle: need 0 < alpha < pi/2");
    if (den > kMaxConductor)
        throw std::invalid_argument("isosceles_triangle: denominator above the supported conductor");
    const int order = static_cast<int>(den);
    const CycloNum u = CycloNum::zeta(order, num);
    return Pattern(PointSet(order, {c(order, 0), c(order, 1), -u}));
}

Pattern scalene_triangle(const CycloNum &z)
{
    const int order = z.order();
    return Pattern(PointSet(order, {c(order, 0), c(order, 1), z}));
}

Pattern generic_polygon(int k, ParamSampler &rng, int order)
{
    if (k < 3)
        throw std::invalid_argument("generic_polygon: k >= 3 required");
    for (int attempt = 0; attempt < kDefaultBudget; ++attempt) {
        std::vector<CycloNum> pts;
        for (int i = 0; i < k; ++i)
            pts.push_back(rng.gaussian(order));
        PointSet s = PointSet::union_of(order, pts);
        if (s.size() == static_cast<std::size_t>(k) && max_collinear(s) == 2)
            return Pattern(std::move(s));
    }
    throw BuildError("generic_polygon: resample budget exhausted");
}

bool is_scalene(const CycloNum &z)
{
    if (z.is_real())
        return false;
    const CycloNum one(z.order(), 1L);
    const CycloNum a = z * z.conj();
    const CycloNum b = (z - one) * (z - one).conj();
    return a != one && b != one && a != b;
}

// ---------------------------------------------------------------------------

BuildReport theorem3_generic(const Pattern &p, ParamSampler &rng, int m, SampleOptions opt)
{
    const std::size_t k = p.size();
    if (max_collinear(p.base()) >= static_cast<std::size_t>(m))
        throw std::invalid_argument("theorem3_generic: pattern already has " + std::to_string(m) +
                                    " collinear points");
    const int order = std::lcm(p.order(), 4);
    const Pattern pat = p.lift(order);
    const CycloNum &p1 = pat.base()[pat.anchors().first];
    const CycloNum &p2 = pat.base()[pat.anchors().second];
    const CycloNum inv = (p1 - p2).inverse();

    return sample_until_valid("theorem3", rng, opt.budget, [&](ParamSampler &g) -> std::optional<BuildReport> {
        const CycloNum z0 = g.gaussian(order);
        BuildReport r = start("theorem3", order);
        r.params = {{"k", std::to_string(k)}, {"m", std::to_string(m)}};
        r.parameters.push_back({"z0", z0, g.height(), 1});
        // f_p sends p1 -> z0 and p2 -> p
        std::vector<CycloNum> pts;
        for (const auto &q : pat.base()) {
            const CycloNum scale = (z0 - q) * inv;
            const CycloNum shift = (q * p1 - z0 * p2) * inv;
            append(pts, scaled({pat.base().begin(), pat.base().end()}, scale, shift));
        }
        r.output = PointSet::union_of(order, pts);
        if (!check_size(r, to_int(k * k - k + 1)) || !check_collinear(r, static_cast<std::size_t>(m - 1), false))
            return r;
        check_copies(r, pat, to_int(2 * k - 1), BoundKind::lower);
        return r;
    });
}

namespace {

struct Scalene5Points {
    CycloNum zero, one, z, w, wz;
};

Scalene5Points scalene5_points(const CycloNum &z)
{
    const int o = z.order();
    const CycloNum one(o, 1L);
    const CycloNum w = z - one + z.inverse();
    return {CycloNum(o, 0L), one, z, w, w * z};
}

}  // namespace

BuildReport scalene5_at(const CycloNum &z)
{
    if (!is_scalene(z))
        throw BuildError("scalene5: {0, 1, z} is not a scalene triangle for z = " + z.to_string());
    const auto s = scalene5_points(z);
    BuildReport r = start("scalene5", z.order());
    r.parameters.push_back({"z", z, kDefaultHeight, 1});
    r.output = PointSet::union_of(z.order(), std::vector<CycloNum>{s.zero, s.one, s.z, s.w, s.wz});
    if (check_size(r, 5) && check_collinear(r, 2, true)) {
        const Pattern t = scalene_triangle(z);
        check_copies(r, t, 4, BoundKind::exact);
        check_witness(r, t, "0,1,z", {s.zero, s.one, s.z});
        check_witness(r, t, "z,w,1", {s.z, s.w, s.one});
        check_witness(r, t, "1,z,wz", {s.one, s.z, s.wz});
        check_witness(r, t, "0,w,wz", {s.zero, s.w, s.wz});
    }
    return r;
}

BuildReport scalene5(ParamSampler &rng, SampleOptions opt)
{
    return sample_until_valid("scalene5", rng, opt.budget, [](ParamSampler &g) -> std::optional<BuildReport> {
        const CycloNum z = g.gaussian(4);
        if (!is_scalene(z))
            return std::nullopt;
        return scalene5_at(z);
    });
}

BuildReport scalene14_at(const CycloNum &z)
{
    if (!is_scalene(z))
        throw BuildError("scalene14: {0, 1, z} is not a scalene triangle for z = " + z.to_string());
    const int o = z.order();
    const auto s = scalene5_points(z);
    const CycloNum one(o, 1L);
    const std::vector<CycloNum> a1{s.zero, s.one, s.z, s.w, s.wz};
    const CycloNum extra = s.w * z * z / (z - one);
    std::vector<CycloNum> a = a1;
    append(a, scaled(a1, z, CycloNum(o, 0L)));
    a.push_back(extra);
    std::vector<CycloNum> all = a;
    append(all, scaled(a, CycloNum(o, -1L), s.wz));

    BuildReport r = start("scalene14", o);
    r.parameters.push_back({"z", z, kDefaultHeight, 1});
    r.output = PointSet::union_of(o, all);
    if (check_size(r, 14) && check_collinear(r, 2, true)) {
        const Pattern t = scalene_triangle(z);
        check_copies(r, t, 26, BoundKind::lower);
        check_witness(r, t, "w,wz(1-z),wz^2/(z-1)", {s.w, s.wz * (one - z), extra});
        check_witness(r, t, "wz^2,wz-w,wz/(1-z)", {s.wz * z, s.wz - s.w, s.wz / (one - z)});
    }
    return r;
}

BuildReport scalene14(ParamSampler &rng, SampleOptions opt)
{
    return sample_until_valid("scalene14", rng, opt.budget, [](ParamSampler &g) -> std::optional<BuildReport> {
        const CycloNum z = g.gaussian(4);
        if (!is_scalene(z))
            return std::nullopt;
        return scalene14_at(z);
    });
}

BuildReport isosceles8(IsoscelesVariant variant, long num, long den)
{
    const long g = std::gcd(num, den);
    num /= g;
    den /= g;
    const std::string angle = std::to_string(num) + "pi/" + std::to_string(den);
    if (num <= 0 || 2 * num >= den)
        throw std::invalid_argument("isosceles8: alpha = " + angle + " is outside (0, pi/2)");
    if (variant == IsoscelesVariant::a && (12 * num) % den == 0)
        throw std::invalid_argument("isosceles8: variant a excludes alpha = k pi/12 (got " + angle +
                                    "); use variant b, or subset_regular_bound for pi/6, pi/4, pi/3");
    if (variant == IsoscelesVariant::b && num == 1 && (den == 3 || den == 4 || den == 6))
        throw std::invalid_argument("isosceles8: variant b excludes alpha = " + angle +
                                    "; use variant a or subset_regular_bound");

    const Pattern t = isosceles_triangle(num, den);
    const int o = t.order();
    const CycloNum u = CycloNum::zeta(o, num);
    const CycloNum zero(o, 0L), one(o, 1L);
    std::vector<CycloNum> b;
    if (variant == IsoscelesVariant::a)
        b = {zero, one, u, one + u, (u + u + one) / (u + one)};
    else
        b = {zero, one, u, u / (u + one), one - ((u + one) * (u + one)).inverse()};
    std::vector<CycloNum> all = b;
    for (const auto &x : b)
        all.push_back(x.conj());

    BuildReport r = start(variant == IsoscelesVariant::a ? "isosceles8a" : "isosceles8b", o);
    r.params = {{"alpha", angle}};
    r.output = PointSet::union_of(o, all);
    if (check_size(r, 8) && check_collinear(r, 2, true)) {
        check_copies(r, t, 9, BoundKind::exact);
        if (variant == IsoscelesVariant::a) {
            check_witness(r, t, "0,1,1+u", {zero, one, one + u});
            check_witness(r, t, "1/u,1,u", {u.inverse(), one, u});
        }
    }
    return require_valid(std::move(r));
}

BuildReport equilateral15_at(const CycloNum &z4)
{
    constexpr int o = 12;
    const CycloNum z = z4.lift(o);
    const CycloNum w = CycloNum::zeta(o, 4);
    const std::vector<CycloNum> tri{c(o, 1), w, w * w};
    std::vector<CycloNum> b{c(o, 1), -z};
    append(b, scaled(tri, z, c(o, -1)));
    std::vector<CycloNum> all;
    for (int k = 0; k < 3; ++k)
        append(all, scaled(b, CycloNum::zeta(o, 4 * k), c(o, 0)));

    BuildReport r = start("equilateral15", o);
    r.parameters.push_back({"z", z, kDefaultHeight, 1});
    r.output = PointSet::union_of(o, all);
    if (check_size(r, 15) && check_collinear(r, 2, true))
        check_copies(r, equilateral_triangle(o), 29, BoundKind::exact);
    return r;
}

BuildReport equilateral15(ParamSampler &rng, SampleOptions opt)
{
    return sample_until_valid("equilateral15", rng, opt.budget, [](ParamSampler &g) -> std::optional<BuildReport> {
        return equilateral15_at(g.gaussian(4));
    });
}

BuildReport even_kgon(int k, ParamSampler &rng, SampleOptions opt)
{
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("even_kgon: k must be even and at least 4 (got " + std::to_string(k) + ")");
    const int o = std::lcm(k, 4);
    if (o > kMaxConductor)
        throw std::invalid_argument("even_kgon: k = " + std::to_string(k) + " needs an unsupported conductor");
    const Pattern poly = regular_polygon(k, o);
    const CycloNum w = CycloNum::zeta(o, o / k);
    const CycloNum one = c(o, 1);
    const Integer size = to_int(static_cast<std::size_t>(k / 2 * (k * k - 2 * k + 4)));
    const Integer copies = to_int(static_cast<std::size_t>((5 * k * k - 6 * k + 4) / 2));

    auto r = sample_until_valid("even_kgon", rng, opt.budget, [&](ParamSampler &g) -> std::optional<BuildReport> {
        const CycloNum z = g.gaussian(o);
        std::vector<CycloNum> rk;
        for (int j = 0; j < k; ++j)
            rk.push_back(one + w + z * CycloNum::zeta(o, static_cast<long>(j) * (o / k)));
        const CycloNum inv = (one - w).inverse();
        std::vector<CycloNum> a1{c(o, 2)};
        CycloNum wj = one;
        for (int j = 1; j < k; ++j) {
            wj *= w;
            append(a1, scaled(rk, (one - wj) * inv, c(o, 2) * (wj - w) * inv));
        }
        std::vector<CycloNum> all;
        CycloNum wl = one;
        for (int l = 0; l < k; ++l, wl *= w)
            append(all, scaled(a1, wl, c(o, 0)));

        BuildReport r = start("even_kgon", o);
        r.params = {{"k", std::to_string(k)}};
        r.parameters.push_back({"z", z, g.height(), 1});
        r.output = PointSet::union_of(o, all);
        if (check_size(r, size) && check_collinear(r, 2, true))
            check_copies(r, poly, copies, BoundKind::lower);
        return r;
    });
    if (k > 10)
        r.notes.push_back("k > 10: the index no longer exceeds that of the polygon alone");
    return r;
}

BuildReport pentagon120(ParamSampler &rng, SampleOptions opt)
{
    constexpr int o = 20;
    const Pattern pent = regular_polygon(5, o);
    const CycloNum w = CycloNum::zeta(o, 4);
    const CycloNum one = c(o, 1);
    const CycloNum sqrt5 = one + c(o, 2) * (w + CycloNum::zeta(o, 16));
    const CycloNum half(o, Rational(1, 2));

    return sample_until_valid("pentagon120", rng, opt.budget, [&](ParamSampler &g) -> std::optional<BuildReport> {
        const CycloNum z = g.gaussian(o);
        std::vector<CycloNum> p;
        for (int j = 0; j < 5; ++j)
            p.push_back(z * CycloNum::zeta(o, 4 * j));
        const auto a1 = scaled(p, one, (sqrt5 + c(o, 3)) * half);
        const auto a2 = scaled(p, -(sqrt5 + one) * half, (sqrt5 + one) * half);
        const std::vector<CycloNum> a3{(w * w - one) * z, (w * w - one) * (w + one)};
        auto rotations = [&](const std::vector<CycloNum> &s, long sign) {
            std::vector<CycloNum> out;
            for (int k = 0; k < 5; ++k)
                append(out, scaled(s, c(o, sign) * CycloNum::zeta(o, 4 * k), c(o, 0)));
            return out;
        };

        BuildReport r = start("pentagon120", o);
        r.parameters.push_back({"z", z, g.height(), 1});
        std::vector<CycloNum> all;
        for (const auto *s : {&a1, &a2, &a3})
            for (long sign : {1L, -1L})
                append(all, rotations(*s, sign));
        r.output = PointSet::union_of(o, all);
        if (!check_size(r, 120) || !check_collinear(r, 2, true))
            return r;
        CountOptions copt;
        copt.incidence = true;
        check_copies(r, pent, 264, BoundKind::lower, copt);
        std::size_t off = 0;
        for (std::size_t i = 0; i < r.count.incidence.size(); ++i)
            if (r.count.incidence[i] != 11)
                ++off;
        r.checks.add(LedgerEntry::holds("pentagon120/incidence", "every point lies on exactly 11 pentagons", off));

        const char *names[] = {"A1", "-A1", "A2", "-A2"};
        int idx = 0;
        for (const auto *s : {&a1, &a2})
            for (long sign : {1L, -1L}) {
                const auto part = rotations(*s, sign);
                r.checks.add(LedgerEntry::exact(std::string("pentagon120/rotations(") + names[idx++] + ")",
                                                "pentagons in the five rotations", 15,
                                                count_similar(pent, PointSet::union_of(o, part)).copies));
            }
        auto decagons = rotations(a3, 1);
        append(decagons, rotations(a3, -1));
        r.checks.add(LedgerEntry::exact("pentagon120/rotations(+-A3)", "pentagons in the two decagons", 4,
                                        count_similar(pent, PointSet::union_of(o, decagons)).copies));
        return r;
    });
}

// ---------------------------------------------------------------------------

double HexTarget::index() const { return index_value(3, copies, size); }

std::optional<HexTarget> hex_odd_target(int m)
{
    switch (m) {
    case 5:
        return HexTarget{14, 34};
    case 7:
        return HexTarget{30, 166};
    case 9:
        return HexTarget{52, 516};
    default:
        return std::nullopt;
    }
}

namespace {

// a + b zeta_6 with hexagonal norm max(|a|, |b|, |a + b|) <= radius.
std::vector<std::pair<long, long>> hexagon(long radius)
{
    std::vector<std::pair<long, long>> out;
    for (long a = -radius; a <= radius; ++a)
        for (long b = -radius; b <= radius; ++b)
            if (std::max({std::labs(a), std::labs(b), std::labs(a + b)}) <= radius)
                out.emplace_back(a, b);
    return out;
}

PointSet eisenstein(const std::vector<std::pair<long, long>> &coords)
{
    constexpr int o = 12;
    const CycloNum w = CycloNum::zeta(o, 2);
    std::vector<CycloNum> pts;
    for (auto [a, b] : coords)
        pts.push_back(c(o, a) + c(o, b) * w);
    return PointSet(o, std::move(pts));
}

}  // namespace

BuildReport hex_lattice_cluster(int m)
{
    if (m < 4)
        throw std::invalid_argument("hex_lattice_cluster: m >= 4 required");
    const Pattern tri = equilateral_triangle(12);
    BuildReport r = start("hex_lattice_cluster", 12);
    r.params = {{"m", std::to_string(m)}};
    if (m % 2 == 0) {
        const long mm = m;
        r.output = eisenstein(hexagon(mm / 2 - 1));
        check_size(r, Integer((3 * mm * mm - 6 * mm + 4) / 4));
        check_collinear(r, static_cast<std::size_t>(m - 1), true);
        check_copies(r, tri, Integer((7 * mm * mm * mm * mm - 28 * mm * mm * mm + 36 * mm * mm - 16 * mm) / 64),
                     BoundKind::exact);
        return require_valid(std::move(r));
    }
    const auto target = hex_odd_target(m);
    if (!target)
        throw std::invalid_argument("hex_lattice_cluster: odd m must be 5, 7 or 9 (got " + std::to_string(m) + ")");

    // Hexagon of side (m-1)/2 has m points on its three long diagonals;
    // dropping corners brings every line down to at most m-1.
    const long rad = (m - 1) / 2;
    const std::vector<std::pair<long, long>> alternate{{rad, 0}, {-rad, rad}, {0, -rad}};
    const std::vector<std::pair<long, long>> all_six{{rad, 0}, {-rad, rad}, {0, -rad}, {-rad, 0}, {rad, -rad}, {0, rad}};
    std::optional<BuildReport> best;
    for (const auto *drop : {&alternate, &all_six}) {
        auto coords = hexagon(rad);
        std::erase_if(coords, [drop](const std::pair<long, long> &p) {
            return std::find(drop->begin(), drop->end(), p) != drop->end();
        });
        BuildReport cand = r;
        cand.output = eisenstein(coords);
        cand.params["corners_removed"] = std::to_string(drop->size());
        if (!check_collinear(cand, static_cast<std::size_t>(m - 1), false))
            continue;
        cand.expected_size = to_int(cand.output.size());
        cand.pattern = tri;
        cand.count = count_similar(tri, cand.output);
        cand.expected_copies = target->copies;
        cand.copies_kind = BoundKind::lower;
        if (!best || cand.count.index > best->count.index)
            best = std::move(cand);
    }
    if (!best)
        throw BuildError("hex_lattice_cluster: no candidate meets the collinearity limit");
    std::ostringstream note;
    note.precision(6);
    note << "candidate cluster: " << best->output.size() << " points, " << best->count.copies
         << " triangles, index " << best->count.index << "; reference set: " << target->size << " points, "
         << target->copies << " triangles, index " << target->index() << " ("
         << (best->count.index >= target->index() ? "met" : "not met") << ")";
    best->notes.push_back(note.str());
    return require_valid(std::move(*best));
}

// ---------------------------------------------------------------------------

GenericSum minkowski_sum_generic(const PointSet &a, const PointSet &b, int m, ParamSampler &rng, SampleOptions opt)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("minkowski_sum_generic: empty operand");
    if (max_collinear(a) >= static_cast<std::size_t>(m) || max_collinear(b) >= static_cast<std::size_t>(m))
        throw std::invalid_argument("minkowski_sum_generic: an operand already has " + std::to_string(m) +
                                    " collinear points");
    const int o = std::lcm(std::lcm(a.order(), b.order()), 4);
    if (o > kMaxConductor)
        throw OrderMismatch("minkowski_sum_generic: common conductor " + std::to_string(o) + " unsupported");
    const PointSet la = a.lift(o), lb = b.lift(o);
    const std::size_t want = a.size() * b.size();
    for (int i = 0; i < opt.budget; ++i) {
        const CycloNum v = rng.gaussian(o);
        PointSet s(o);
        for (const auto &x : la)
            for (const auto &y : lb)
                s.insert(x + v * y);
        if (s.size() != want || max_collinear(s) >= static_cast<std::size_t>(m))
            continue;
        return {GenericParam{"v", v, rng.height(), i + 1}, std::move(s), i};
    }
    throw BuildError("minkowski_sum_generic: resample budget exhausted after " + std::to_string(opt.budget) +
                     " attempts");
}

Integer iteration_bound(std::size_t sym_order, const Integer &copies, std::size_t n, int j)
{
    const Integer i(static_cast<unsigned long>(sym_order));
    Integer top, base = i * copies + static_cast<unsigned long>(n);
    mpz_pow_ui(top.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(j));
    return (top - ipow(n, j)) / i;
}

BuildReport minkowski_iterate(const Pattern &p, const PointSet &a, int j, int m, ParamSampler &rng, SampleOptions opt)
{
    if (j < 1)
        throw std::invalid_argument("minkowski_iterate: j >= 1 required");
    const Integer want = ipow(a.size(), j);
    if (want > Integer(static_cast<unsigned long>(size_cap())))
        throw BuildError("minkowski_iterate: |A|^j = " + want.get_str() + " exceeds the size cap of " +
                         std::to_string(size_cap()));
    if (max_collinear(a) >= static_cast<std::size_t>(m))
        throw std::invalid_argument("minkowski_iterate: A already has " + std::to_string(m) + " collinear points");

    const CountReport base = count_similar(p, a);
    BuildReport r = start("minkowski_iterate", a.order());
    r.params = {{"j", std::to_string(j)}, {"m", std::to_string(m)}};
    r.seed = rng.seed();
    PointSet cur = a;
    for (int step = 2; step <= j; ++step) {
        GenericSum g = minkowski_sum_generic(cur, a, m, rng, opt);
        r.resamples += g.resamples;
        g.v.name = "v" + std::to_string(step);
        r.parameters.push_back(std::move(g.v));
        cur = std::move(g.sum);
    }
    r.output = std::move(cur);
    check_size(r, want);
    check_collinear(r, static_cast<std::size_t>(m - 1), false);
    check_copies(r, p, iteration_bound(base.sym_order, base.copies, a.size(), j), BoundKind::lower);
    std::ostringstream note;
    note.precision(6);
    note << "base set: |A| = " << a.size() << ", S = " << base.copies << ", index " << base.index
         << "; constant c = 1/(2 I |A|^i) = "
         << 1.0 / (2.0 * static_cast<double>(base.sym_order) * std::pow(static_cast<double>(a.size()), base.index));
    r.notes.push_back(note.str());
    return require_valid(std::move(r));
}

// ---------------------------------------------------------------------------

PointSet pfree_q_set(const PointSet &p, const PointSet &a, const CycloNum &u, const CycloNum &v)
{
    const int o = u.order();
    const PointSet lp = p.lift(o), la = a.lift(o);
    const CycloNum one(o, 1L);
    PointSet q(o);
    for (const auto &x : lp) {
        const CycloNum scale = v * x - x + one;
        const CycloNum shift = u * x;
        for (const auto &y : la)
            q.insert(scale * y + shift);
    }
    return q;
}

Integer pfree_upper_bound(std::size_t n)
{
    Integer cube = ipow(n, 3), root;
    mpz_sqrt(root.get_mpz_t(), cube.get_mpz_t());
    return root + static_cast<unsigned long>(n);
}

namespace {

void require_pfree_input(const PointSet &s, const char *what)
{
    if (s.size() >= 3 && max_collinear(s) > 2)
        throw std::invalid_argument(std::string("pfree: ") + what + " has three collinear points");
    if (find_parallelogram(s))
        throw std::invalid_argument(std::string("pfree: ") + what + " contains a parallelogram");
}

}  // namespace

BuildReport pfree_Q(const Pattern &p, const PointSet &a, ParamSampler &rng, PfreeOptions opt)
{
    require_pfree_input(p.base(), "pattern");
    require_pfree_input(a, "input set");
    const int o = std::lcm(std::lcm(p.order(), a.order()), 4);
    if (o > kMaxConductor)
        throw OrderMismatch("pfree_Q: common conductor " + std::to_string(o) + " unsupported");
    const Pattern pat = p.lift(o);
    const CountReport base = count_similar(pat, a);
    const Integer bound = to_int(p.size()) * base.copies + static_cast<unsigned long>(a.size());

    return sample_until_valid("pfree_Q", rng, opt.budget, [&](ParamSampler &g) -> std::optional<BuildReport> {
        const CycloNum u = g.gaussian(o), v = g.gaussian(o);
        BuildReport r = start("pfree_Q", o);
        r.params = {{"strict", opt.strict ? "true" : "false"}};
        r.parameters.push_back({"u", u, g.height(), 1});
        r.parameters.push_back({"v", v, g.height(), 1});
        r.output = pfree_q_set(pat.base(), a, u, v);
        if (!check_size(r, to_int(a.size() * p.size())) || !check_collinear(r, 2, false) ||
            !check_parallelogram_free(r, opt.strict))
            return r;
        check_copies(r, pat, bound, BoundKind::lower);
        return r;
    });
}

BuildReport pfree_iterate(const Pattern &p, int m, ParamSampler &rng, PfreeOptions opt)
{
    if (m < 1)
        throw std::invalid_argument("pfree_iterate: m >= 1 required");
    const Integer want = ipow(p.size(), m);
    if (want > Integer(static_cast<unsigned long>(size_cap())))
        throw BuildError("pfree_iterate: |P|^m = " + want.get_str() + " exceeds the size cap of " +
                         std::to_string(size_cap()));
    require_pfree_input(p.base(), "pattern");
    const int o = std::lcm(p.order(), 4);
    const Pattern pat = p.lift(o);

    BuildReport r = start("pfree_iterate", o);
    r.params = {{"m", std::to_string(m)}, {"strict", opt.strict ? "true" : "false"}};
    r.seed = rng.seed();
    PointSet cur = pat.base();
    for (int step = 2; step <= m; ++step) {
        BuildReport q = pfree_Q(pat, cur, rng, opt);
        r.resamples += q.resamples;
        for (auto &param : q.parameters) {
            param.name += std::to_string(step);
            r.parameters.push_back(std::move(param));
        }
        cur = std::move(q.output);
    }
    r.output = std::move(cur);
    check_size(r, want);
    check_collinear(r, 2, false);
    check_parallelogram_free(r, opt.strict);
    check_copies(r, pat, to_int(static_cast<std::size_t>(m)) * ipow(p.size(), m - 1), BoundKind::lower);
    r.checks.add(LedgerEntry::upper("pfree_iterate/copies-upper", "S <= floor(n^{3/2}) + n",
                                    pfree_upper_bound(r.output.size()), r.count.copies));
    return require_valid(std::move(r));
}

// ---------------------------------------------------------------------------

const std::vector<RecipeInfo> &recipe_catalog()
{
    static const std::vector<RecipeInfo> catalog{
        {"theorem3", "generic k-gon", "k^2-k+1", ">= 2k-1", "union of the k images f_p(P) through one point z0"},
        {"scalene5", "scalene triangle {0,1,z}", "5", "4", "A1 = {0, 1, z, w, wz}, w = z - 1 + 1/z"},
        {"scalene14", "scalene triangle {0,1,z}", "14", ">= 26", "A u (wz - A), A = A1 u zA1 u {wz^2/(z-1)}"},
        {"isosceles8", "isosceles T(alpha) = {0,1,-u}", "8", "9", "B u conj(B), variants a and b"},
        {"equilateral15", "equilateral triangle", "15", "29", "B u wB u w^2B, B = {1, -z} u (-1 + zP)"},
        {"even_kgon", "regular k-gon, k even", "(k/2)(k^2-2k+4)", ">= (5k^2-6k+4)/2", "rotations of A1 = {2} u B_j"},
        {"pentagon120", "regular pentagon", "120", ">= 264", "rotations of +-A1, +-A2, +-A3"},
        {"hex_lattice_cluster", "equilateral triangle", "(3m^2-6m+4)/4", "(7m^4-28m^3+36m^2-16m)/64",
         "Eisenstein lattice hexagon, at most m-1 on a line"},
        {"sum", "any", "|A||B|", ">= lemma bound", "generic Minkowski sum A + vB"},
        {"iterate", "any", "|A|^j", ">= (1/I)((IS+|A|)^j - |A|^j)", "iterated generic Minkowski sum"},
        {"pfree", "general position, parallelogram-free", "|P|^m", ">= m|P|^(m-1)", "recursion A -> Q(P, A, u, v)"},
    };
    return catalog;
}

}  // namespace patternforge
