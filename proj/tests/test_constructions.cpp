#include "patternforge/constructions.hpp"
#include "patternforge/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace patternforge;

namespace {

CycloNum g(long a, long b, long c, long d) { return CycloNum::gaussian(4, Rational(a, b), Rational(c, d)); }

// Frozen parameter for the deterministic regressions below.
const CycloNum kZ = g(2, 7, 5, 3);

void require_clean(const BuildReport &r)
{
    INFO(r.checks.to_table());
    REQUIRE(r.checks.all_passed());
    REQUIRE(r.output.size() == r.expected_size);
}

}  // namespace

TEST_CASE("sampler is reproducible and stays within the height")
{
    ParamSampler a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        const CycloNum x = a.gaussian(), y = b.gaussian();
        REQUIRE(x == y);
        for (const auto &q : x.coefficients()) {
            REQUIRE(q != 0);
            REQUIRE(abs(q.get_num()) <= kDefaultHeight);
            REQUIRE(q.get_den() <= kDefaultHeight);
        }
    }
    CHECK(ParamSampler(42).gaussian() != c.gaussian());
    ParamSampler d(1);
    for (int i = 0; i < 1000; ++i) {
        const long v = d.uniform(-3, 3);
        REQUIRE(v >= -3);
        REQUIRE(v <= 3);
    }
    CHECK(ParamSampler(7).gaussian(12).order() == 12);
}

TEST_CASE("pattern factories")
{
    CHECK(regular_polygon(5).order() == 20);
    CHECK(regular_polygon(6).order() == 12);
    CHECK_THROWS_AS(regular_polygon(2), std::invalid_argument);
    CHECK_THROWS_AS(regular_polygon(5, 12), std::invalid_argument);
    CHECK(is_scalene(kZ));
    CHECK_FALSE(is_scalene(g(1, 2, 3, 1)));             // |z| = |z - 1|
    CHECK_FALSE(is_scalene(g(3, 1, 0, 1)));             // collinear
    CHECK_FALSE(is_scalene(CycloNum::zeta(4, 1)));      // |z| = 1
    CHECK_THROWS_AS(isosceles_triangle(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(isosceles_triangle(1, 121), std::invalid_argument);
    ParamSampler rng(5);
    const Pattern p = generic_polygon(6, rng);
    CHECK(p.size() == 6);
    CHECK(max_collinear(p.base()) == 2);
}

TEST_CASE("triangle recipes at a fixed parameter")
{
    const BuildReport s5 = scalene5_at(kZ);
    require_clean(s5);
    CHECK(s5.count.copies == 4);

    const BuildReport s14 = scalene14_at(kZ);
    require_clean(s14);
    CHECK(s14.output.size() == 14);
    CHECK(s14.count.copies == 26);

    const BuildReport e15 = equilateral15_at(g(3, 11, -2, 5).lift(12));
    require_clean(e15);
    CHECK(e15.count.copies == 29);

    CHECK_THROWS_AS(scalene14_at(g(1, 2, 3, 1)), BuildError);
}

TEST_CASE("sampled recipes")
{
    ParamSampler rng(1);
    const BuildReport s14 = scalene14(rng);
    require_clean(s14);
    CHECK(s14.count.copies >= 26);
    CHECK(s14.seed == 1u);
    CHECK(!s14.parameters.empty());

    for (std::uint64_t seed : {1u, 2u, 3u}) {
        ParamSampler r(seed);
        const Pattern p = generic_polygon(3, r);
        const BuildReport t = theorem3_generic(p, r, 3);
        require_clean(t);
        CHECK(t.output.size() == 7);
        CHECK(t.count.copies == 5);
    }
    ParamSampler r4(9);
    const BuildReport t4 = theorem3_generic(generic_polygon(4, r4), r4, 3);
    require_clean(t4);
    CHECK(t4.output.size() == 13);
    CHECK(t4.count.copies >= 7);
}

TEST_CASE("isosceles recipe and its exclusions")
{
    for (auto variant : {IsoscelesVariant::a, IsoscelesVariant::b}) {
        const BuildReport r = isosceles8(variant, 1, 5);
        require_clean(r);
        CHECK(r.output.size() == 8);
        CHECK(r.count.copies == 9);
    }
    const BuildReport a = isosceles8(IsoscelesVariant::a, 1, 5);
    std::size_t witness_checks = 0;
    for (const auto &e : a.checks.entries())
        if (e.claim_id.find("/witness/") != std::string::npos)
            ++witness_checks;
    CHECK(witness_checks >= 2);
    CHECK_THROWS_AS(isosceles8(IsoscelesVariant::a, 1, 6), std::invalid_argument);
    CHECK_THROWS_AS(isosceles8(IsoscelesVariant::a, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(isosceles8(IsoscelesVariant::b, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(isosceles8(IsoscelesVariant::b, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(isosceles8(IsoscelesVariant::b, 1, 6), std::invalid_argument);
    CHECK_THROWS_AS(isosceles8(IsoscelesVariant::a, 3, 5), std::invalid_argument);
    // variant b allows pi/12, variant a does not
    CHECK(isosceles8(IsoscelesVariant::b, 1, 12).count.copies == 9);
    CHECK_THROWS_AS(isosceles8(IsoscelesVariant::a, 1, 12), std::invalid_argument);
}

TEST_CASE("regular polygon recipes")
{
    const struct {
        int k;
        std::size_t size;
        long copies;
    } expected[] = {{4, 24, 30}, {6, 84, 74}, {8, 208, 138}};
    for (const auto &e : expected) {
        CAPTURE(e.k);
        ParamSampler rng(1);
        const BuildReport r = even_kgon(e.k, rng);
        require_clean(r);
        CHECK(r.output.size() == e.size);
        CHECK(r.count.copies >= e.copies);
    }
    ParamSampler rng(1);
    CHECK_THROWS_AS(even_kgon(5, rng), std::invalid_argument);
}

TEST_CASE("hexagonal clusters")
{
    const struct {
        int m;
        std::size_t size;
        long copies;
    } even[] = {{4, 7, 8}, {6, 19, 66}, {8, 37, 258}};
    for (const auto &e : even) {
        const BuildReport r = hex_lattice_cluster(e.m);
        require_clean(r);
        CHECK(r.output.size() == e.size);
        CHECK(r.count.copies == e.copies);
        CHECK(r.max_collinear == static_cast<std::size_t>(e.m - 1));
    }
    // odd m: trimmed hexagons, compared against the reference (|A|, S) by index
    const struct {
        int m;
        std::size_t size;
        long copies;
    } odd[] = {{5, 16, 44}, {7, 34, 215}, {9, 58, 640}};
    for (const auto &e : odd) {
        const BuildReport r = hex_lattice_cluster(e.m);
        CHECK(r.output.size() == e.size);
        CHECK(r.count.copies == e.copies);
        CHECK(r.max_collinear <= static_cast<std::size_t>(e.m - 1));
        const auto target = hex_odd_target(e.m);
        REQUIRE(target);
        CHECK(r.count.index >= target->index());
    }
    CHECK(hex_odd_target(5)->size == 14);
    CHECK(hex_odd_target(5)->copies == 34);
    CHECK(hex_odd_target(7)->copies == 166);
    CHECK(hex_odd_target(9)->copies == 516);
    CHECK_FALSE(hex_odd_target(11));
    CHECK_THROWS_AS(hex_lattice_cluster(3), std::invalid_argument);
    CHECK_THROWS_AS(hex_lattice_cluster(11), std::invalid_argument);
}

TEST_CASE("minkowski sums and iteration")
{
    const PointSet hex = hex_lattice_cluster(4).output;
    ParamSampler rng(1);
    const GenericSum s = minkowski_sum_generic(hex, hex, 4, rng);
    CHECK(s.sum.size() == 49);
    CHECK(max_collinear(s.sum) <= 3);

    CHECK(iteration_bound(3, 8, 7, 2) == 304);
    CHECK(iteration_bound(3, 8, 7, 3) == 9816);
    CHECK(iteration_bound(1, 4, 5, 1) == 4);

    ParamSampler r2(1);
    const BuildReport it2 = minkowski_iterate(equilateral_triangle(), hex, 2, 4, r2);
    require_clean(it2);
    CHECK(it2.count.copies == 304);
    ParamSampler r3(1);
    const BuildReport it3 = minkowski_iterate(equilateral_triangle(), hex, 3, 4, r3);
    require_clean(it3);
    CHECK(it3.output.size() == 343);
    CHECK(it3.count.copies == 9816);

    ParamSampler r4(1);
    CHECK_THROWS_AS(minkowski_iterate(equilateral_triangle(), hex, 8, 4, r4), BuildError);  // 7^8 > cap
    ParamSampler r5(1);
    CHECK_THROWS_AS(minkowski_sum_generic(hex, hex, 4, r5, {0}), BuildError);
}

TEST_CASE("parallelogram-free recursion")
{
    const struct {
        int m;
        std::size_t size;
        long copies;
    } expected[] = {{2, 9, 6}, {3, 27, 27}, {4, 81, 108}};
    for (const auto &e : expected) {
        CAPTURE(e.m);
        ParamSampler rng(1);
        PfreeOptions opt;
        opt.strict = true;
        const BuildReport r = pfree_iterate(equilateral_triangle(), e.m, rng, opt);
        require_clean(r);
        CHECK(r.output.size() == e.size);
        CHECK(r.count.copies == e.copies);
        CHECK_FALSE(find_parallelogram(r.output));
        CHECK_FALSE(has_parallel_segments(r.output));
        CHECK(check_pfree_bounds(r).all_passed());
    }
    ParamSampler rng(2);
    const BuildReport sc = pfree_iterate(scalene_triangle(kZ), 3, rng);
    require_clean(sc);
    CHECK(sc.count.copies == 27);
    CHECK(pfree_upper_bound(9) == 27 + 9);
    CHECK(pfree_upper_bound(10) == 31 + 10);
}

TEST_CASE("catalog lists every recipe")
{
    std::set<std::string> names;
    for (const auto &r : recipe_catalog())
        names.insert(r.name);
    for (const char *n : {"theorem3", "scalene5", "scalene14", "isosceles8", "equilateral15", "even_kgon",
                          "pentagon120", "hex_lattice_cluster", "sum", "iterate", "pfree"})
        CHECK(names.count(n) == 1);
}
