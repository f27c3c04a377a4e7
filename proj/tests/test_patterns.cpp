#include "patternforge/constructions.hpp"
#include "patternforge/patterns.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace patternforge;

namespace {

CycloNum g(long re, long im) { return CycloNum::gaussian(4, Rational(re), Rational(im)); }

PointSet random_lattice_set(std::mt19937_64 &rng, std::size_t n, int span)
{
    std::uniform_int_distribution<long> c(0, span);
    PointSet s(4);
    while (s.size() < n) {
        const long x = c(rng);
        const long y = c(rng);
        s.insert(g(x, y));
    }
    return s;
}

// True iff q_j = a q_i... i.e. the tuple is the image of the pattern under z -> s z + t, s != 0.
bool is_similar_image(const Pattern &p, const PointSet &a, const std::vector<std::size_t> &w)
{
    const auto &b = p.base();
    const CycloNum s = (a[w[1]] - a[w[0]]) / (b[1] - b[0]);
    const CycloNum t = a[w[0]] - s * b[0];
    for (std::size_t j = 0; j < b.size(); ++j)
        if (s * b[j] + t != a[w[j]])
            return false;
    return true;
}

}  // namespace

TEST_CASE("proper symmetry orders")
{
    CHECK(equilateral_triangle().sym_order() == 3);
    CHECK(unit_square().sym_order() == 4);
    CHECK(regular_polygon(5).sym_order() == 5);
    CHECK(regular_polygon(6).sym_order() == 6);
    CHECK(scalene_triangle(g(2, 3)).sym_order() == 1);
    // isosceles triangles are only reflection-symmetric
    CHECK(isosceles_triangle(1, 5).sym_order() == 1);
    // rectangle: the half turn only
    CHECK(Pattern(PointSet(4, {g(0, 0), g(2, 0), g(2, 1), g(0, 1)})).sym_order() == 2);
    const Pattern square = unit_square();
    for (const auto &perm : square.symmetries())
        CHECK(std::is_permutation(perm.begin(), perm.end(), std::vector<std::size_t>{0, 1, 2, 3}.begin()));
    CHECK(proper_symmetry_order(regular_polygon(8)) == 8);
    CHECK_THROWS_AS(Pattern(PointSet(4, {g(0, 0), g(1, 0)})), std::invalid_argument);
    CHECK_THROWS_AS(Pattern(PointSet(4, {g(0, 0), g(1, 0), g(0, 1)}), 1, 1), std::invalid_argument);
}

TEST_CASE("triangle with its centre holds one copy")
{
    const Pattern t = equilateral_triangle();
    PointSet a = t.base();
    a.insert(CycloNum(12));
    const CountReport r = count_similar(t, a);
    CHECK(r.copies == 1);
    CHECK(r.ordered_matches == 3);
    CHECK(r.index == doctest::Approx(std::log(7.0) / std::log(4.0)));
    CHECK(brute_force_count(t, a) == 1);
}

TEST_CASE("small closed forms")
{
    // a k x k grid holds sum_{d} (k-d)^2 axis squares plus tilted ones: (k^4 - k^2)/12
    for (int k = 2; k <= 6; ++k) {
        std::vector<CycloNum> pts;
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y)
                pts.push_back(g(x, y));
        CHECK(count_similar(unit_square(), PointSet(4, pts)).copies == (k * k * k * k - k * k) / 12);
    }
    // regular hexagon: two equilateral triangles
    CHECK(count_similar(equilateral_triangle(), regular_polygon(6, 12).base()).copies == 2);
    // the pattern itself
    CHECK(count_similar(regular_polygon(5), regular_polygon(5).base()).copies == 1);
}

TEST_CASE("count agrees with brute force on random sets")
{
    std::mt19937_64 rng(21);
    const std::vector<Pattern> patterns{unit_square(), scalene_triangle(g(2, 1)), scalene_triangle(g(0, 2)),
                                        Pattern(PointSet(4, {g(0, 0), g(1, 0), g(1, 1)}))};
    for (const auto &p : patterns)
        for (int t = 0; t < 60; ++t) {
            const PointSet a = random_lattice_set(rng, 12, 4);
            REQUIRE(count_similar(p, a).copies == brute_force_count(p, a));
        }
}

TEST_CASE("count is independent of the anchors")
{
    std::mt19937_64 rng(22);
    const PointSet base(4, {g(0, 0), g(1, 0), g(1, 1), g(0, 2)});
    for (int t = 0; t < 20; ++t) {
        const PointSet a = random_lattice_set(rng, 14, 4);
        const Integer ref = count_similar(Pattern(base), a).copies;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (i != j)
                    REQUIRE(count_similar(Pattern(base, i, j), a).copies == ref);
    }
}

TEST_CASE("count is invariant under similarities of the target")
{
    std::mt19937_64 rng(23);
    const Pattern p = unit_square();
    for (int t = 0; t < 20; ++t) {
        const PointSet a = random_lattice_set(rng, 16, 5);
        const Integer ref = count_similar(p, a).copies;
        CHECK(count_similar(p, a.affine(g(3, -2), g(7, 1))).copies == ref);
        const PointSet lifted = a.lift(60).affine(CycloNum::zeta(60, 7), CycloNum::zeta(60, 1));
        CHECK(count_similar(p, lifted).copies == ref);
    }
}

TEST_CASE("witnesses are distinct similar copies")
{
    const BuildReport hex = hex_lattice_cluster(6);
    const Pattern t = equilateral_triangle();
    CountOptions opt;
    opt.full_witnesses = true;
    opt.incidence = true;
    const CountReport r = count_similar(t, hex.output, opt);
    REQUIRE(r.copies == 66);
    REQUIRE(r.witnesses.size() == 66);
    std::set<std::vector<std::size_t>> seen;
    for (const auto &w : r.witnesses) {
        REQUIRE(is_similar_image(t.lift(hex.output.order()), hex.output, w));
        auto key = w;
        std::sort(key.begin(), key.end());
        REQUIRE(seen.insert(key).second);
    }
    std::size_t total = 0;
    for (auto c : r.incidence)
        total += c;
    CHECK(total == 3 * 66);

    opt.full_witnesses = false;
    opt.witness_limit = 5;
    CHECK(count_similar(t, hex.output, opt).witnesses.size() == 5);
}

TEST_CASE("index, binomial and conductors")
{
    CHECK(index_value(1, 4, 5) == doctest::Approx(std::log(9.0) / std::log(5.0)));
    CHECK_THROWS_AS(index_value(1, 0, 1), std::invalid_argument);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(420, 10) > 10'000'000);
    CHECK(binomial(100000, 50000) == UINT64_MAX);
    CHECK(common_conductor(12, 20) == 60);
    CHECK(common_conductor(8, 120) == 120);
    CHECK_THROWS_AS(common_conductor(7, 20), OrderMismatch);
    const Pattern pent = regular_polygon(5);
    CHECK_THROWS_AS(brute_force_count(pent, hex_lattice_cluster(12).output), OracleGuardError);
}

TEST_CASE("subset of a regular set")
{
    const Pattern tri = equilateral_triangle();
    const Pattern hexagon = regular_polygon(6, 12);
    const PointSet a = hex_lattice_cluster(6).output;
    const VerdictLedger l = subset_regular_bound(tri, hexagon, a, "sr");
    CHECK(l.all_passed());
    REQUIRE(l.find("sr/S_P(R)") != nullptr);
    CHECK(std::get<Integer>(l.find("sr/S_P(R)")->computed) == 2);
    CHECK_THROWS_AS(subset_regular_bound(unit_square(), hexagon, a), std::invalid_argument);
}
