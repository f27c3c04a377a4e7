#include "patternforge/geom.hpp"
#include "patternforge/verify.hpp"

#include <doctest.h>

#include <random>

using namespace patternforge;

namespace {

CycloNum g(long re, long im) { return CycloNum::gaussian(4, Rational(re), Rational(im)); }

PointSet grid(int w, int h)
{
    std::vector<CycloNum> pts;
    for (int x = 0; x < w; ++x)
        for (int y = 0; y < h; ++y)
            pts.push_back(g(x, y));
    return PointSet(4, pts);
}

// Small integer grid points with a fixed seed: dense enough to contain
// collinear triples and parallelograms most of the time.
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

std::size_t collinear_triples_by_cross(const PointSet &s)
{
    // integer cross products on Gaussian-integer inputs
    std::size_t found = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            for (std::size_t k = j + 1; k < s.size(); ++k) {
                const Rational ux = s[j].coefficient(0) - s[i].coefficient(0);
                const Rational uy = s[j].coefficient(1) - s[i].coefficient(1);
                const Rational vx = s[k].coefficient(0) - s[i].coefficient(0);
                const Rational vy = s[k].coefficient(1) - s[i].coefficient(1);
                if (ux * vy == uy * vx)
                    ++found;
            }
    return found;
}

}  // namespace

TEST_CASE("point sets reject repeats and keep insertion order")
{
    CHECK_THROWS_AS(PointSet(4, {g(0, 0), g(0, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(4, {CycloNum(12, 1)}), std::invalid_argument);
    PointSet s(4, {g(2, 0), g(0, 1)});
    CHECK(s.find(g(0, 1)) == 1u);
    CHECK_FALSE(s.insert(g(2, 0)));
    CHECK(s.insert(g(5, 5)));
    CHECK(s.size() == 3);
    const auto u = PointSet::union_of(4, std::vector<CycloNum>{g(1, 1), g(1, 1), g(0, 0)});
    CHECK(u.size() == 2);
    CHECK(s.lift(12).contains(g(5, 5).lift(12)));
    CHECK(s.affine(g(0, 1), g(1, 0)).contains(g(1, 2)));
    CHECK_THROWS_AS(s.affine(g(0, 0), g(1, 0)), std::invalid_argument);
}

TEST_CASE("minkowski sum merges duplicates")
{
    const PointSet a = grid(2, 1), b = grid(2, 1);
    const PointSet s = minkowski_sum(a, b);
    CHECK(s.size() == 3);
    CHECK(minkowski_sum(grid(3, 3), grid(2, 2)).size() == 16);
}

TEST_CASE("collinearity")
{
    CHECK(collinear(g(0, 0), g(1, 1), g(3, 3)));
    CHECK_FALSE(collinear(g(0, 0), g(1, 1), g(3, 2)));
    CHECK_THROWS_AS(collinear(g(0, 0), g(0, 0), g(1, 0)), std::invalid_argument);
    CHECK(max_collinear(grid(4, 3)) == 4);
    CHECK(max_collinear(PointSet(4, {g(0, 0)})) == 1);
    CHECK_THROWS_AS(max_collinear(PointSet(4)), std::invalid_argument);
    // regular hexagon plus centre: three points on each long diagonal
    std::vector<CycloNum> hex{CycloNum(12)};
    for (int k = 0; k < 6; ++k)
        hex.push_back(CycloNum::zeta(12, 2 * k));
    CHECK(max_collinear(PointSet(12, hex)) == 3);
}

TEST_CASE("collinearity agrees with two independent oracles")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const PointSet s = random_lattice_set(rng, 7, 5);
        const std::size_t triples = collinear_triples_by_cross(s);
        REQUIRE(collinear_triples(s) == triples);
        REQUIRE((max_collinear(s) >= 3) == (triples > 0));
    }
}

TEST_CASE("parallelograms agree with the brute-force oracle")
{
    std::mt19937_64 rng(4);
    int with = 0;
    for (int t = 0; t < 200; ++t) {
        const PointSet s = random_lattice_set(rng, 6, 4);
        const std::size_t quads = parallelogram_quadruples(s);
        const auto found = find_parallelogram(s);
        REQUIRE(found.has_value() == (quads > 0));
        if (found) {
            ++with;
            const auto [a, b, c, d] = found->index;
            REQUIRE(s[a] + s[c] == s[b] + s[d]);
        }
    }
    CHECK(with > 20);
    CHECK(parallelogram_quadruples(grid(2, 2)) == 1);
    // two unit squares, the 2x1 rectangle and two slanted
    CHECK(parallelogram_quadruples(grid(3, 2)) == 5);
    CHECK_FALSE(find_parallelogram(PointSet(4, {g(0, 0), g(1, 0), g(0, 1), g(3, 5)})));
}

TEST_CASE("parallel segments")
{
    // trapezoid: two parallel sides, no parallelogram
    const PointSet trap(4, {g(0, 0), g(3, 0), g(1, 1), g(2, 1)});
    CHECK_FALSE(find_parallelogram(trap));
    CHECK(has_parallel_segments(trap));
    CHECK_FALSE(has_parallel_segments(PointSet(4, {g(0, 0), g(1, 0), g(0, 1), g(3, 5)})));
    CHECK_THROWS_AS(has_parallel_segments(grid(3, 1)), std::invalid_argument);
}
