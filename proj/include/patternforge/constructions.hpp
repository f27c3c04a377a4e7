#pragma once

#include "patternforge/exactnum.hpp"
#include "patternforge/geom.hpp"
#include "patternforge/ledger.hpp"
#include "patternforge/patterns.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace patternforge {

/// Thrown when a recipe cannot produce a verified set: resample budget
/// exhausted, size cap exceeded, or a deterministic build failing its checks.
class BuildError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultHeight = 97;
inline constexpr int kDefaultBudget = 64;
inline constexpr std::uint64_t kDefaultSizeCap = 1'000'000;

/// Size cap for iterated builds; PATTERNFORGE_SIZE_CAP overrides the default.
std::uint64_t size_cap();

/// Seeded source of Gaussian-rational parameters p/q + (r/s) i with
/// p, q, r, s uniform in [-height, height] \ {0}.  The integer draws use
/// rejection sampling on raw mt19937_64 output, so the stream is identical
/// across standard libraries.
class ParamSampler {
public:
    explicit ParamSampler(std::uint64_t seed, int height = kDefaultHeight);

    std::uint64_t seed() const { return seed_; }
    int height() const { return height_; }

    long uniform(long lo, long hi);
    Rational rational();
    /// Element of Q(i), returned at conductor `order` (a multiple of 4).
    CycloNum gaussian(int order = 4);

private:
    std::uint64_t seed_;
    int height_;
    std::mt19937_64 rng_;
};

struct GenericParam {
    std::string name;
    CycloNum value;
    int height = kDefaultHeight;
    int attempts = 1;  // draws until this value was accepted
};

struct BuildReport {
    std::string recipe;
    std::map<std::string, std::string> params;
    std::optional<std::uint64_t> seed;
    PointSet output;
    std::optional<Pattern> pattern;
    Integer expected_size = 0;
    Integer expected_copies = 0;
    BoundKind copies_kind = BoundKind::lower;
    CountReport count;
    VerdictLedger checks;
    int resamples = 0;
    std::vector<GenericParam> parameters;
    std::vector<std::string> notes;

    std::size_t max_collinear = 0;
};

/// Build-or-reject options shared by the sampled recipes.
struct SampleOptions {
    int budget = kDefaultBudget;
};

// Pattern factories.

/// Regular k-gon {zeta_k^j} at conductor lcm(k, 4) unless `order` is given.
Pattern regular_polygon(int k, int order = 0);
Pattern equilateral_triangle(int order = 12);
Pattern unit_square();
/// Isosceles triangle T(alpha) = {0, 1, -u}, u = exp(2 i alpha), alpha = (num/den) pi.
Pattern isosceles_triangle(long num, long den);
/// T = {0, 1, z}.
Pattern scalene_triangle(const CycloNum &z);
/// Random k-gon with Gaussian-rational vertices and no three collinear.
Pattern generic_polygon(int k, ParamSampler &rng, int order = 4);

/// Triangle {0, 1, z} is non-degenerate and has three distinct side lengths.
bool is_scalene(const CycloNum &z);

// Recipes.  All outputs are verified; a failure is rejected, never returned.

BuildReport theorem3_generic(const Pattern &p, ParamSampler &rng, int m = 3, SampleOptions opt = {});
BuildReport scalene5(ParamSampler &rng, SampleOptions opt = {});
BuildReport scalene5_at(const CycloNum &z);
BuildReport scalene14(ParamSampler &rng, SampleOptions opt = {});
BuildReport scalene14_at(const CycloNum &z);

enum class IsoscelesVariant { a, b };
BuildReport isosceles8(IsoscelesVariant variant, long num, long den);

BuildReport equilateral15(ParamSampler &rng, SampleOptions opt = {});
BuildReport equilateral15_at(const CycloNum &z);
BuildReport even_kgon(int k, ParamSampler &rng, SampleOptions opt = {});
BuildReport pentagon120(ParamSampler &rng, SampleOptions opt = {});

/// Eisenstein lattice cluster for at most m-1 points on a line.  Even m uses
/// the closed-form hexagon; odd m in {5, 7, 9} builds a trimmed-hexagon
/// candidate whose count is compared (not asserted) against the reference target.
BuildReport hex_lattice_cluster(int m);

struct HexTarget {
    std::size_t size;
    Integer copies;
    double index() const;
};

/// (|A|, S) decoded from the reference indices for odd m: 3S + |A| over |A|.
std::optional<HexTarget> hex_odd_target(int m);

struct GenericSum {
    GenericParam v;
    PointSet sum;
    int resamples = 0;
};

/// A + vB with |A||B| points and fewer than m on a line, v resampled until
/// both hold.
GenericSum minkowski_sum_generic(const PointSet &a, const PointSet &b, int m, ParamSampler &rng,
                                 SampleOptions opt = {});

/// Iterated generic Minkowski sum A_j* with |A|^j points; asserts the
/// iteration lower bound by exact counting.
BuildReport minkowski_iterate(const Pattern &p, const PointSet &a, int j, int m, ParamSampler &rng,
                              SampleOptions opt = {});

/// (1/I)((I S + |A|)^j - |A|^j).
Integer iteration_bound(std::size_t sym_order, const Integer &copies, std::size_t n, int j);

/// Q(P, A, u, v) = union over p in P of (u p + (v p - p + 1) A), unverified.
PointSet pfree_q_set(const PointSet &p, const PointSet &a, const CycloNum &u, const CycloNum &v);

struct PfreeOptions {
    int budget = kDefaultBudget;
    bool strict = false;  // also require no two disjoint parallel segments
};

BuildReport pfree_Q(const Pattern &p, const PointSet &a, ParamSampler &rng, PfreeOptions opt = {});
BuildReport pfree_iterate(const Pattern &p, int m, ParamSampler &rng, PfreeOptions opt = {});

/// floor(sqrt(n^3)) + n, the integer form of n^{3/2} + n for integer counts.
Integer pfree_upper_bound(std::size_t n);

struct RecipeInfo {
    std::string name;
    std::string pattern;
    std::string size;
    std::string copies;
    std::string summary;
};

const std::vector<RecipeInfo> &recipe_catalog();

}  // namespace patternforge
