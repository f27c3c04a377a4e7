#include "patternforge/constructions.hpp"
#include "patternforge/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace patternforge;

namespace {

CycloNum g(long a, long b, long c, long d) { return CycloNum::gaussian(4, Rational(a, b), Rational(c, d)); }

}  // namespace

TEST_CASE("ledger entries derive their verdict")
{
    CHECK(LedgerEntry::exact("x", "", 5, 5).passed());
    CHECK_FALSE(LedgerEntry::exact("x", "", 5, 6).passed());
    CHECK(LedgerEntry::lower("x", "", 5, 6).passed());
    CHECK_FALSE(LedgerEntry::lower("x", "", 5, 4).passed());
    CHECK(LedgerEntry::upper("x", "", 5, 4).passed());
    CHECK_FALSE(LedgerEntry::upper("x", "", 5, 6).passed());
    CHECK(LedgerEntry::real("x", "", BoundKind::exact, 1.0, 1.0 + 1e-13, 1e-12).passed());
    CHECK_FALSE(LedgerEntry::real("x", "", BoundKind::exact, 1.0, 1.0 + 1e-11, 1e-12).passed());
    CHECK(LedgerEntry::real("x", "", BoundKind::lower, 1.0, 1.0 - 1e-13, 1e-12).passed());
    CHECK_FALSE(LedgerEntry::real("x", "", BoundKind::upper, 1.0, 1.1, 1e-12).passed());
    CHECK(LedgerEntry::holds("x", "", 0).passed());
    CHECK_FALSE(LedgerEntry::holds("x", "", 2).passed());

    VerdictLedger l;
    l.add(LedgerEntry::exact("b", "", 1, 1));
    l.add(LedgerEntry::exact("a", "", 1, 2));
    l.sort();
    CHECK(l.entries().front().claim_id == "a");
    CHECK(l.fail_count() == 1);
    CHECK(l.find("b") != nullptr);
    CHECK(l.find("c") == nullptr);
    CHECK(l.to_table().find("FAIL") != std::string::npos);
}

TEST_CASE("minkowski lemma on generic sums")
{
    const Pattern tri = equilateral_triangle();
    const PointSet hex = hex_lattice_cluster(4).output;
    ParamSampler rng(1);
    const LedgerEntry e = check_minkowski_lemma(tri, hex, hex, rng);
    CHECK(e.passed());
    CHECK(std::get<Integer>(e.expected) == 31 * 31);  // (I S + |B|)^2 with I = 3, S = 8, |B| = 7

    ParamSampler r2(2);
    const Pattern sc = scalene_triangle(g(2, 7, 5, 3));
    CHECK(check_minkowski_lemma(sc, scalene5_at(g(2, 7, 5, 3)).output, sc.base(), r2).passed());
}

TEST_CASE("iteration and pfree bound checks")
{
    const PointSet hex = hex_lattice_cluster(4).output;
    ParamSampler rng(1);
    const BuildReport it = minkowski_iterate(equilateral_triangle(), hex, 2, 4, rng);
    const VerdictLedger l = check_iteration_bound(it, hex, "it");
    CHECK(l.all_passed());
    CHECK(l.find("it/integer") != nullptr);
    CHECK(l.find("it/index") != nullptr);

    ParamSampler r2(1);
    const BuildReport pf = pfree_iterate(equilateral_triangle(), 3, r2);
    const VerdictLedger p = check_pfree_bounds(pf, "pf");
    CHECK(p.all_passed());
    CHECK(std::get<Integer>(p.find("pf/lower")->expected) == 27);
    CHECK(std::get<Integer>(p.find("pf/upper")->expected) == 140 + 27);

    BuildReport bare;
    CHECK_THROWS_AS(check_pfree_bounds(bare), std::invalid_argument);
}

TEST_CASE("no K_{2,2} in the triangle graph of a parallelogram-free set")
{
    ParamSampler rng(3);
    PfreeOptions opt;
    opt.strict = true;
    const BuildReport pf = pfree_iterate(equilateral_triangle(), 3, rng, opt);
    const VerdictLedger l = check_k22_freeness(equilateral_triangle(), pf.output, kK22Cap, "k");
    INFO(l.to_table());
    CHECK(l.all_passed());
    CHECK(l.find("k/no-K22") != nullptr);

    // a square lattice violates the precondition and is reported, not skipped
    std::vector<CycloNum> pts;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            pts.push_back(CycloNum::gaussian(4, x, y));
    const VerdictLedger bad = check_k22_freeness(unit_square(), PointSet(4, pts));
    CHECK_FALSE(bad.all_passed());
    CHECK(bad.find("k22/precondition") != nullptr);

    CHECK_THROWS_AS(check_k22_freeness(equilateral_triangle(), pf.output, 10), std::length_error);
}

TEST_CASE("scopes and seeds")
{
    for (const char *s : {"none", "tables", "catalog", "oracle", "lemmas", "pfree", "genericity", "all"})
        CHECK(std::string(scope_name(parse_scope(s))) == s);
    CHECK_THROWS_AS(parse_scope("everything"), std::invalid_argument);
    CHECK(derive_seed(1, "a") != derive_seed(1, "b"));
    CHECK(derive_seed(1, "a") != derive_seed(2, "a"));
    CHECK(derive_seed(1, "a") == derive_seed(1, "a"));
    CHECK(acceptance_criteria().size() == 15);
    CHECK(run_acceptance_suite(Scope::none, 0).size() == 0);
}

TEST_CASE("reference index claims")
{
    const VerdictLedger t = table_claims(0);
    INFO(t.to_table());
    CHECK(t.size() == 11);
    CHECK(t.all_passed());
    const VerdictLedger again = table_claims(0);
    REQUIRE(again.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(claim_value_to_string(t.entries()[i].computed) == claim_value_to_string(again.entries()[i].computed));
}
