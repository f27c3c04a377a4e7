#pragma once

#include "patternforge/constructions.hpp"
#include "patternforge/ledger.hpp"
#include "patternforge/patterns.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace patternforge {

/// I S_P(B+C) + |B||C| >= (I S_P(B) + |B|)(I S_P(C) + |C|) on a verified
/// generic sum.
LedgerEntry check_minkowski_lemma(const Pattern &p, const PointSet &b, const PointSet &c, const GenericSum &sum,
                                  const std::string &claim_id = "minkowski-lemma");
/// Builds the generic sum B + vC itself, with m one above the larger operand
/// collinearity.
LedgerEntry check_minkowski_lemma(const Pattern &p, const PointSet &b, const PointSet &c, ParamSampler &rng,
                                  const std::string &claim_id = "minkowski-lemma");

/// Integer and index forms of the iteration bound for a minkowski_iterate
/// report built from `base`.
VerdictLedger check_iteration_bound(const BuildReport &report, const PointSet &base,
                                    const std::string &claim_prefix = "iteration");

/// m |P|^(m-1) <= S <= floor(n^{3/2}) + n for a pfree_iterate report.
VerdictLedger check_pfree_bounds(const BuildReport &report, const std::string &claim_prefix = "pfree");

inline constexpr std::size_t kK22Cap = 200;

/// The bipartite graph with an edge (a1, a2) whenever some a3 in A makes
/// a1 a2 a3 similar to p1 p2 p3 has no K_{2,2}; also E >= S_P(A).  A set
/// violating the preconditions yields a failing precondition entry.
VerdictLedger check_k22_freeness(const Pattern &p, const PointSet &a, std::size_t cap = kK22Cap,
                                 const std::string &claim_prefix = "k22");

/// Number of collinear triples, by direct enumeration with a floating-point
/// screen and exact confirmation.  Shares no code with max_collinear.
std::size_t collinear_triples(const PointSet &s);

/// Number of 4-point subsets forming a parallelogram, by direct enumeration.
std::size_t parallelogram_quadruples(const PointSet &s);

enum class Scope { none, tables, catalog, oracle, lemmas, pfree, genericity, all };

Scope parse_scope(const std::string &name);
const char *scope_name(Scope s);

struct Criterion {
    int id;
    std::string title;
    std::function<VerdictLedger(std::uint64_t seed)> run;
};

/// The fifteen acceptance criteria, in order.
const std::vector<Criterion> &acceptance_criteria();

/// The eleven reference index values, one claim each.
VerdictLedger table_claims(std::uint64_t seed);

/// Deterministic ledger for the scope, sorted by claim id.
VerdictLedger run_acceptance_suite(Scope scope, std::uint64_t seed);

/// Independent per-recipe seed: FNV-1a of the name mixed with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, const std::string &name);

}  // namespace patternforge
