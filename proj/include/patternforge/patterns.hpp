#pragma once

#include "patternforge/exactnum.hpp"
#include "patternforge/geom.hpp"
#include "patternforge/ledger.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace patternforge {

class OracleGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point set with two designated anchor points and its proper symmetry
/// order I = |Iso+(P)|.
class Pattern {
public:
    /// Anchors default to the two lexicographically smallest points.
    explicit Pattern(PointSet base);
    Pattern(PointSet base, std::size_t anchor1, std::size_t anchor2);

    const PointSet &base() const { return base_; }
    std::size_t size() const { return base_.size(); }
    int order() const { return base_.order(); }
    std::pair<std::size_t, std::size_t> anchors() const { return anchors_; }
    std::size_t sym_order() const { return sym_order_; }

    /// lambda_j = (p_j - p_2) / (p_1 - p_2), so the similarity with
    /// p_1 -> a_1, p_2 -> a_2 sends p_j to a_2 + (a_1 - a_2) * lambda_j.
    const std::vector<CycloNum> &ratios() const { return ratios_; }

    /// One permutation per proper symmetry g: g(p_i) = p_{perm[i]}.
    const std::vector<std::vector<std::size_t>> &symmetries() const { return symmetries_; }

    Pattern lift(int new_order) const;

private:
    PointSet base_;
    std::pair<std::size_t, std::size_t> anchors_;
    std::vector<CycloNum> ratios_;
    std::vector<std::vector<std::size_t>> symmetries_;
    std::size_t sym_order_ = 1;
};

/// Number of orientation-preserving similarities mapping P onto itself.
std::size_t proper_symmetry_order(const Pattern &p);

struct CountOptions {
    std::size_t witness_limit = 64;
    bool full_witnesses = false;
    bool incidence = false;  // per-point copy incidence
};

struct CountReport {
    std::size_t pattern_size = 0;
    std::size_t sym_order = 1;
    std::size_t target_size = 0;
    int conductor = 4;
    Integer ordered_matches = 0;  // N
    Integer copies = 0;           // S_P(A) = N / I
    double index = 1.0;
    /// Matched images of (p_1, ..., p_k) as indices into the target set.
    std::vector<std::vector<std::size_t>> witnesses;
    /// incidence[i] = number of copies containing point i (when requested).
    std::vector<std::size_t> incidence;
};

/// Exact S_P(A) via the ordered anchor-pair algorithm.
CountReport count_similar(const Pattern &p, const PointSet &a, const CountOptions &options = {});

/// Number of |P|-subsets of A similar to P, by direct enumeration.  Refuses
/// when C(|A|, |P|) exceeds `guard`.
Integer brute_force_count(const Pattern &p, const PointSet &a, std::uint64_t guard = 10'000'000);

/// log(I*S + n) / log(n).
double index_value(std::size_t sym_order, const Integer &copies, std::size_t n);

double index(const Pattern &p, const PointSet &a);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Checks S_P(R) = |R|/I and S_P(A) >= S_R(A) * |R|/I exactly, plus the
/// induced index inequality.  Throws when P is not a subset of R.
VerdictLedger subset_regular_bound(const Pattern &p, const Pattern &r, const PointSet &a,
                                   const std::string &claim_prefix = "subset-regular");

/// Lift both operands to the least common conductor; throws OrderMismatch
/// when it exceeds kMaxConductor.
int common_conductor(int a, int b);

}  // namespace patternforge
