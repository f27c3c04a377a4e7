#pragma once

#include "patternforge/exactnum.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace patternforge {

enum class BoundKind { exact, lower, upper };

const char *bound_kind_name(BoundKind k);

/// Integer claims compare exactly; real claims compare within `tolerance`.
using ClaimValue = std::variant<Integer, double>;

std::string claim_value_to_string(const ClaimValue &v);

/// One checked claim.  `passed()` is always derived from expected/computed,
/// never stored.
struct LedgerEntry {
    std::string claim_id;
    std::string statement;
    BoundKind kind = BoundKind::exact;
    ClaimValue expected = Integer(0);
    ClaimValue computed = Integer(0);
    double tolerance = 0.0;

    bool passed() const;

    static LedgerEntry exact(std::string id, std::string statement, Integer expected, Integer computed);
    static LedgerEntry lower(std::string id, std::string statement, Integer bound, Integer computed);
    static LedgerEntry upper(std::string id, std::string statement, Integer bound, Integer computed);
    static LedgerEntry real(std::string id, std::string statement, BoundKind kind, double expected, double computed,
                            double tolerance);
    /// A boolean property, recorded as "number of violations = 0".
    static LedgerEntry holds(std::string id, std::string statement, std::size_t violations);
};

class VerdictLedger {
public:
    void add(LedgerEntry e) { entries_.push_back(std::move(e)); }
    void append(const VerdictLedger &other);

    /// Stable sort by claim id.
    void sort();

    const std::vector<LedgerEntry> &entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t pass_count() const;
    std::size_t fail_count() const { return entries_.size() - pass_count(); }
    bool all_passed() const { return fail_count() == 0; }

    /// First entry with the given id, or nullptr.
    const LedgerEntry *find(const std::string &claim_id) const;

    std::string to_table() const;

private:
    std::vector<LedgerEntry> entries_;
};

}  // namespace patternforge
