#include "patternforge/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace patternforge {

const char *bound_kind_name(BoundKind k)
{
    switch (k) {
    case BoundKind::exact:
        return "exact";
    case BoundKind::lower:
        return "lower";
    case BoundKind::upper:
        return "upper";
    }
    return "?";
}

std::string claim_value_to_string(const ClaimValue &v)
{
    if (const auto *i = std::get_if<Integer>(&v))
        return i->get_str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", std::get<double>(v));
    return buf;
}

bool LedgerEntry::passed() const
{
    if (expected.index() != computed.index())
        return false;
    if (const auto *e = std::get_if<Integer>(&expected)) {
        const Integer &c = std::get<Integer>(computed);
        switch (kind) {
        case BoundKind::exact:
            return c == *e;
        case BoundKind::lower:
            return c >= *e;
        case BoundKind::upper:
            return c <= *e;
        }
        return false;
    }
    const double e = std::get<double>(expected), c = std::get<double>(computed);
    if (!std::isfinite(e) || !std::isfinite(c))
        return false;
    switch (kind) {
    case BoundKind::exact:
        return std::fabs(c - e) <= tolerance;
    case BoundKind::lower:
        return c >= e - tolerance;
    case BoundKind::upper:
        return c <= e + tolerance;
    }
    return false;
}

LedgerEntry LedgerEntry::exact(std::string id, std::string statement, Integer expected, Integer computed)
{
    return {std::move(id), std::move(statement), BoundKind::exact, std::move(expected), std::move(computed), 0.0};
}

LedgerEntry LedgerEntry::lower(std::string id, std::string statement, Integer bound, Integer computed)
{
    return {std::move(id), std::move(statement), BoundKind::lower, std::move(bound), std::move(computed), 0.0};
}

LedgerEntry LedgerEntry::upper(std::string id, std::string statement, Integer bound, Integer computed)
{
    return {std::move(id), std::move(statement), BoundKind::upper, std::move(bound), std::move(computed), 0.0};
}

LedgerEntry LedgerEntry::real(std::string id, std::string statement, BoundKind kind, double expected, double computed,
                              double tolerance)
{
    return {std::move(id), std::move(statement), kind, expected, computed, tolerance};
}

LedgerEntry LedgerEntry::holds(std::string id, std::string statement, std::size_t violations)
{
    return exact(std::move(id), std::move(statement), Integer(0), Integer(static_cast<unsigned long>(violations)));
}

void VerdictLedger::append(const VerdictLedger &other)
{
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

void VerdictLedger::sort()
{
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const LedgerEntry &a, const LedgerEntry &b) { return a.claim_id < b.claim_id; });
}

std::size_t VerdictLedger::pass_count() const
{
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const LedgerEntry &e) { return e.passed(); }));
}

const LedgerEntry *VerdictLedger::find(const std::string &claim_id) const
{
    for (const auto &e : entries_)
        if (e.claim_id == claim_id)
            return &e;
    return nullptr;
}

std::string VerdictLedger::to_table() const
{
    std::size_t w = 8;
    for (const auto &e : entries_)
        w = std::max(w, e.claim_id.size());
    std::ostringstream os;
    for (const auto &e : entries_) {
        os << (e.passed() ? "PASS  " : "FAIL  ") << e.claim_id << std::string(w - e.claim_id.size() + 2, ' ')
           << bound_kind_name(e.kind) << "  expected " << claim_value_to_string(e.expected) << "  computed "
           << claim_value_to_string(e.computed) << "  " << e.statement << '\n';
    }
    os << pass_count() << " passed, " << fail_count() << " failed\n";
    return os.str();
}

}  // namespace patternforge
