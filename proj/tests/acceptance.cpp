// Acceptance run: one PASS/FAIL line per criterion, failing claims listed
// underneath.  Tolerances live with each claim in src/acceptance.cpp.
//
//   acceptance [seed]

#include "patternforge/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

using namespace patternforge;

int main(int argc, char **argv)
{
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
    int failed = 0;
    for (const auto &c : acceptance_criteria()) {
        const auto t0 = std::chrono::steady_clock::now();
        VerdictLedger l = c.run(seed);
        l.sort();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = l.size() > 0 && l.all_passed();
        failed += !ok;
        std::printf("criterion %2d: %s  %s  (%zu claims, %.1fs)\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(),
                    l.size(), secs);
        for (const auto &e : l.entries())
            if (!e.passed())
                std::printf("    FAIL %s: %s expected %s %s, computed %s\n", e.claim_id.c_str(), e.statement.c_str(),
                            bound_kind_name(e.kind), claim_value_to_string(e.expected).c_str(),
                            claim_value_to_string(e.computed).c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed (seed %llu)\n", static_cast<int>(acceptance_criteria().size()) - failed,
                acceptance_criteria().size(), static_cast<unsigned long long>(seed));
    return failed == 0 ? 0 : 1;
}
