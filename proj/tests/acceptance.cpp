#include <cstdio>
#include <string>

#include "heatcone/verify.hpp"

// One line per gating criterion; the exit status is the number of failures.
// Informational observations are printed afterwards and never count.

int main() {
    int failures = 0;
    for (const auto& cr : heatcone::verify::run_acceptance()) {
        const bool ok = cr.passed();
        int bad = 0;
        for (const auto& c : cr.checks) bad += c.pass ? 0 : 1;
        std::string suffix;
        if (!ok) suffix = ", " + std::to_string(bad) + " failed";
        std::printf("%s %s (%zu checks%s)\n", ok ? "PASS" : "FAIL", cr.id.c_str(),
                    cr.checks.size(), suffix.c_str());
        if (!ok) {
            ++failures;
            for (const auto& c : cr.checks)
                if (!c.pass)
                    std::printf("       %s: %s\n", c.name.c_str(), c.detail.c_str());
        }
    }
    for (const auto& c : heatcone::verify::run_informational())
        std::printf("note   %s: %s\n", c.name.c_str(), c.detail.c_str());
    return failures;
}
