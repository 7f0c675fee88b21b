#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hcn {

// Outcome of a sweep verifier. `items` counts the primes (or indices)
// examined, `checks` the exact equalities asserted; failures carry one
// human-readable line each. Merging is associative, so partial reports
// from parallel workers combine deterministically in range order.
struct VerificationReport {
    std::string target;
    std::int64_t items = 0;
    std::int64_t checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }

    void fail(std::string msg) { failures.push_back(std::move(msg)); }

    void merge(const VerificationReport& other) {
        items += other.items;
        checks += other.checks;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

}  // namespace hcn
