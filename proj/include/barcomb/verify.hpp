#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace barcomb {

struct VerifyReport {
    std::string suite;
    long long checked = 0;
    std::vector<std::string> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

// Runs a named invariant suite up to the size bound.  Randomized suites draw
// from the given seed.
VerifyReport run_verify_suite(const std::string& suite, int bound, std::uint64_t seed);

std::vector<std::string> verify_suite_names();

}  // namespace barcomb
