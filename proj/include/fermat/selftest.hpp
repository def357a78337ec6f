#ifndef FERMAT_SELFTEST_HPP
#define FERMAT_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fermat {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// The eight acceptance criteria, in order. Deterministic given seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20261016);

/// Supplementary cross-checks printed alongside the criteria; never gate anything.
std::vector<std::string> run_diagnostics(bool include_sweeps = true);

}  // namespace fermat

#endif  // FERMAT_SELFTEST_HPP
