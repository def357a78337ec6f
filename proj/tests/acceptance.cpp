// One line per acceptance criterion; exit status 1 if any fails.

#include "fermat/selftest.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
    const bool with_sweeps = !(argc > 1 && std::strcmp(argv[1], "--skip-sweeps") == 0);
    int failed = 0;
    for (const auto& r : fermat::run_acceptance()) {
        std::printf("%s criterion %d: %s [%.2fs]\n    %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        failed += !r.passed;
    }
    for (const auto& line : fermat::run_diagnostics(with_sweeps)) std::printf("INFO %s\n", line.c_str());
    std::printf("%d of 8 criteria passed\n", 8 - failed);
    return failed ? 1 : 0;
}
