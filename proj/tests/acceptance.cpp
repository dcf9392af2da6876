// Runs the full gating checks and prints one line per criterion.

#include <cstdio>
#include <cstring>

#include "staircase/selfcheck.hpp"

int main(int argc, char** argv) {
    using namespace staircase;
    CheckLevel level = CheckLevel::Full;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) level = CheckLevel::Quick;
    unsigned hw = std::thread::hardware_concurrency();
    int threads = hw ? static_cast<int>(hw) : 1;
    bool all = true;
    for (const CriterionResult& c : run_criteria(level, threads)) {
        std::printf("criterion %2d: %-4s %s (%s)\n", c.id, c.pass ? "pass" : "FAIL",
                    c.name.c_str(), c.detail.c_str());
        std::fflush(stdout);
        all = all && c.pass;
    }
    std::printf("%s\n", all ? "all criteria pass" : "FAILURES PRESENT");
    return all ? 0 : 1;
}
