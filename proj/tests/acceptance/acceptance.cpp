// One line per acceptance criterion; exits nonzero if any fails.
#include "gwp1/cli/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    int failed = 0;
    for (const auto& r : gwp1::cli::acceptance_criteria(which)) {
        std::printf("%s %-12s %-50s %7.2f s  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        failed += !r.pass;
    }
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
