#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "cyc/suite.hpp"

// One line per criterion; exit status 1 when any criterion fails.
int main(int argc, char** argv) {
    cyc::SuiteLevel level = cyc::SuiteLevel::Desk;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0)
            level = cyc::SuiteLevel::Quick;
        else
            ids.push_back(std::stoi(argv[i]));
    }
    int failed = 0;
    cyc::run_suite(level, ids, [&](const cyc::CriterionResult& r) {
        std::printf("%s\n", cyc::format_result(r).c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    });
    return failed ? 1 : 0;
}
