#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cyc {

// Desk runs the full acceptance matrix; Quick shrinks every catalog so the
// whole matrix finishes in seconds.
enum class SuiteLevel { Quick, Desk };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  // a criterion fails when it runs longer
};

inline constexpr int kCriterionCount = 8;

using CriterionCallback = std::function<void(const CriterionResult&)>;

// ParameterError unless 1 <= id <= 8.
CriterionResult run_criterion(int id, SuiteLevel level);

// Runs the listed criteria (all when empty) in order, reporting each result
// through `on_result` as soon as it finishes.
std::vector<CriterionResult> run_suite(SuiteLevel level, const std::vector<int>& ids = {},
                                       const CriterionCallback& on_result = {});

// `criterion <id> PASS|FAIL <name>: <detail> (<seconds> s)`.
std::string format_result(const CriterionResult& result);

}  // namespace cyc
