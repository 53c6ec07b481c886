// Acceptance battery: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "weylmod/suite.hpp"

#include <cstdio>

int main()
{
    weylmod::SuiteOptions options;
    options.level = weylmod::SuiteLevel::Full;
    int failed = 0;
    weylmod::run_suite(options, [&](const weylmod::CriterionResult& r) {
        std::printf("criterion %d [%s] %s: %s (%.2f s) %s\n", r.number, r.id.c_str(), r.pass ? "PASS" : "FAIL",
                    r.title.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failed;
    });
    std::printf("%s: %d of 9 criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
