#pragma once

// The verification battery behind `suite` and the acceptance test.

#include "weylmod/polyseries.hpp"
#include "weylmod/uea_sl2.hpp"

#include <functional>
#include <string>
#include <vector>

namespace weylmod {

enum class SuiteLevel { Quick, Full };

struct SuiteOptions {
    SuiteLevel level = SuiteLevel::Full;
    /// Used by the Garland and bracket checks; only a test hook changes it.
    StructureConstants constants;
};

struct CriterionResult {
    int number = 0;
    std::string id;      // check anchor, e.g. "thm-dimw"
    std::string title;
    bool pass = false;
    std::string detail;  // deterministic; timings live in `seconds`
    double seconds = 0;
};

/// Root multisets with roots in {-2, -1, 1/2, 1, 2, 3} and total multiplicity
/// in [1, max_degree], in a fixed order.
std::vector<RootMultiset> sample_root_multisets(long max_degree);

/// Coprime (left, right) pairs of total degree <= 5 used for the tensor check.
std::vector<std::pair<RootMultiset, RootMultiset>> coprime_tensor_pairs();

/// Runs criteria 1-9.  `progress` (optional) is called after each criterion.
std::vector<CriterionResult> run_suite(const SuiteOptions& options,
                                       const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace weylmod
