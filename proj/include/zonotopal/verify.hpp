#pragma once

// Invariant suite for a single vector list, as run by `zonotopal verify`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zonotopal/vector_list.hpp"

namespace zonotopal {

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct VerifyOptions {
    std::size_t max_n = 10;  // spline and solver checks are skipped above this size
    std::uint64_t seed = 1;
    std::size_t random_functions = 5;
    std::size_t points_per_wall = 5;
    std::size_t convolution_samples = 3;
    std::size_t outside_samples = 20;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool precondition_failed = false;  // not spanning or not TU

    bool passed() const;
};

VerifyReport verify_list(const VectorList& x, const VerifyOptions& options = {});

}  // namespace zonotopal
