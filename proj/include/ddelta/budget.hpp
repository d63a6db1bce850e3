#pragma once

#include <cstdint>

namespace ddelta {

/// Resource caps for Groebner computations. Exceeding either raises BudgetExceeded.
struct Budget {
    std::uint64_t max_degree = 4096;      // total degree of any basis element
    std::uint64_t max_pairs = 2'000'000;  // S-pairs processed per basis computation
};

/// Process-wide budget. Reads are lock-free; set it before starting worker threads.
Budget current_budget();
void set_budget(const Budget& budget);

/// Applies DDELTA_MAX_DEGREE / DDELTA_MAX_PAIRS from the environment on top of `base`.
Budget budget_from_environment(Budget base);

}  // namespace ddelta
