#pragma once

#include <cstdint>
#include <vector>

#include "rpart/count.hpp"

namespace rpart {

/// F(i) with F(1) = F(2) = 1 and F(i) = 0 for every i <= 0.
///
/// Values are memoized in a process-wide table that grows on demand; the
/// table is guarded so concurrent callers always see fully built entries.
Count fib(std::int64_t i);

struct LemmaVerdict {
    int n = 0;
    bool odd_index_sum = false;   ///< sum_{i=0}^{n} F(2i+1) == F(2n+2)
    bool even_index_sum = false;  ///< sum_{i=0}^{n} F(2i)   == F(2n+1) - 1
    bool alternating_sum = false; ///< sum_{i=0}^{n/2} F(n-2i) <= F(n+1)

    bool holds() const { return odd_index_sum && even_index_sum && alternating_sum; }
};

/// Checks the three Fibonacci summation facts for n = 1..n_max.
/// Throws input_error if n_max < 1.
std::vector<LemmaVerdict> check_lemma_identities(int n_max);

} // namespace rpart
