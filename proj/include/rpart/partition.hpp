#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rpart/count.hpp"
#include "rpart/part_set.hpp"

namespace rpart {

/// P(m, n, A): partitions of m into at most n parts drawn from A.
struct PartitionCountQuery {
    std::uint64_t m = 1;
    std::uint64_t n = 1;
};

/// Memoized counter for one part set.
///
/// Counts tuples (x_1..x_r) >= 0 with sum x_i a_i = m and sum x_i <= n via
///
///     p(m', n', i) = p(m', n', i-1) + p(m' - a_i, n' - 1, i)
///     p(0, *, *) = 1,  p(m' > 0, *, 0) = 0,  p(m' > 0, 0, *) = 0
///
/// Subproblems do not depend on the top-level query, so with
/// `keep_cache` the memo table survives across calls; otherwise it is
/// cleared after each query to keep memory proportional to one query.
/// A counter is not thread safe; give each worker its own instance.
class PartitionCounter {
  public:
    explicit PartitionCounter(PartSet set, bool keep_cache = false);

    /// Throws input_error when m < 1 or n < 1.
    Count count(const PartitionCountQuery& q);

    const PartSet& set() const { return set_; }
    std::size_t cache_size() const { return memo_.size(); }

  private:
    struct Key {
        std::uint64_t m;
        std::uint64_t n;
        std::uint32_t i;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept
        {
            std::uint64_t h = k.m * 0x9E3779B97F4A7C15ull;
            h ^= (k.n + 0x632BE59BD9B4E019ull) + (h << 6) + (h >> 2);
            h ^= (std::uint64_t(k.i) + 0x94D049BB133111EBull) + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };

    Count rec(std::uint64_t m, std::uint64_t n, std::uint32_t i);
    void ensure_parts(std::uint64_t m);

    PartSet set_;
    bool keep_cache_;
    std::vector<std::uint64_t> parts_;
    std::uint64_t parts_bound_ = 0;
    std::unordered_map<Key, Count, KeyHash> memo_;
};

/// One-shot P(m, n, A) with a private cache.
Count count_at_most(const PartSet& set, const PartitionCountQuery& q);

inline constexpr std::uint64_t naive_default_max_m = 200;

/// Brute-force oracle: walks every nondecreasing list of parts summing to m
/// with at most n entries. Shares no code with PartitionCounter.
/// Throws input_error if m > max_m or m, n < 1.
Count count_at_most_naive(const PartSet& set, const PartitionCountQuery& q,
                          std::uint64_t max_m = naive_default_max_m);

// ---------------------------------------------------------------------------
// Growth conditions on A

enum class Condition {
    star, ///< sum_{j=1}^{s-1} 2j a_{s-j} < a_s      for 2 <= s
    c23,  ///< sum_{j=1}^{s-1}  j a_{s-j} < a_{s+1}  for 2 <= s
};

const char* to_string(Condition c);
Condition parse_condition(const std::string& text);

struct ConditionFailure {
    std::size_t s = 0;
    Count lhs;
    Count rhs;
};

struct ConditionReport {
    Condition condition = Condition::star;
    std::size_t s_requested = 0;
    /// Largest s actually verified (0 if the set was too short for s = 2).
    std::size_t s_checked = 0;
    /// The set ran out of elements before s_requested.
    bool truncated = false;
    std::optional<ConditionFailure> failure;

    bool passed() const { return !failure.has_value(); }
};

/// Throws input_error if s_max < 2.
ConditionReport check_condition_star(const PartSet& set, std::size_t s_max);
ConditionReport check_condition_23(const PartSet& set, std::size_t s_max);
ConditionReport check_condition(const PartSet& set, Condition c, std::size_t s_max);

/// F(n) when the star condition passes up to s_max, else F(2n-1) when
/// condition c23 passes, else nothing. Both conditions are only checked on
/// a prefix, so the answer is conditional on that prefix.
std::optional<Count> fibonacci_bound_for(const PartSet& set, std::uint64_t n, std::size_t s_max);

/// Which condition (if any) backs a bound for `set` up to s_max.
std::optional<Condition> select_partition_condition(const PartSet& set, std::size_t s_max);

/// F(n) for star, F(2n-1) for c23.
Count partition_bound(Condition c, std::uint64_t n);

} // namespace rpart
