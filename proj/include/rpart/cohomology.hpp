#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rpart/count.hpp"
#include "rpart/verdict.hpp"

namespace rpart {

bool is_prime(std::uint64_t p);

/// (p, m, n) for dim H^n(SL_2, V(m)) in characteristic p.
struct CohomParams {
    std::uint64_t p = 3;
    std::uint64_t m = 0; ///< highest weight of the Weyl module
    std::uint64_t n = 0; ///< cohomological degree
};

/// Throws input_error unless p is prime.
void validate(const CohomParams& params);

/// One explicit solution. For odd p both a and b have r entries
/// (a_1..a_r, b_1..b_r); for p = 2 only a is used and b is empty.
struct SolutionVector {
    std::vector<std::uint64_t> a;
    std::vector<std::uint8_t> b;

    bool operator==(const SolutionVector&) const = default;
};

enum class BudgetMode { exact, at_most };

/// Counts solutions of the weighted digit systems
///
///   odd p:  2 sum a_i + sum b_j  (= or <=)  budget
///           b_1 + sum_{i=1}^{r-1} (a_i + b_{i+1}) p^i + a_r p^r = target
///           a_i >= 0, b_j in {0, 1}
///
///   p = 2:  sum a_i  (= or <=)  budget
///           sum_{i=1}^{r} a_i 2^i = target
///
/// r only needs p^r > target: any variable whose weight is >= p^r must be
/// zero, so larger r adds no solutions. The recursion walks p-adic
/// positions. After the units position (which holds only b_1 for odd p and
/// nothing for p = 2) every position i contributes c * p^i with
/// c = a_i + b_{i+1} (resp. c = a_i), so the subproblem depends only on the
/// residual target divided by p^i and the residual budget; that pair is the
/// memo key and is shared by every position.
///
/// Not thread safe; use one solver per worker.
class CohomologySolver {
  public:
    explicit CohomologySolver(std::uint64_t p);

    std::uint64_t prime() const { return p_; }

    /// Throws input_error for target < 1 or budget < 1.
    Count count(std::uint64_t target, std::uint64_t budget, BudgetMode mode = BudgetMode::exact);

    /// Every solution of the exact-budget system, in a fixed depth-first
    /// order. Stops after `cap` solutions; `truncated` is set if more exist.
    std::vector<SolutionVector> list(std::uint64_t target, std::uint64_t budget, std::size_t cap,
                                     bool* truncated = nullptr);

    void clear_cache() { memo_[0].clear(); memo_[1].clear(); }

  private:
    struct Key {
        std::uint64_t u;
        std::uint64_t budget;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept
        {
            std::uint64_t h = k.u * 0x9E3779B97F4A7C15ull;
            h ^= k.budget + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };

    Count higher(std::uint64_t u, std::uint64_t budget, BudgetMode mode);
    void list_higher(std::uint64_t u, std::uint64_t budget, std::size_t pos,
                     SolutionVector& cur, std::vector<SolutionVector>& out, std::size_t cap,
                     bool& truncated);

    std::uint64_t p_;
    std::unordered_map<Key, Count, KeyHash> memo_[2];
};

/// Least r >= 1 with p^r > target.
std::size_t slot_count(std::uint64_t p, std::uint64_t target);

/// N(target, budget): odd-p system with exact budget. Rejects p = 2 or
/// composite p, and target or budget < 1.
Count count_N(std::uint64_t target, std::uint64_t budget, std::uint64_t p);

inline constexpr std::uint64_t naive_max_target = 10'000;
inline constexpr std::uint64_t naive_max_budget = 24;

/// Exhaustive enumeration over all (a, b) with r = slot_count(p, target)
/// slots. Independent of CohomologySolver.
Count count_N_naive(std::uint64_t target, std::uint64_t budget, std::uint64_t p,
                    std::uint64_t max_target = naive_max_target,
                    std::uint64_t max_budget = naive_max_budget);

/// Exhaustive enumeration of the p = 2 system.
Count count_p2_naive(std::uint64_t target, std::uint64_t budget,
                     std::uint64_t max_target = naive_max_target,
                     std::uint64_t max_budget = naive_max_budget);

/// True if the solution satisfies both equations of its system exactly
/// (or with budget <= in at_most mode).
bool satisfies(const SolutionVector& s, std::uint64_t p, std::uint64_t target,
               std::uint64_t budget, BudgetMode mode = BudgetMode::exact);

inline constexpr std::size_t default_listing_cap = 10'000;

struct CohomResult {
    Count dim;
    /// m was odd: no integral target exists and the dimension is reported
    /// as 0 by convention.
    bool odd_m_convention = false;
    std::vector<SolutionVector> solutions;
    bool listed = false;
    bool listing_truncated = false;
};

/// dim H^n(SL_2, V(m)). Even m maps to target m/2 + 1 and budget n + 1.
CohomResult dim_weyl_cohomology(const CohomParams& params, bool list_solutions = false,
                                std::size_t listing_cap = default_listing_cap);

/// Same value through a caller-owned solver (for sweeps).
Count dim_weyl_cohomology(CohomologySolver& solver, std::uint64_t m, std::uint64_t n);

/// sum_{i=0}^{n} dim H^i(SL_2, V(m)), computed both by summing degrees and by
/// counting the budget-inequality system directly. Throws oracle_mismatch if
/// the two disagree.
Count total_dim(const CohomParams& params);
Count total_dim(CohomologySolver& solver, std::uint64_t m, std::uint64_t n);

/// F(n+1) for odd p, F(2n-1) for p = 2.
Count dim_bound(std::uint64_t p, std::uint64_t n);
/// F(n+2) for odd p, F(2n) for p = 2.
Count total_bound(std::uint64_t p, std::uint64_t n);

/// Closed ranges [lo, hi].
struct Range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

/// Every (m, n) in the grid (odd m skipped unless include_odd_m), two
/// verdicts per cell: "dim" then "total". Ordered by (m, n).
std::vector<BoundVerdict> verify_dim_bounds(std::uint64_t p, Range m_range, Range n_range,
                                            bool include_odd_m = false);

struct StrictnessScan {
    std::uint64_t p = 3;
    std::uint64_t n = 0;
    std::uint64_t m_max = 0;
    Count max_value;
    std::uint64_t argmax_m = 0; ///< smallest even m attaining the maximum
    Count bound;                ///< F(n+1)
    Count margin;               ///< bound - max_value
    /// n + 1 > 2p: the regime where the maximum is expected strictly below
    /// the bound. Not enforced.
    bool strict_expected = false;
};

/// Max of dim H^n over even m <= m_max for odd p. Throws input_error for p = 2.
StrictnessScan strictness_scan(std::uint64_t p, std::uint64_t n, std::uint64_t m_max);

} // namespace rpart
