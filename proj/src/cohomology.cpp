#include "rpart/cohomology.hpp"

#include <algorithm>
#include <bit>

#include "rpart/fib.hpp"

namespace rpart {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    if (p % 2 == 0)
        return p == 2;
    for (std::uint64_t d = 3; d <= p / d; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

void validate(const CohomParams& params)
{
    if (!is_prime(params.p))
        throw input_error("p must be prime, got " + std::to_string(params.p));
}

std::size_t slot_count(std::uint64_t p, std::uint64_t target)
{
    std::size_t r = 1;
    // p^r > target  <=>  target / p^r == 0
    for (std::uint64_t t = target / p; t > 0; t /= p)
        ++r;
    return r;
}

namespace {

void validate_system(std::uint64_t target, std::uint64_t budget)
{
    if (target < 1)
        throw input_error("solution count needs target >= 1");
    if (budget < 1)
        throw input_error("solution count needs budget >= 1");
}

} // namespace

CohomologySolver::CohomologySolver(std::uint64_t p)
    : p_(p)
{
    if (!is_prime(p))
        throw input_error("p must be prime, got " + std::to_string(p));
}

Count CohomologySolver::higher(std::uint64_t u, std::uint64_t budget, BudgetMode mode)
{
    if (u == 0)
        return (mode == BudgetMode::at_most || budget == 0) ? 1 : 0;

    auto& memo = memo_[mode == BudgetMode::exact ? 0 : 1];
    Key const key{u, budget};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    bool const odd = p_ != 2;
    // odd p: cheapest way to place c is a = c-1, b = 1 at cost 2c - 1.
    std::uint64_t const c_max = std::min(u, odd ? (budget + 1) / 2 : budget);

    Count total = 0;
    for (std::uint64_t c = u % p_; c <= c_max; c += p_) {
        std::uint64_t const next = (u - c) / p_;
        if (!odd) {
            total += higher(next, budget - c, mode);
            continue;
        }
        if (2 * c <= budget)
            total += higher(next, budget - 2 * c, mode);
        if (c >= 1)
            total += higher(next, budget - (2 * c - 1), mode);
    }
    memo.emplace(key, total);
    return total;
}

Count CohomologySolver::count(std::uint64_t target, std::uint64_t budget, BudgetMode mode)
{
    validate_system(target, budget);
    if (p_ == 2)
        return target % 2 == 0 ? higher(target / 2, budget, mode) : Count(0);

    Count total = 0;
    for (std::uint64_t b1 = 0; b1 <= 1; ++b1)
        if ((target - b1) % p_ == 0)
            total += higher((target - b1) / p_, budget - b1, mode);
    return total;
}

void CohomologySolver::list_higher(std::uint64_t u, std::uint64_t budget, std::size_t pos,
                                   SolutionVector& cur, std::vector<SolutionVector>& out,
                                   std::size_t cap, bool& truncated)
{
    if (truncated || higher(u, budget, BudgetMode::exact) == 0)
        return;
    if (u == 0) {
        if (out.size() >= cap) {
            truncated = true;
            return;
        }
        out.push_back(cur);
        return;
    }

    bool const odd = p_ != 2;
    std::uint64_t const c_max = std::min(u, odd ? (budget + 1) / 2 : budget);
    for (std::uint64_t c = u % p_; c <= c_max; c += p_) {
        std::uint64_t const next = (u - c) / p_;
        if (!odd) {
            cur.a[pos - 1] = c;
            list_higher(next, budget - c, pos + 1, cur, out, cap, truncated);
            cur.a[pos - 1] = 0;
            continue;
        }
        if (2 * c <= budget) {
            cur.a[pos - 1] = c;
            list_higher(next, budget - 2 * c, pos + 1, cur, out, cap, truncated);
        }
        if (c >= 1) {
            cur.a[pos - 1] = c - 1;
            cur.b[pos] = 1;
            list_higher(next, budget - (2 * c - 1), pos + 1, cur, out, cap, truncated);
            cur.b[pos] = 0;
        }
        cur.a[pos - 1] = 0;
    }
}

std::vector<SolutionVector> CohomologySolver::list(std::uint64_t target, std::uint64_t budget,
                                                   std::size_t cap, bool* truncated)
{
    validate_system(target, budget);
    auto const r = slot_count(p_, target);

    SolutionVector cur;
    cur.a.assign(r, 0);
    if (p_ != 2)
        cur.b.assign(r, 0);

    std::vector<SolutionVector> out;
    bool cut = false;
    if (p_ == 2) {
        if (target % 2 == 0)
            list_higher(target / 2, budget, 1, cur, out, cap, cut);
    } else {
        for (std::uint64_t b1 = 0; b1 <= 1; ++b1) {
            if ((target - b1) % p_ != 0)
                continue;
            cur.b[0] = static_cast<std::uint8_t>(b1);
            list_higher((target - b1) / p_, budget - b1, 1, cur, out, cap, cut);
        }
    }
    if (truncated)
        *truncated = cut;
    return out;
}

Count count_N(std::uint64_t target, std::uint64_t budget, std::uint64_t p)
{
    if (p == 2 || !is_prime(p))
        throw input_error("N(m, n) needs an odd prime p, got " + std::to_string(p));
    CohomologySolver solver(p);
    return solver.count(target, budget);
}

// ---------------------------------------------------------------------------
// Brute-force oracles

namespace {

struct NaiveOddP {
    std::uint64_t p, target, budget;
    std::size_t r;
    std::vector<Count> pw; // p^0 .. p^r
    std::vector<std::uint64_t> a;
    std::vector<std::uint8_t> b;
    std::uint64_t hits = 0;

    Count weight() const
    {
        // b_1 + sum_{i=1}^{r-1} (a_i + b_{i+1}) p^i + a_r p^r
        Count w = b[0];
        for (std::size_t i = 1; i <= r - 1; ++i)
            w += Count(a[i - 1] + b[i]) * pw[i];
        w += Count(a[r - 1]) * pw[r];
        return w;
    }

    void over_a(std::size_t i, std::uint64_t a_sum, const Count& a_weight, std::uint64_t b_sum)
    {
        if (i == r) {
            if (2 * a_sum + b_sum == budget && weight() == target)
                ++hits;
            return;
        }
        for (std::uint64_t v = 0; 2 * (a_sum + v) + b_sum <= budget; ++v) {
            Count const w = a_weight + Count(v) * pw[i + 1];
            if (w > target)
                break;
            a[i] = v;
            over_a(i + 1, a_sum + v, w, b_sum);
        }
        a[i] = 0;
    }
};

void check_naive_limits(std::uint64_t target, std::uint64_t budget, std::uint64_t max_target,
                        std::uint64_t max_budget)
{
    validate_system(target, budget);
    if (target > max_target || budget > max_budget)
        throw input_error("naive enumeration limited to target <= " + std::to_string(max_target) +
                          " and budget <= " + std::to_string(max_budget));
}

} // namespace

Count count_N_naive(std::uint64_t target, std::uint64_t budget, std::uint64_t p,
                    std::uint64_t max_target, std::uint64_t max_budget)
{
    if (p == 2 || !is_prime(p))
        throw input_error("N(m, n) needs an odd prime p, got " + std::to_string(p));
    check_naive_limits(target, budget, max_target, max_budget);

    NaiveOddP e{p, target, budget, slot_count(p, target), {}, {}, {}, 0};
    e.pw.emplace_back(1);
    for (std::size_t i = 1; i <= e.r; ++i)
        e.pw.push_back(e.pw.back() * p);
    e.a.assign(e.r, 0);
    e.b.assign(e.r, 0);

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e.r); ++mask) {
        auto const b_sum = static_cast<std::uint64_t>(std::popcount(mask));
        if (b_sum > budget)
            continue;
        for (std::size_t j = 0; j < e.r; ++j)
            e.b[j] = static_cast<std::uint8_t>((mask >> j) & 1u);
        e.over_a(0, 0, Count(0), b_sum);
    }
    return Count(e.hits);
}

Count count_p2_naive(std::uint64_t target, std::uint64_t budget, std::uint64_t max_target,
                     std::uint64_t max_budget)
{
    check_naive_limits(target, budget, max_target, max_budget);
    auto const r = slot_count(2, target);
    std::uint64_t hits = 0;

    // a_1 .. a_r with weights 2^1 .. 2^r
    auto walk = [&](auto&& self, std::size_t i, std::uint64_t a_sum, std::uint64_t w) -> void {
        if (i > r) {
            if (a_sum == budget && w == target)
                ++hits;
            return;
        }
        std::uint64_t const unit = std::uint64_t{1} << i;
        for (std::uint64_t v = 0; a_sum + v <= budget && w + v * unit <= target; ++v)
            self(self, i + 1, a_sum + v, w + v * unit);
    };
    walk(walk, 1, 0, 0);
    return Count(hits);
}

bool satisfies(const SolutionVector& s, std::uint64_t p, std::uint64_t target,
               std::uint64_t budget, BudgetMode mode)
{
    Count weight = 0, cost = 0, pw = 1;
    if (p == 2) {
        if (!s.b.empty())
            return false;
        for (std::size_t i = 0; i < s.a.size(); ++i) {
            pw *= 2;
            weight += Count(s.a[i]) * pw;
            cost += s.a[i];
        }
    } else {
        auto const r = s.a.size();
        if (r == 0 || s.b.size() != r)
            return false;
        for (auto bit : s.b) {
            if (bit > 1)
                return false;
            cost += bit;
        }
        for (auto v : s.a)
            cost += 2 * Count(v);
        weight = s.b[0];
        for (std::size_t i = 1; i <= r; ++i) {
            pw *= p;
            Count coeff = s.a[i - 1];
            if (i < r)
                coeff += s.b[i];
            weight += coeff * pw;
        }
    }
    bool const budget_ok = mode == BudgetMode::exact ? cost == budget : cost <= budget;
    return budget_ok && weight == target;
}

// ---------------------------------------------------------------------------

Count dim_weyl_cohomology(CohomologySolver& solver, std::uint64_t m, std::uint64_t n)
{
    if (m % 2 != 0)
        return 0;
    return solver.count(m / 2 + 1, n + 1);
}

CohomResult dim_weyl_cohomology(const CohomParams& params, bool list_solutions,
                                std::size_t listing_cap)
{
    validate(params);
    CohomResult res;
    if (params.m % 2 != 0) {
        res.dim = 0;
        res.odd_m_convention = true;
        res.listed = list_solutions;
        return res;
    }
    CohomologySolver solver(params.p);
    std::uint64_t const target = params.m / 2 + 1;
    std::uint64_t const budget = params.n + 1;
    res.dim = solver.count(target, budget);
    if (list_solutions) {
        res.listed = true;
        res.solutions = solver.list(target, budget, listing_cap, &res.listing_truncated);
    }
    return res;
}

Count total_dim(CohomologySolver& solver, std::uint64_t m, std::uint64_t n)
{
    if (m % 2 != 0)
        return 0;
    std::uint64_t const target = m / 2 + 1;

    Count by_degree = 0;
    for (std::uint64_t i = 0; i <= n; ++i)
        by_degree += solver.count(target, i + 1, BudgetMode::exact);
    Count const by_inequality = solver.count(target, n + 1, BudgetMode::at_most);

    if (by_degree != by_inequality)
        throw oracle_mismatch("total dimension mismatch at p=" + std::to_string(solver.prime()) +
                              " m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
                              by_degree.str() + " by degree vs " + by_inequality.str() +
                              " by inequality system");
    return by_degree;
}

Count total_dim(const CohomParams& params)
{
    validate(params);
    CohomologySolver solver(params.p);
    return total_dim(solver, params.m, params.n);
}

Count dim_bound(std::uint64_t p, std::uint64_t n)
{
    auto const k = static_cast<std::int64_t>(n);
    return p == 2 ? fib(2 * k - 1) : fib(k + 1);
}

Count total_bound(std::uint64_t p, std::uint64_t n)
{
    auto const k = static_cast<std::int64_t>(n);
    return p == 2 ? fib(2 * k) : fib(k + 2);
}

std::vector<BoundVerdict> verify_dim_bounds(std::uint64_t p, Range m_range, Range n_range,
                                            bool include_odd_m)
{
    CohomologySolver solver(p);
    std::string const tag = std::to_string(p);
    std::vector<BoundVerdict> out;
    for (std::uint64_t m = m_range.lo; m <= m_range.hi; ++m) {
        if (m % 2 != 0 && !include_odd_m)
            continue;
        for (std::uint64_t n = n_range.lo; n <= n_range.hi; ++n) {
            out.push_back(make_verdict("dim", tag, m, n, dim_weyl_cohomology(solver, m, n),
                                       dim_bound(p, n)));
            out.push_back(make_verdict("total", tag, m, n, total_dim(solver, m, n),
                                       total_bound(p, n)));
        }
        if (m == m_range.hi)
            break;
    }
    return out;
}

StrictnessScan strictness_scan(std::uint64_t p, std::uint64_t n, std::uint64_t m_max)
{
    if (p == 2 || !is_prime(p))
        throw input_error("strictness scan needs an odd prime p, got " + std::to_string(p));

    CohomologySolver solver(p);
    StrictnessScan scan;
    scan.p = p;
    scan.n = n;
    scan.m_max = m_max;
    scan.max_value = -1;
    for (std::uint64_t m = 0; m <= m_max; m += 2) {
        Count v = dim_weyl_cohomology(solver, m, n);
        if (v > scan.max_value) {
            scan.max_value = std::move(v);
            scan.argmax_m = m;
        }
    }
    scan.bound = fib(static_cast<std::int64_t>(n) + 1);
    scan.margin = scan.bound - scan.max_value;
    scan.strict_expected = n + 1 > 2 * p;
    return scan;
}

} // namespace rpart
