#include "rpart/partition.hpp"

#include <algorithm>

#include "rpart/fib.hpp"

namespace rpart {

namespace {

void validate(const PartitionCountQuery& q)
{
    if (q.m < 1)
        throw input_error("P(m, n, A) needs m >= 1");
    if (q.n < 1)
        throw input_error("P(m, n, A) needs n >= 1");
}

} // namespace

PartitionCounter::PartitionCounter(PartSet set, bool keep_cache)
    : set_(std::move(set))
    , keep_cache_(keep_cache)
{}

void PartitionCounter::ensure_parts(std::uint64_t m)
{
    if (m <= parts_bound_)
        return;
    // parts_up_to(B) is a prefix of A, so indices stay valid as B grows.
    parts_bound_ = std::max(m, parts_bound_ * 2);
    parts_ = set_.parts_up_to(parts_bound_);
}

Count PartitionCounter::rec(std::uint64_t m, std::uint64_t n, std::uint32_t i)
{
    if (m == 0)
        return 1;
    auto const usable = static_cast<std::uint32_t>(
        std::upper_bound(parts_.begin(), parts_.begin() + i, m) - parts_.begin());
    i = usable;
    if (i == 0 || n == 0)
        return 0;
    // More than m / a_1 parts can never be used.
    n = std::min(n, m / parts_[0]);
    if (i == 1)
        return (m % parts_[0] == 0 && m / parts_[0] <= n) ? 1 : 0;

    Key const key{m, n, i};
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    Count v = rec(m, n, i - 1);
    v += rec(m - parts_[i - 1], n - 1, i);
    memo_.emplace(key, v);
    return v;
}

Count PartitionCounter::count(const PartitionCountQuery& q)
{
    validate(q);
    ensure_parts(q.m);
    Count v = rec(q.m, q.n, static_cast<std::uint32_t>(parts_.size()));
    if (!keep_cache_)
        memo_.clear();
    return v;
}

Count count_at_most(const PartSet& set, const PartitionCountQuery& q)
{
    PartitionCounter counter(set);
    return counter.count(q);
}

namespace {

// Nondecreasing part lists: every extension uses a part at index >= lowest.
std::uint64_t enumerate_lists(const std::vector<std::uint64_t>& parts, std::uint64_t remaining,
                              std::size_t lowest, std::uint64_t slots)
{
    if (remaining == 0)
        return 1;
    if (slots == 0)
        return 0;
    std::uint64_t total = 0;
    for (std::size_t k = lowest; k < parts.size() && parts[k] <= remaining; ++k)
        total += enumerate_lists(parts, remaining - parts[k], k, slots - 1);
    return total;
}

} // namespace

Count count_at_most_naive(const PartSet& set, const PartitionCountQuery& q, std::uint64_t max_m)
{
    validate(q);
    if (q.m > max_m)
        throw input_error("naive partition oracle limited to m <= " + std::to_string(max_m));
    auto const parts = set.parts_up_to(q.m);
    return Count(enumerate_lists(parts, q.m, 0, q.n));
}

// ---------------------------------------------------------------------------

const char* to_string(Condition c)
{
    return c == Condition::star ? "star" : "c23";
}

Condition parse_condition(const std::string& text)
{
    if (text == "star")
        return Condition::star;
    if (text == "c23")
        return Condition::c23;
    throw input_error("condition must be 'star' or 'c23', got '" + text + "'");
}

namespace {

// Weighted tail sum  sum_{j=1}^{s-1} (step*j) a_{s-j}  over 1-based a.
Count weighted_tail(const std::vector<Count>& a, std::size_t s, unsigned step)
{
    Count lhs = 0;
    for (std::size_t j = 1; j < s; ++j)
        lhs += Count(step * j) * a[s - j - 1];
    return lhs;
}

ConditionReport run_condition(const PartSet& set, Condition c, std::size_t s_max)
{
    if (s_max < 2)
        throw input_error("condition check needs s_max >= 2");

    // c23 at index s compares against a_{s+1}.
    std::size_t const lookahead = c == Condition::c23 ? 1 : 0;
    auto const a = set.first(s_max + lookahead);

    ConditionReport rep;
    rep.condition = c;
    rep.s_requested = s_max;
    rep.truncated = a.size() < s_max + lookahead;

    for (std::size_t s = 2; s + lookahead <= a.size() && s <= s_max; ++s) {
        Count lhs = weighted_tail(a, s, c == Condition::star ? 2 : 1);
        Count const& rhs = a[s + lookahead - 1];
        if (lhs >= rhs) {
            rep.failure = ConditionFailure{s, std::move(lhs), rhs};
            rep.s_checked = s;
            return rep;
        }
        rep.s_checked = s;
    }
    return rep;
}

} // namespace

ConditionReport check_condition_star(const PartSet& set, std::size_t s_max)
{
    return run_condition(set, Condition::star, s_max);
}

ConditionReport check_condition_23(const PartSet& set, std::size_t s_max)
{
    return run_condition(set, Condition::c23, s_max);
}

ConditionReport check_condition(const PartSet& set, Condition c, std::size_t s_max)
{
    return run_condition(set, c, s_max);
}

std::optional<Condition> select_partition_condition(const PartSet& set, std::size_t s_max)
{
    if (check_condition_star(set, s_max).passed())
        return Condition::star;
    if (check_condition_23(set, s_max).passed())
        return Condition::c23;
    return std::nullopt;
}

Count partition_bound(Condition c, std::uint64_t n)
{
    auto const k = static_cast<std::int64_t>(n);
    return c == Condition::star ? fib(k) : fib(2 * k - 1);
}

std::optional<Count> fibonacci_bound_for(const PartSet& set, std::uint64_t n, std::size_t s_max)
{
    auto const c = select_partition_condition(set, s_max);
    if (!c)
        return std::nullopt;
    return partition_bound(*c, n);
}

} // namespace rpart
