#include <doctest.h>

#include <algorithm>
#include <random>

#include "rpart/cohomology.hpp"
#include "rpart/fib.hpp"
#include "rpart/verify.hpp"

using namespace rpart;

TEST_CASE("primality and slot count")
{
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(7917));

    CHECK(slot_count(3, 1) == 1);
    CHECK(slot_count(3, 2) == 1);
    CHECK(slot_count(3, 3) == 2);
    CHECK(slot_count(3, 26) == 3);
    CHECK(slot_count(3, 27) == 4);
    CHECK(slot_count(2, 144) == 8);
}

TEST_CASE("count_N: known values")
{
    for (std::uint64_t p : {3, 5, 7, 11})
        CHECK(count_N(1, 1, p) == 1);
    // frozen from count_N_naive
    CHECK(count_N_naive(3, 2, 3) == 1);
    CHECK(count_N(3, 2, 3) == 1);
    CHECK(count_N_naive(1, 1, 3) == 1);
    CHECK(count_N_naive(3, 1, 3) == 1);
    CHECK(count_N(3, 1, 3) == 1);
    for (std::uint64_t k = 1; k <= 10; ++k) {
        CHECK(count_N_naive(2, k, 3) == 0);
        CHECK(count_N(2, k, 3) == 0);
    }
    for (std::uint64_t p : {5, 7, 11})
        for (std::uint64_t t = 2; t < 400; t += p)
            for (std::uint64_t b = 1; b <= 12; ++b)
                CHECK(count_N(t, b, p) == 0);
}

TEST_CASE("count_N rejects bad input")
{
    CHECK_THROWS_AS(count_N(1, 1, 2), input_error);
    CHECK_THROWS_AS(count_N(1, 1, 9), input_error);
    CHECK_THROWS_AS(count_N(0, 1, 3), input_error);
    CHECK_THROWS_AS(count_N(1, 0, 3), input_error);
    CHECK_THROWS_AS(count_N_naive(10'001, 3, 3), input_error);
    CHECK_THROWS_AS(count_N_naive(10, 25, 3), input_error);
    CHECK_THROWS_AS(CohomologySolver(15), input_error);
}

TEST_CASE("dim H^n: the p = 2 example with 286")
{
    auto const r = dim_weyl_cohomology({2, 286, 4}, true);
    CHECK(r.dim == 6);
    REQUIRE(r.solutions.size() == 6);

    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> got;
    for (auto const& s : r.solutions) {
        CHECK(s.b.empty());
        CHECK(satisfies(s, 2, 144, 5));
        std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
        for (std::size_t i = 0; i < s.a.size(); ++i)
            if (s.a[i])
                terms.emplace_back(s.a[i], i + 1);
        got.push_back(terms);
    }
    auto want = known_p2_solutions_286();
    for (auto const& w : want) {
        std::uint64_t sum = 0;
        for (auto [c, e] : w)
            sum += c << e;
        CHECK(sum == 144);
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(count_p2_naive(144, 5) == 6);
}

TEST_CASE("dim H^n: small cases")
{
    for (std::uint64_t p : {3, 5, 7, 11})
        CHECK(dim_weyl_cohomology({p, 0, 0}).dim == 1);

    auto const odd = dim_weyl_cohomology({3, 1, 5});
    CHECK(odd.dim == 0);
    CHECK(odd.odd_m_convention);

    // target 3: budget 1 has b_2 = 1, budget 2 has a_1 = 1 (frozen from the oracle)
    CHECK(count_N_naive(3, 1, 3) == 1);
    CHECK(count_N_naive(3, 2, 3) == 1);
    CHECK(dim_weyl_cohomology({3, 4, 0}).dim == 1);
    CHECK(dim_weyl_cohomology({3, 4, 1}).dim == 1);

    // Under the p = 2 system the weights start at 2^1, so the odd target
    // m/2 + 1 = 1 for the trivial module has no solutions.
    CHECK(dim_weyl_cohomology({2, 0, 0}).dim == 0);

    CHECK_THROWS_AS(dim_weyl_cohomology({4, 0, 0}), input_error);
}

TEST_CASE("total dimension")
{
    for (std::uint64_t p : {3, 5, 7})
        for (std::uint64_t n = 0; n <= 12; ++n)
            CHECK(total_dim({p, 0, n}) == 1);
    CHECK(total_dim({3, 4, 1}) == 2);

    Count sum = 0;
    for (std::uint64_t i = 0; i <= 4; ++i)
        sum += dim_weyl_cohomology({2, 286, i}).dim;
    CHECK(total_dim({2, 286, 4}) == sum);
    CHECK(total_dim({3, 7, 3}) == 0);
}

TEST_CASE("bound verification grid")
{
    auto const grid = verify_dim_bounds(3, {0, 500}, {0, 10});
    CHECK(grid.size() == 251 * 11 * 2);
    for (auto const& v : grid) {
        INFO(v.kind << " m=" << v.m << " n=" << v.n);
        CHECK(v.holds);
    }

    auto const one = verify_dim_bounds(2, {286, 286}, {4, 4});
    REQUIRE(one.size() == 2);
    CHECK(one[0].kind == "dim");
    CHECK(one[0].value == 6);
    CHECK(one[0].bound == 13);
    CHECK(one[0].holds);
    CHECK_FALSE(one[0].sharp);

    auto const trivial = verify_dim_bounds(5, {0, 0}, {0, 0});
    CHECK(trivial[0].value == 1);
    CHECK(trivial[0].bound == 1);
    CHECK(trivial[0].sharp);

    CHECK(verify_dim_bounds(3, {1, 3}, {0, 0}, true).size() == 6);
    CHECK(verify_dim_bounds(3, {1, 3}, {0, 0}, false).size() == 2);
}

TEST_CASE("strictness scan")
{
    auto const s8 = strictness_scan(3, 8, 5000);
    CHECK(s8.strict_expected);
    CHECK(s8.bound == fib(9));
    CHECK(s8.margin >= 1);

    auto const s1 = strictness_scan(3, 1, 5000);
    CHECK(s1.max_value <= 1);

    auto const s0 = strictness_scan(5, 0, 5000);
    CHECK(s0.max_value == 1);
    CHECK(s0.argmax_m == 0);

    CHECK_THROWS_AS(strictness_scan(2, 3, 100), input_error);
}

TEST_CASE("solver agrees with exhaustive enumeration")
{
    for (std::uint64_t p : {3, 5, 7}) {
        CohomologySolver s(p);
        for (std::uint64_t t = 1; t <= 300; ++t)
            for (std::uint64_t b = 1; b <= 10; ++b) {
                INFO("p=" << p << " target=" << t << " budget=" << b);
                REQUIRE(s.count(t, b) == count_N_naive(t, b, p));
            }
    }
    CohomologySolver two(2);
    for (std::uint64_t t = 1; t <= 600; ++t)
        for (std::uint64_t b = 1; b <= 10; ++b)
            REQUIRE(two.count(t, b) == count_p2_naive(t, b));
}

TEST_CASE("randomized structural invariants")
{
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<std::uint64_t> target(1, 300), budget(1, 10);
    std::uint64_t const primes[] = {3, 5, 7};

    for (int trial = 0; trial < 400; ++trial) {
        auto const p = primes[rng() % 3];
        auto const t = target(rng);
        auto const b = budget(rng);
        CohomologySolver s(p);
        Count const n = s.count(t, b);

        if (t % p != 0 && t % p != 1)
            CHECK(n == 0);

        bool truncated = true;
        auto const sols = s.list(t, b, default_listing_cap, &truncated);
        CHECK_FALSE(truncated);
        CHECK(Count(sols.size()) == n);
        for (auto const& v : sols) {
            CHECK(satisfies(v, p, t, b));
            auto const bsum = std::count(v.b.begin(), v.b.end(), 1);
            CHECK(static_cast<std::uint64_t>(bsum) % 2 == b % 2);
        }

        Count by_degree = 0;
        for (std::uint64_t k = 1; k <= b; ++k)
            by_degree += s.count(t, k);
        CHECK(by_degree == s.count(t, b, BudgetMode::at_most));
    }
}

TEST_CASE("listing cap")
{
    CohomologySolver s(3);
    // Find a cell with several solutions and cap below it.
    for (std::uint64_t t = 1; t < 2000; ++t) {
        if (s.count(t, 12) < 5)
            continue;
        bool truncated = false;
        auto const part = s.list(t, 12, 3, &truncated);
        CHECK(part.size() == 3);
        CHECK(truncated);
        return;
    }
    FAIL("no cell with five or more solutions found");
}
