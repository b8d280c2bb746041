#include "rpart/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "rpart/cohomology.hpp"
#include "rpart/fib.hpp"
#include "rpart/partition.hpp"
#include "rpart/sweep.hpp"

namespace rpart {

Suite parse_suite(const std::string& text)
{
    if (text == "partitions")
        return Suite::partitions;
    if (text == "cohom")
        return Suite::cohom;
    if (text == "lemma")
        return Suite::lemma;
    if (text == "all")
        return Suite::all;
    throw input_error("suite must be partitions, cohom, lemma or all; got '" + text + "'");
}

const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::violation: return "FAIL";
    case CheckStatus::mismatch: return "MISMATCH";
    case CheckStatus::note: return "NOTE";
    }
    return "?";
}

int exit_code_for(const std::vector<CheckLine>& lines)
{
    bool violation = false;
    for (auto const& l : lines) {
        if (l.status == CheckStatus::mismatch)
            return 3;
        violation |= l.status == CheckStatus::violation;
    }
    return violation ? 2 : 0;
}

std::vector<PartSet> random_part_sets(std::size_t count, std::uint64_t seed, std::uint64_t cover)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> first(1, 5);
    std::uniform_int_distribution<std::uint64_t> step(1, 12);
    std::vector<PartSet> out;
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<std::uint64_t> parts{first(rng)};
        while (parts.back() <= cover)
            parts.push_back(parts.back() + step(rng));
        out.push_back(PartSet::list(std::move(parts)));
    }
    return out;
}

std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> known_p2_solutions_286()
{
    return {
        {{1, 4}, {4, 5}},
        {{3, 4}, {1, 5}, {1, 6}},
        {{2, 3}, {2, 5}, {1, 6}},
        {{2, 2}, {1, 3}, {2, 6}},
        {{4, 2}, {1, 7}},
        {{2, 1}, {1, 2}, {1, 3}, {1, 7}},
    };
}

namespace {

CheckLine line(std::string name, bool ok, std::string detail,
               CheckStatus on_fail = CheckStatus::violation)
{
    return {std::move(name), ok ? CheckStatus::pass : on_fail, std::move(detail)};
}

std::string first_violation(const SweepReport& r)
{
    if (r.summary.violations.empty())
        return "";
    auto const& v = r.summary.violations.front();
    std::ostringstream s;
    s << "; first at m=" << v.m << " n=" << v.n << " value=" << v.value << " bound=" << v.bound;
    return s.str();
}

// Zero-violation check over a whole sweep grid.
CheckLine grid_check(std::string name, const std::vector<SweepConfig>& configs)
{
    std::size_t cells = 0, violations = 0;
    std::string where;
    for (auto const& c : configs) {
        auto const r = run_sweep(c);
        cells += r.rows.size();
        violations += r.summary.violations.size();
        if (where.empty() && !r.summary.violations.empty())
            where = " [" + (c.mode == SweepMode::partitions ? c.set : "p=" + std::to_string(c.p)) +
                    (c.quantity == CohomQuantity::total ? " total" : "") + first_violation(r) + "]";
    }
    std::ostringstream d;
    d << cells << " cells, " << violations << " violations" << where;
    return line(std::move(name), violations == 0, d.str());
}

void lemma_suite(std::vector<CheckLine>& out)
{
    auto const verdicts = check_lemma_identities(30);
    bool const ok = std::all_of(verdicts.begin(), verdicts.end(),
                                [](auto const& v) { return v.holds(); });
    out.push_back(line("fibonacci-sum-identities n<=30", ok,
                       std::to_string(verdicts.size()) + " values of n checked"));
}

void partitions_suite(std::vector<CheckLine>& out, unsigned jobs)
{
    auto const a2 = PartSet::powers(2);
    Count const p43 = count_at_most(a2, {4, 3});
    Count const p55 = count_at_most(a2, {5, 5});
    out.push_back(line("known-values P(4,3,powers:2)=3 P(5,5,powers:2)=4", p43 == 3 && p55 == 4,
                       "got " + p43.str() + " and " + p55.str()));

    auto grid = [&](std::uint64_t q, BoundRule rule) {
        SweepConfig c;
        c.mode = SweepMode::partitions;
        c.set = "powers:" + std::to_string(q);
        c.m = {1, 2000};
        c.n = {1, 24};
        c.bound = rule;
        c.jobs = jobs;
        return c;
    };
    out.push_back(grid_check("bound F(n) powers:{4,5,10} m<=2000 n<=24",
                             {grid(4, BoundRule::star), grid(5, BoundRule::star),
                              grid(10, BoundRule::star)}));
    out.push_back(grid_check("bound F(2n-1) powers:{2,3} m<=2000 n<=24",
                             {grid(2, BoundRule::c23), grid(3, BoundRule::c23)}));

    bool cond_ok = true;
    std::string cond_detail;
    for (std::uint64_t q = 4; q <= 10; ++q)
        if (!check_condition_star(PartSet::powers(q), 20).passed()) {
            cond_ok = false;
            cond_detail += " star fails for powers:" + std::to_string(q);
        }
    auto const s2 = check_condition_star(PartSet::powers(2), 20);
    auto const s3 = check_condition_star(PartSet::powers(3), 20);
    if (s2.passed() || s2.failure->s != 2) {
        cond_ok = false;
        cond_detail += " powers:2 star should fail at s=2";
    }
    if (s3.passed() || s3.failure->s != 3) {
        cond_ok = false;
        cond_detail += " powers:3 star should fail at s=3";
    }
    for (std::uint64_t q : {2, 3})
        if (!check_condition_23(PartSet::powers(q), 20).passed()) {
            cond_ok = false;
            cond_detail += " c23 fails for powers:" + std::to_string(q);
        }
    out.push_back(line("growth-conditions s_max=20", cond_ok,
                       cond_ok ? "star: q=4..10 pass, q=2 fails at s=2, q=3 at s=3; c23: q=2,3 pass"
                               : cond_detail));

    std::vector<PartSet> sets{PartSet::powers(2), PartSet::powers(3), PartSet::powers(4),
                              PartSet::powers(5)};
    for (auto& s : random_part_sets(50, 20240611, 80))
        sets.push_back(std::move(s));
    std::size_t cells = 0;
    std::string bad;
    for (auto const& s : sets) {
        PartitionCounter counter(s, true);
        for (std::uint64_t m = 1; m <= 80 && bad.empty(); ++m)
            for (std::uint64_t n = 1; n <= 8; ++n, ++cells) {
                Count const dp = counter.count({m, n});
                Count const naive = count_at_most_naive(s, {m, n});
                if (dp != naive) {
                    bad = " first at " + s.descriptor() + " m=" + std::to_string(m) +
                          " n=" + std::to_string(n) + ": " + dp.str() + " vs " + naive.str();
                    break;
                }
            }
    }
    out.push_back(line("partition-oracle-equivalence m<=80 n<=8 (4 power sets + 50 random)",
                       bad.empty(), std::to_string(cells) + " cells" + bad,
                       CheckStatus::mismatch));
}

void cohom_suite(std::vector<CheckLine>& out, unsigned jobs)
{
    auto const r = dim_weyl_cohomology({2, 286, 4}, true);
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> got;
    for (auto const& s : r.solutions) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
        for (std::size_t i = 0; i < s.a.size(); ++i)
            if (s.a[i])
                terms.emplace_back(s.a[i], i + 1);
        got.push_back(std::move(terms));
    }
    auto want = known_p2_solutions_286();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    out.push_back(line("known-values dim H^4(V(286)) p=2 is 6 with the listed solutions",
                       r.dim == 6 && got == want,
                       "dim " + r.dim.str() + ", " + std::to_string(got.size()) + " solutions"));

    auto grid = [&](std::uint64_t p, CohomQuantity q) {
        SweepConfig c;
        c.mode = SweepMode::cohomology;
        c.p = p;
        c.m = {0, 5000};
        c.n = {0, 16};
        c.quantity = q;
        c.jobs = jobs;
        return c;
    };
    std::vector<SweepConfig> odd;
    for (std::uint64_t p : {3, 5, 7})
        for (auto q : {CohomQuantity::dim, CohomQuantity::total})
            odd.push_back(grid(p, q));
    out.push_back(grid_check("bounds F(n+1)/F(n+2) p in {3,5,7} even m<=5000 n<=16", odd));
    out.push_back(grid_check("bounds F(2n-1)/F(2n) p=2 even m<=5000 n<=16",
                             {grid(2, CohomQuantity::dim), grid(2, CohomQuantity::total)}));

    std::size_t cells = 0;
    std::string bad;
    for (std::uint64_t p : {3, 5, 7}) {
        CohomologySolver solver(p);
        for (std::uint64_t t = 1; t <= 300 && bad.empty(); ++t)
            for (std::uint64_t b = 1; b <= 10; ++b, ++cells) {
                Count const dp = solver.count(t, b);
                Count const naive = count_N_naive(t, b, p);
                if (dp != naive) {
                    bad = " first at p=" + std::to_string(p) + " target=" + std::to_string(t) +
                          " budget=" + std::to_string(b) + ": " + dp.str() + " vs " + naive.str();
                    break;
                }
            }
    }
    out.push_back(line("solution-count-oracle-equivalence target<=300 budget<=10 p in {3,5,7}",
                       bad.empty(), std::to_string(cells) + " cells" + bad,
                       CheckStatus::mismatch));

    for (std::uint64_t n = 8; n <= 12; ++n) {
        auto const scan = strictness_scan(3, n, 5000);
        std::ostringstream d;
        d << "max " << scan.max_value << " at m=" << scan.argmax_m << ", F(" << n + 1
          << ")=" << scan.bound << ", margin " << scan.margin;
        bool const strict = scan.margin > 0;
        out.push_back({"strictness p=3 n=" + std::to_string(n) + " even m<=5000",
                       CheckStatus::note, (strict ? "strict: " : "not strict: ") + d.str()});
    }
}

} // namespace

std::vector<CheckLine> run_suite(Suite suite, unsigned jobs)
{
    std::vector<CheckLine> out;
    if (suite == Suite::lemma || suite == Suite::all)
        lemma_suite(out);
    if (suite == Suite::partitions || suite == Suite::all)
        partitions_suite(out, jobs);
    if (suite == Suite::cohom || suite == Suite::all)
        cohom_suite(out, jobs);
    return out;
}

} // namespace rpart
