#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "rpart/fib.hpp"
#include "rpart/partition.hpp"
#include "rpart/sweep.hpp"

using namespace rpart;

namespace {

SweepConfig partitions(std::string set, Range m, Range n)
{
    SweepConfig c;
    c.mode = SweepMode::partitions;
    c.set = std::move(set);
    c.m = m;
    c.n = n;
    return c;
}

SweepConfig cohomology(std::uint64_t p, Range m, Range n)
{
    SweepConfig c;
    c.mode = SweepMode::cohomology;
    c.p = p;
    c.m = m;
    c.n = n;
    return c;
}

std::string render(const SweepReport& r, ReportFormat f)
{
    std::ostringstream s;
    emit(r, f, s);
    return s.str();
}

void check_row_consistency(const std::vector<BoundVerdict>& rows)
{
    for (auto const& r : rows) {
        CHECK(r.holds == (r.value <= r.bound));
        CHECK(r.sharp == (r.value == r.bound));
        CHECK(r.slack == r.bound - r.value);
    }
}

} // namespace

TEST_CASE("binary partition sweep")
{
    auto const r = run_sweep(partitions("powers:2", {1, 100}, {1, 10}));
    CHECK(r.resolved_bound == BoundRule::c23);
    CHECK(r.rows.size() == 1000);
    CHECK(r.summary.violations.empty());
    check_row_consistency(r.rows);

    auto const it = std::find_if(r.rows.begin(), r.rows.end(),
                                 [](auto const& v) { return v.m == 4 && v.n == 3; });
    REQUIRE(it != r.rows.end());
    CHECK(it->value == 3);
    CHECK(it->bound == 5);

    // rows are ordered by (m, n)
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        auto const& a = r.rows[i - 1];
        auto const& b = r.rows[i];
        CHECK((a.m < b.m || (a.m == b.m && a.n < b.n)));
    }
}

TEST_CASE("extremes of the binary sweep")
{
    auto const r = run_sweep(partitions("powers:2", {1, 100}, {1, 10}));
    auto const ex = find_extremes(r);
    REQUIRE(ex.size() == 10);

    // oracle: brute force over the same grid
    Count best = -1;
    std::uint64_t at = 0;
    for (std::uint64_t m = 1; m <= 100; ++m) {
        Count v = count_at_most_naive(PartSet::powers(2), {m, 3});
        if (v > best) {
            best = v;
            at = m;
        }
    }
    CHECK(best == 3);
    CHECK(at == 4);
    CHECK(ex[2].n == 3);
    CHECK(ex[2].max_value == best);
    CHECK(ex[2].argmax_m == at);
    CHECK_FALSE(ex[2].sharp);

    CHECK(r.summary.per_n.size() == ex.size());
    CHECK_THROWS_AS(find_extremes(std::vector<BoundVerdict>{}), input_error);
}

TEST_CASE("cohomology sweeps")
{
    auto const r3 = run_sweep(cohomology(3, {0, 500}, {0, 10}));
    CHECK(r3.resolved_bound == BoundRule::odd_p);
    CHECK(r3.rows.size() == 251 * 11);
    CHECK(r3.summary.violations.empty());
    check_row_consistency(r3.rows);

    auto const ex = find_extremes(r3);
    CHECK(ex[0].n == 0);
    CHECK(ex[0].max_value == 1);
    CHECK(ex[0].argmax_m == 0);
    CHECK(ex[0].sharp);
    for (auto const& e : ex)
        if (e.n + 1 > 6)
            CHECK(e.max_value < fib(static_cast<std::int64_t>(e.n) + 1));

    auto const r2 = run_sweep(cohomology(2, {286, 286}, {4, 4}));
    REQUIRE(r2.rows.size() == 1);
    CHECK(r2.rows[0].value == 6);
    CHECK(r2.rows[0].kind == "dim");

    auto tc = cohomology(5, {0, 200}, {0, 8});
    tc.quantity = CohomQuantity::total;
    auto const rt = run_sweep(tc);
    CHECK(rt.rows.front().kind == "total");
    CHECK(rt.summary.violations.empty());
}

TEST_CASE("row count follows the grid")
{
    auto c = cohomology(3, {3, 20}, {2, 5});
    CHECK(run_sweep(c).rows.size() == 9 * 4);
    c.include_odd_m = true;
    CHECK(run_sweep(c).rows.size() == 18 * 4);
    CHECK(run_sweep(partitions("list:1,4,9", {5, 9}, {1, 3})).rows.size() == 15);
}

TEST_CASE("reports are byte-identical across job counts")
{
    for (auto base : {partitions("powers:3", {1, 300}, {1, 12}), cohomology(3, {0, 600}, {0, 9}),
                      cohomology(2, {0, 300}, {1, 6})}) {
        base.jobs = 1;
        auto const one = run_sweep(base);
        base.jobs = 4;
        auto const four = run_sweep(base);
        CHECK(render(one, ReportFormat::csv) == render(four, ReportFormat::csv));
        CHECK(render(one, ReportFormat::json) == render(four, ReportFormat::json));
        CHECK(render(one, ReportFormat::json) == render(run_sweep(base), ReportFormat::json));
    }
}

TEST_CASE("CSV round trip")
{
    auto const r = run_sweep(partitions("list:1,5,30", {1, 60}, {1, 4}));
    auto const text = render(r, ReportFormat::csv);
    CHECK(text.rfind(std::string(csv_header) + "\n", 0) == 0);
    CHECK(text.find("\"list:1,5,30\"") != std::string::npos);

    std::istringstream in(text);
    CHECK(parse_csv(in) == r.rows);

    std::istringstream bad("kind,m\n");
    CHECK_THROWS_AS(parse_csv(bad), input_error);
}

TEST_CASE("JSON layout")
{
    auto const r = run_sweep(partitions("powers:4", {1, 50}, {1, 5}));
    auto const j = nlohmann::json::parse(render(r, ReportFormat::json));
    CHECK(j["config"]["mode"] == "partitions");
    CHECK(j["config"]["resolved_bound_rule"] == "star");
    CHECK(j["rows"].size() == 250);
    CHECK(j["summary"]["violations"].is_array());
    CHECK(j["summary"]["violations"].empty());
    auto const& row = j["rows"][0];
    for (auto key : {"kind", "p_or_set", "m", "n", "value", "bound", "holds", "sharp", "slack"})
        CHECK(row.contains(key));
}

TEST_CASE("forcing F(n) on binary partitions exposes violations")
{
    auto c = partitions("powers:2", {1, 20}, {1, 5});
    c.bound = BoundRule::star;
    auto const r = run_sweep(c);
    REQUIRE_FALSE(r.summary.violations.empty());
    // 2 = 2 = 1 + 1 already beats F(2) = 1
    auto const& first = r.summary.violations.front();
    CHECK(first.m == 2);
    CHECK(first.n == 2);
    CHECK(first.value == 2);
    CHECK(first.bound == 1);

    auto const it = std::find_if(r.summary.violations.begin(), r.summary.violations.end(),
                                 [](auto const& x) { return x.m == 4 && x.n == 3; });
    REQUIRE(it != r.summary.violations.end());
    CHECK(it->value == 3);
    CHECK(it->bound == 2);
    CHECK(it->slack == -1);
    check_row_consistency(r.rows);

    auto const j = nlohmann::json::parse(render(r, ReportFormat::json));
    CHECK(j["summary"]["violations"].size() == r.summary.violations.size());
    CHECK(j["summary"]["violations"][0]["slack"] == "-1");
    std::istringstream in(render(r, ReportFormat::csv));
    CHECK(parse_csv(in) == r.rows);
}

TEST_CASE("config validation")
{
    CHECK_THROWS_AS(run_sweep(partitions("powers:2", {5, 4}, {1, 2})), input_error);
    CHECK_THROWS_AS(run_sweep(partitions("powers:2", {0, 4}, {1, 2})), input_error);
    CHECK_THROWS_AS(run_sweep(partitions("powers:2", {1, 4}, {0, 2})), input_error);
    CHECK_THROWS_AS(run_sweep(partitions("", {1, 4}, {1, 2})), input_error);
    CHECK_THROWS_AS(run_sweep(partitions("powers:1", {1, 4}, {1, 2})), input_error);
    CHECK_THROWS_AS(run_sweep(cohomology(4, {0, 4}, {0, 2})), input_error);

    auto jobs0 = cohomology(3, {0, 4}, {0, 2});
    jobs0.jobs = 0;
    CHECK_THROWS_AS(run_sweep(jobs0), input_error);

    auto wrong_rule = cohomology(3, {0, 4}, {0, 2});
    wrong_rule.bound = BoundRule::star;
    CHECK_THROWS_AS(run_sweep(wrong_rule), input_error);

    // 1..20 fails both growth conditions, so no bound is selected automatically
    CHECK_THROWS_AS(run_sweep(partitions("list:1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20",
                                         {1, 20}, {1, 4})),
                    input_error);
    auto forced = partitions("list:1,2,3,4,5,6,7,8,9,10", {1, 20}, {1, 4});
    forced.bound = BoundRule::c23;
    CHECK_NOTHROW(run_sweep(forced));
}
