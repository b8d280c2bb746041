#include "rpart/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rpart/cohomology.hpp"
#include "rpart/fib.hpp"
#include "rpart/partition.hpp"
#include "rpart/sweep.hpp"
#include "rpart/verify.hpp"

namespace rpart::cli {

namespace {

struct Options {
    // fib
    std::int64_t fib_index = 0;
    // count / check-set / sweep partitions
    std::uint64_t m = 1, n = 1;
    std::string set;
    bool oracle = false;
    std::string condition = "star";
    std::size_t s_max = 20;
    // cohom
    std::uint64_t p = 3;
    bool total = false;
    bool list_solutions = false;
    std::size_t cap = default_listing_cap;
    // sweep
    std::string sweep_mode;
    std::uint64_t m_min = 0, m_max = 0, n_min = 0, n_max = 0;
    bool include_odd_m = false;
    std::string bound = "auto";
    std::string out_path = "-";
    std::string format = "csv";
    unsigned jobs = 1;
    // verify
    std::string suite = "all";
};

int run_fib(const Options& o, std::ostream& out)
{
    out << fib(o.fib_index) << '\n';
    return ok;
}

int run_count(const Options& o, std::ostream& out, std::ostream& err)
{
    auto const set = PartSet::parse(o.set);
    Count const dp = count_at_most(set, {o.m, o.n});
    out << dp << '\n';
    if (!o.oracle)
        return ok;
    Count const naive = count_at_most_naive(set, {o.m, o.n});
    out << naive << '\n';
    if (dp != naive) {
        err << "oracle mismatch: dp " << dp << " vs naive " << naive << '\n';
        return oracle_mismatch;
    }
    return ok;
}

int run_check_set(const Options& o, std::ostream& out)
{
    auto const set = PartSet::parse(o.set);
    auto const rep = check_condition(set, parse_condition(o.condition), o.s_max);
    if (rep.passed())
        out << "pass " << to_string(rep.condition) << " up to s=" << rep.s_checked;
    else
        out << "fail " << to_string(rep.condition) << " at s=" << rep.failure->s
            << " lhs=" << rep.failure->lhs << " rhs=" << rep.failure->rhs;
    if (rep.truncated)
        out << " (set exhausted before s=" << rep.s_requested << ")";
    out << '\n';
    return ok;
}

nlohmann::ordered_json solutions_json(const std::vector<SolutionVector>& sols)
{
    auto arr = nlohmann::ordered_json::array();
    for (auto const& s : sols) {
        nlohmann::ordered_json j;
        j["a"] = s.a;
        if (!s.b.empty()) {
            std::vector<int> bits(s.b.begin(), s.b.end());
            j["b"] = bits;
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

int run_cohom(const Options& o, std::ostream& out, std::ostream& err)
{
    CohomParams const params{o.p, o.m, o.n};
    validate(params);
    if (o.m % 2 != 0)
        err << "note: m is odd, so m/2+1 is not an integer; dimension reported as 0\n";
    if (o.total) {
        out << total_dim(params) << '\n';
        return ok;
    }
    auto const res = dim_weyl_cohomology(params, o.list_solutions, o.cap);
    out << res.dim << '\n';
    if (res.listed) {
        out << solutions_json(res.solutions).dump() << '\n';
        if (res.listing_truncated)
            err << "note: listing truncated at " << o.cap << " solutions\n";
    }
    return ok;
}

int run_sweep_cmd(const Options& o, CLI::App& sub, std::ostream& out, std::ostream& err)
{
    SweepConfig c;
    if (o.sweep_mode == "partitions") {
        if (sub.count("--p") || o.total || o.include_odd_m)
            throw input_error("--p, --total and --include-odd-m apply to cohom sweeps only");
        c.mode = SweepMode::partitions;
        c.set = o.set;
    } else {
        if (sub.count("--set"))
            throw input_error("--set applies to partitions sweeps only");
        c.mode = SweepMode::cohomology;
        c.p = o.p;
        c.quantity = o.total ? CohomQuantity::total : CohomQuantity::dim;
        c.include_odd_m = o.include_odd_m;
    }
    c.m = {o.m_min, o.m_max};
    c.n = {o.n_min, o.n_max};
    c.bound = parse_bound_rule(o.bound);
    c.jobs = o.jobs;
    auto const format = parse_format(o.format);

    auto const report = run_sweep(c);
    if (o.out_path == "-") {
        emit(report, format, out);
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open '" + o.out_path + "' for writing");
        emit(report, format, f);
        f.flush();
        if (!f)
            throw std::runtime_error("failed writing '" + o.out_path + "'");
        out << "rows " << report.rows.size() << ", sharp " << report.summary.sharp_cells
            << ", violations " << report.summary.violations.size() << '\n';
    }
    for (auto const& v : report.summary.violations)
        err << "violation: " << v.kind << ' ' << v.p_or_set << " m=" << v.m << " n=" << v.n
            << " value=" << v.value << " bound=" << v.bound << '\n';
    return report.summary.violations.empty() ? ok : bound_violation;
}

int run_verify(const Options& o, std::ostream& out)
{
    auto const lines = run_suite(parse_suite(o.suite), o.jobs);
    for (auto const& l : lines)
        out << to_string(l.status) << "  " << l.name << ": " << l.detail << '\n';
    return exit_code_for(lines);
}

} // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Restricted partition counts, SL2 Weyl-module cohomology dimensions and "
                 "their Fibonacci bounds"};
    app.name(argv.empty() ? "rpart" : argv.front());
    app.require_subcommand(1);
    Options o;

    auto* fib_cmd = app.add_subcommand("fib", "Print F(i); F(i) = 0 for i <= 0");
    fib_cmd->add_option("--n", o.fib_index, "index i")->required();

    auto* count_cmd = app.add_subcommand("count", "Partitions of m into at most n parts from a set");
    count_cmd->add_option("--m", o.m, "number to partition (>= 1)")->required();
    count_cmd->add_option("--n", o.n, "maximum number of parts (>= 1)")->required();
    count_cmd->add_option("--set", o.set, "powers:<q> | list:<a1>,<a2>,... | file:<path>")
        ->required();
    count_cmd->add_flag("--oracle", o.oracle, "also run the brute-force counter (m <= 200)");

    auto* check_cmd = app.add_subcommand("check-set", "Check a growth condition on a part set");
    check_cmd->add_option("--set", o.set, "set descriptor")->required();
    check_cmd->add_option("--condition", o.condition, "star | c23")
        ->check(CLI::IsMember({"star", "c23"}));
    check_cmd->add_option("--s-max", o.s_max, "largest index s to verify (>= 2)");

    auto* cohom_cmd = app.add_subcommand("cohom", "dim H^n(SL2, V(m)) in characteristic p");
    cohom_cmd->add_option("--p", o.p, "prime characteristic")->required();
    cohom_cmd->add_option("--m", o.m, "highest weight (>= 0)")->required();
    cohom_cmd->add_option("--n", o.n, "cohomological degree (>= 0)")->required();
    auto* total_flag = cohom_cmd->add_flag("--total", o.total, "total dimension up to degree n");
    auto* list_flag =
        cohom_cmd->add_flag("--list-solutions", o.list_solutions, "print solutions as JSON");
    cohom_cmd->add_option("--cap", o.cap, "maximum number of listed solutions");
    total_flag->excludes(list_flag);

    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a grid against its Fibonacci bound");
    sweep_cmd->add_option("mode", o.sweep_mode, "partitions | cohom")
        ->required()
        ->check(CLI::IsMember({"partitions", "cohom"}));
    sweep_cmd->add_option("--m-min", o.m_min, "smallest m")->required();
    sweep_cmd->add_option("--m-max", o.m_max, "largest m")->required();
    sweep_cmd->add_option("--n-min", o.n_min, "smallest n")->required();
    sweep_cmd->add_option("--n-max", o.n_max, "largest n")->required();
    sweep_cmd->add_option("--set", o.set, "partitions: set descriptor");
    sweep_cmd->add_option("--p", o.p, "cohom: prime characteristic");
    sweep_cmd->add_flag("--total", o.total, "cohom: total dimension instead of dim H^n");
    sweep_cmd->add_flag("--include-odd-m", o.include_odd_m, "cohom: also emit odd m rows");
    sweep_cmd->add_option("--bound", o.bound, "auto | star | c23 | odd-p | p2");
    sweep_cmd->add_option("--out", o.out_path, "output path, '-' for stdout");
    sweep_cmd->add_option("--format", o.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Run the built-in verification grids");
    verify_cmd->add_option("--suite", o.suite, "partitions | cohom | lemma | all")
        ->check(CLI::IsMember({"partitions", "cohom", "lemma", "all"}));
    verify_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        if (!args.empty())
            args.pop_back(); // program name
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage_error;
    }

    try {
        if (*fib_cmd)
            return run_fib(o, out);
        if (*count_cmd)
            return run_count(o, out, err);
        if (*check_cmd)
            return run_check_set(o, out);
        if (*cohom_cmd)
            return run_cohom(o, out, err);
        if (*sweep_cmd)
            return run_sweep_cmd(o, *sweep_cmd, out, err);
        if (*verify_cmd)
            return run_verify(o, out);
    } catch (const rpart::oracle_mismatch& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::oracle_mismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace rpart::cli
