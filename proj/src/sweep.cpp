#include "rpart/sweep.hpp"

#include <algorithm>
#include <exception>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rpart/fib.hpp"
#include "rpart/part_set.hpp"
#include "rpart/partition.hpp"

namespace rpart {

const char* to_string(SweepMode m)
{
    return m == SweepMode::partitions ? "partitions" : "cohomology";
}

const char* to_string(BoundRule r)
{
    switch (r) {
    case BoundRule::automatic: return "auto";
    case BoundRule::star: return "star";
    case BoundRule::c23: return "c23";
    case BoundRule::odd_p: return "odd-p";
    case BoundRule::p2: return "p2";
    }
    return "?";
}

BoundRule parse_bound_rule(const std::string& text)
{
    for (auto r : {BoundRule::automatic, BoundRule::star, BoundRule::c23, BoundRule::odd_p,
                   BoundRule::p2})
        if (text == to_string(r))
            return r;
    throw input_error("bound rule must be auto, star, c23, odd-p or p2; got '" + text + "'");
}

ReportFormat parse_format(const std::string& text)
{
    if (text == "csv")
        return ReportFormat::csv;
    if (text == "json")
        return ReportFormat::json;
    throw input_error("format must be csv or json; got '" + text + "'");
}

void validate(const SweepConfig& c)
{
    if (c.m.lo > c.m.hi)
        throw input_error("empty m range");
    if (c.n.lo > c.n.hi)
        throw input_error("empty n range");
    if (c.jobs < 1)
        throw input_error("jobs must be >= 1");

    if (c.mode == SweepMode::partitions) {
        if (c.set.empty())
            throw input_error("partition sweep needs a set descriptor");
        if (c.m.lo < 1 || c.n.lo < 1)
            throw input_error("partition sweep needs m >= 1 and n >= 1");
        if (c.bound == BoundRule::odd_p || c.bound == BoundRule::p2)
            throw input_error(std::string("bound rule '") + to_string(c.bound) +
                              "' applies to cohomology sweeps only");
        if (c.quantity != CohomQuantity::dim || c.include_odd_m)
            throw input_error("--total and --include-odd-m apply to cohomology sweeps only");
        return;
    }
    if (!is_prime(c.p))
        throw input_error("p must be prime, got " + std::to_string(c.p));
    if (c.bound == BoundRule::star || c.bound == BoundRule::c23)
        throw input_error(std::string("bound rule '") + to_string(c.bound) +
                          "' applies to partition sweeps only");
}

namespace {

BoundRule resolve_bound(const SweepConfig& c, const PartSet* set)
{
    if (c.bound != BoundRule::automatic)
        return c.bound;
    if (c.mode == SweepMode::cohomology)
        return c.p == 2 ? BoundRule::p2 : BoundRule::odd_p;

    // P(m, n, A) only sees parts <= m, so checking the conditions on
    // A truncated at m.hi covers the whole grid.
    auto const r = set->parts_up_to(c.m.hi).size();
    auto const cond = select_partition_condition(*set, std::max<std::size_t>(2, r));
    if (!cond)
        throw input_error("no Fibonacci bound applies to " + set->descriptor() +
                          " (fails both conditions); pass --bound star|c23 to force one");
    return *cond == Condition::star ? BoundRule::star : BoundRule::c23;
}

Count cell_bound(BoundRule rule, CohomQuantity q, std::uint64_t n)
{
    auto const k = static_cast<std::int64_t>(n);
    switch (rule) {
    case BoundRule::star: return fib(k);
    case BoundRule::c23: return fib(2 * k - 1);
    case BoundRule::odd_p: return q == CohomQuantity::dim ? fib(k + 1) : fib(k + 2);
    case BoundRule::p2: return q == CohomQuantity::dim ? fib(2 * k - 1) : fib(2 * k);
    case BoundRule::automatic: break;
    }
    throw std::logic_error("unresolved bound rule");
}

std::vector<std::uint64_t> grid_m(const SweepConfig& c)
{
    std::vector<std::uint64_t> ms;
    for (std::uint64_t m = c.m.lo;; ++m) {
        if (c.mode == SweepMode::partitions || c.include_odd_m || m % 2 == 0)
            ms.push_back(m);
        if (m == c.m.hi)
            break;
    }
    return ms;
}

} // namespace

SweepReport run_sweep(const SweepConfig& config)
{
    validate(config);

    std::optional<PartSet> set;
    if (config.mode == SweepMode::partitions)
        set = PartSet::parse(config.set);

    SweepReport report;
    report.config = config;
    report.resolved_bound = resolve_bound(config, set ? &*set : nullptr);

    auto const ms = grid_m(config);
    std::vector<std::vector<BoundVerdict>> slots(ms.size());
    std::string const tag =
        config.mode == SweepMode::partitions ? set->descriptor() : std::to_string(config.p);
    char const* const kind = config.mode == SweepMode::partitions ? "partition"
                             : config.quantity == CohomQuantity::dim ? "dim"
                                                                     : "total";

    auto worker = [&](std::size_t first, std::size_t stride) {
        std::optional<PartitionCounter> pc;
        std::optional<CohomologySolver> cs;
        if (set)
            pc.emplace(*set, true);
        else
            cs.emplace(config.p);

        for (std::size_t i = first; i < ms.size(); i += stride) {
            auto const m = ms[i];
            auto& rows = slots[i];
            for (std::uint64_t n = config.n.lo;; ++n) {
                Count value;
                if (pc)
                    value = pc->count({m, n});
                else if (config.quantity == CohomQuantity::dim)
                    value = dim_weyl_cohomology(*cs, m, n);
                else
                    value = total_dim(*cs, m, n);
                rows.push_back(make_verdict(kind, tag, m, n, std::move(value),
                                            cell_bound(report.resolved_bound, config.quantity, n)));
                if (n == config.n.hi)
                    break;
            }
        }
    };

    auto const jobs = std::min<std::size_t>(config.jobs, std::max<std::size_t>(ms.size(), 1));
    if (jobs <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::exception_ptr> errors(jobs);
        {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < jobs; ++w)
                pool.emplace_back([&, w] {
                    try {
                        worker(w, jobs);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
        }
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    for (auto& s : slots)
        for (auto& row : s)
            report.rows.push_back(std::move(row));
    report.summary = summarize(report.rows);
    return report;
}

std::vector<ExtremeRow> find_extremes(const std::vector<BoundVerdict>& rows)
{
    if (rows.empty())
        throw input_error("cannot take extremes of an empty report");

    std::map<std::uint64_t, ExtremeRow> by_n;
    for (auto const& r : rows) {
        auto [it, fresh] = by_n.try_emplace(r.n);
        auto& e = it->second;
        if (fresh || r.value > e.max_value || (r.value == e.max_value && r.m < e.argmax_m)) {
            e.n = r.n;
            e.max_value = r.value;
            e.argmax_m = r.m;
            e.bound = r.bound;
        }
    }
    std::vector<ExtremeRow> out;
    for (auto& [n, e] : by_n) {
        e.sharp = e.max_value == e.bound;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<ExtremeRow> find_extremes(const SweepReport& report)
{
    return find_extremes(report.rows);
}

SweepSummary summarize(const std::vector<BoundVerdict>& rows)
{
    SweepSummary s;
    if (!rows.empty())
        s.per_n = find_extremes(rows);
    for (auto const& r : rows) {
        if (r.sharp)
            ++s.sharp_cells;
        if (!r.holds)
            s.violations.push_back(r);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char const c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted)
        throw input_error("unterminated quote in CSV line: " + line);
    return fields;
}

bool parse_bool(const std::string& s)
{
    if (s == "true")
        return true;
    if (s == "false")
        return false;
    throw input_error("expected true or false, got '" + s + "'");
}

Count parse_signed(const std::string& s)
{
    if (!s.empty() && s[0] == '-')
        return -parse_count(s.substr(1));
    return parse_count(s);
}

using ojson = nlohmann::ordered_json;

ojson row_json(const BoundVerdict& r)
{
    ojson j;
    j["kind"] = r.kind;
    j["p_or_set"] = r.p_or_set;
    j["m"] = r.m;
    j["n"] = r.n;
    // Counts can exceed 64 bits; keep them exact as decimal strings.
    j["value"] = r.value.str();
    j["bound"] = r.bound.str();
    j["holds"] = r.holds;
    j["sharp"] = r.sharp;
    j["slack"] = r.slack.str();
    return j;
}

} // namespace

void emit_csv(const std::vector<BoundVerdict>& rows, std::ostream& out)
{
    out << csv_header << '\n';
    for (auto const& r : rows)
        out << r.kind << ',' << csv_field(r.p_or_set) << ',' << r.m << ',' << r.n << ','
            << r.value.str() << ',' << r.bound.str() << ',' << (r.holds ? "true" : "false")
            << ',' << (r.sharp ? "true" : "false") << ',' << r.slack.str() << '\n';
}

void emit_json(const SweepReport& report, std::ostream& out)
{
    auto const& c = report.config;
    ojson cfg;
    cfg["mode"] = to_string(c.mode);
    if (c.mode == SweepMode::partitions) {
        cfg["set"] = c.set;
    } else {
        cfg["p"] = c.p;
        cfg["quantity"] = c.quantity == CohomQuantity::dim ? "dim" : "total";
        cfg["include_odd_m"] = c.include_odd_m;
        cfg["odd_m_convention"] = "odd m has no integral target m/2+1; dimension reported as 0";
    }
    cfg["m_min"] = c.m.lo;
    cfg["m_max"] = c.m.hi;
    cfg["n_min"] = c.n.lo;
    cfg["n_max"] = c.n.hi;
    cfg["bound_rule"] = to_string(c.bound);
    cfg["resolved_bound_rule"] = to_string(report.resolved_bound);

    ojson rows = ojson::array();
    for (auto const& r : report.rows)
        rows.push_back(row_json(r));

    ojson per_n = ojson::array();
    for (auto const& e : report.summary.per_n) {
        ojson j;
        j["n"] = e.n;
        j["max_value"] = e.max_value.str();
        j["argmax_m"] = e.argmax_m;
        j["bound"] = e.bound.str();
        j["sharp"] = e.sharp;
        per_n.push_back(std::move(j));
    }
    ojson violations = ojson::array();
    for (auto const& r : report.summary.violations)
        violations.push_back(row_json(r));

    ojson doc;
    doc["config"] = std::move(cfg);
    doc["rows"] = std::move(rows);
    doc["summary"]["per_n"] = std::move(per_n);
    doc["summary"]["sharp_cells"] = report.summary.sharp_cells;
    doc["summary"]["violations"] = std::move(violations);
    out << doc.dump(2) << '\n';
}

void emit(const SweepReport& report, ReportFormat format, std::ostream& out)
{
    if (format == ReportFormat::csv)
        emit_csv(report.rows, out);
    else
        emit_json(report, out);
}

std::vector<BoundVerdict> parse_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != csv_header)
        throw input_error(std::string("CSV header must be '") + csv_header + "'");

    std::vector<BoundVerdict> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto const f = split_csv_line(line);
        if (f.size() != 9)
            throw input_error("CSV row needs 9 fields: " + line);
        BoundVerdict r;
        r.kind = f[0];
        r.p_or_set = f[1];
        r.m = static_cast<std::uint64_t>(parse_count(f[2]));
        r.n = static_cast<std::uint64_t>(parse_count(f[3]));
        r.value = parse_count(f[4]);
        r.bound = parse_count(f[5]);
        r.holds = parse_bool(f[6]);
        r.sharp = parse_bool(f[7]);
        r.slack = parse_signed(f[8]);
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace rpart
