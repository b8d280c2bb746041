#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rpart/cohomology.hpp"
#include "rpart/count.hpp"
#include "rpart/verdict.hpp"

namespace rpart {

enum class SweepMode { partitions, cohomology };
enum class CohomQuantity { dim, total };
enum class ReportFormat { csv, json };

/// Which Fibonacci bound each cell is compared against.
///   automatic  partitions: star if the set passes it, else c23;
///              cohomology: odd_p or p2 from the prime
///   star       F(n)
///   c23        F(2n-1)
///   odd_p      dim F(n+1), total F(n+2)
///   p2         dim F(2n-1), total F(2n)
enum class BoundRule { automatic, star, c23, odd_p, p2 };

const char* to_string(SweepMode m);
const char* to_string(BoundRule r);
BoundRule parse_bound_rule(const std::string& text);
ReportFormat parse_format(const std::string& text);

struct SweepConfig {
    SweepMode mode = SweepMode::partitions;
    Range m{1, 1};
    Range n{1, 1};
    std::string set;          ///< partitions: set descriptor
    std::uint64_t p = 3;      ///< cohomology: characteristic
    CohomQuantity quantity = CohomQuantity::dim;
    bool include_odd_m = false;
    BoundRule bound = BoundRule::automatic;
    unsigned jobs = 1;
};

/// Throws input_error on empty ranges, jobs == 0, a missing set, a
/// non-prime p, m or n below 1 in partition mode, or a bound rule that does
/// not belong to the mode.
void validate(const SweepConfig& config);

struct ExtremeRow {
    std::uint64_t n = 0;
    Count max_value;
    std::uint64_t argmax_m = 0; ///< smallest m attaining max_value
    Count bound;
    bool sharp = false;         ///< max_value == bound
};

struct SweepSummary {
    std::vector<ExtremeRow> per_n;
    std::size_t sharp_cells = 0;
    std::vector<BoundVerdict> violations;
};

struct SweepReport {
    SweepConfig config;
    BoundRule resolved_bound = BoundRule::automatic;
    std::vector<BoundVerdict> rows; ///< ordered by (m, n)
    SweepSummary summary;
};

/// Evaluates every grid cell. Work is split by m across config.jobs workers,
/// each with its own memo cache; the row order never depends on jobs.
SweepReport run_sweep(const SweepConfig& config);

/// Per-n maxima over the rows. Throws input_error on an empty row list.
std::vector<ExtremeRow> find_extremes(const std::vector<BoundVerdict>& rows);
std::vector<ExtremeRow> find_extremes(const SweepReport& report);

/// Recomputes per-n maxima, sharp count and the violation list from rows.
SweepSummary summarize(const std::vector<BoundVerdict>& rows);

inline constexpr const char* csv_header = "kind,p_or_set,m,n,value,bound,holds,sharp,slack";

void emit(const SweepReport& report, ReportFormat format, std::ostream& out);
void emit_csv(const std::vector<BoundVerdict>& rows, std::ostream& out);
void emit_json(const SweepReport& report, std::ostream& out);

/// Reads rows written by emit_csv. Throws input_error on a bad header or row.
std::vector<BoundVerdict> parse_csv(std::istream& in);

} // namespace rpart
