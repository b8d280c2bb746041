#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rpart/part_set.hpp"

namespace rpart {

enum class Suite { partitions, cohom, lemma, all };

Suite parse_suite(const std::string& text);

enum class CheckStatus {
    pass,
    violation, ///< a bound or exact value did not hold
    mismatch,  ///< a counter disagreed with its oracle
    note,      ///< informational; never affects the exit code
};

const char* to_string(CheckStatus s);

struct CheckLine {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

/// Runs the fixed verification grids of a suite. Grid cells are spread over
/// `jobs` workers where that helps; results do not depend on it.
std::vector<CheckLine> run_suite(Suite suite, unsigned jobs = 1);

/// 3 if any oracle mismatch, else 2 if any violation, else 0.
int exit_code_for(const std::vector<CheckLine>& lines);

/// Deterministic random strictly increasing sets with a_1 in [1, 5] and
/// elements reaching past `cover`.
std::vector<PartSet> random_part_sets(std::size_t count, std::uint64_t seed,
                                      std::uint64_t cover);

/// Solutions of dim H^4(SL_2, V(286)) at p = 2 as (coefficient, power)
/// pairs, i.e. terms coefficient * 2^power summing to 144.
std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> known_p2_solutions_286();

} // namespace rpart
