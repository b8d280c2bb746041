#pragma once

#include <cstdint>
#include <string>

#include "rpart/count.hpp"

namespace rpart {

/// A computed value compared against its Fibonacci bound at one grid cell.
struct BoundVerdict {
    std::string kind;      ///< "partition", "dim" or "total"
    std::string p_or_set;  ///< prime (decimal) or set descriptor
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    Count value;
    Count bound;
    bool holds = false;    ///< value <= bound
    bool sharp = false;    ///< value == bound
    Count slack;           ///< bound - value; negative on a violation

    bool operator==(const BoundVerdict&) const = default;
};

inline BoundVerdict make_verdict(std::string kind, std::string p_or_set, std::uint64_t m,
                                 std::uint64_t n, Count value, Count bound)
{
    BoundVerdict v;
    v.kind = std::move(kind);
    v.p_or_set = std::move(p_or_set);
    v.m = m;
    v.n = n;
    v.holds = value <= bound;
    v.sharp = value == bound;
    v.slack = bound - value;
    v.value = std::move(value);
    v.bound = std::move(bound);
    return v;
}

} // namespace rpart
