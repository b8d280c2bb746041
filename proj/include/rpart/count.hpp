#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rpart {

/// Exact solution count. Never negative where it represents a count; signed
/// so that bound slacks can be expressed in the same type.
using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

/// Parses a nonnegative decimal integer; rejects signs, blanks and garbage.
Count parse_count(const std::string& text);

/// Bad user input (flags, descriptors, out-of-domain parameters).
class input_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The DP path and its independent oracle disagreed.
class oracle_mismatch : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace rpart
