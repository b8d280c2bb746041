#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rpart/count.hpp"

namespace rpart {

/// A strictly increasing set A = {a_1 < a_2 < ...} of positive integers.
///
/// Three sources are supported, matching the descriptor grammar
///
///     powers:<q>            q^0, q^1, q^2, ...   (q >= 2, infinite)
///     list:<a1>,<a2>,...    explicit finite list
///     file:<path>           one decimal integer per line
///
/// Explicit and file-backed sets are validated when constructed: every
/// element must be positive and strictly larger than its predecessor.
class PartSet {
  public:
    enum class Kind { powers, list, file };

    static PartSet powers(std::uint64_t q);
    static PartSet list(std::vector<std::uint64_t> parts);
    static PartSet file(const std::string& path);

    /// Parses a descriptor; throws input_error on malformed text or content.
    static PartSet parse(const std::string& descriptor);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ != Kind::powers; }
    std::uint64_t base() const { return q_; }

    /// Canonical descriptor, e.g. "powers:2" or "list:1,3,7".
    std::string descriptor() const;

    /// Exactly the elements a <= bound, increasing.
    std::vector<std::uint64_t> parts_up_to(std::uint64_t bound) const;

    /// The first k elements (fewer if the set is finite and shorter).
    /// Arbitrary precision because q^k leaves 64 bits quickly.
    std::vector<Count> first(std::size_t k) const;

  private:
    PartSet() = default;

    Kind kind_ = Kind::powers;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> parts_;
    std::string path_;
};

} // namespace rpart
