#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace parcut {

using NodeID = std::uint32_t;
using EdgeID = std::uint64_t;
using EdgeWeight = std::uint64_t;

inline constexpr NodeID kInvalidNode = std::numeric_limits<NodeID>::max();
inline constexpr EdgeWeight kMaxWeight = std::numeric_limits<EdgeWeight>::max();

// Malformed input: bad ids, unreadable files, empty graphs where a cut is required.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (duplicate insert, decrease-key, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class WeightOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline EdgeWeight checked_add(EdgeWeight a, EdgeWeight b) {
  EdgeWeight sum;
  if (__builtin_add_overflow(a, b, &sum)) {
    throw WeightOverflow("edge weight sum overflows 64 bits");
  }
  return sum;
}

}  // namespace parcut
