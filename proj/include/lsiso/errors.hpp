#pragma once

#include <stdexcept>
#include <string>

namespace lsiso {

// Malformed textual input (cycles, partitions, tabloids, group files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated precondition: degree mismatch, non-subgroup, bad index, ...
struct DomainError : std::logic_error {
  using std::logic_error::logic_error;
};

// A size guard was exceeded.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact computation produced a non-integral count.
struct IntegralityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lsiso
