#pragma once

#include <stdexcept>

namespace homzero {

/// Input violates a documented precondition (zero polynomial, composite
/// modulus, non-bijective image table, ...).
class degenerate_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented resource cap was exceeded (permutation degree, group order,
/// enumeration size). The caller asked for more than this tool supports.
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A decision procedure exhausted its budget without reaching a verdict.
/// The message carries the partial data gathered before giving up.
class inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homzero
