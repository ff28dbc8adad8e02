#pragma once

#include <stdexcept>
#include <string>

namespace smbraid {

/// Base for every error raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (words, scalars, selectors, matrix files).
struct parse_error : error {
  using error::error;
};

/// A mathematical precondition does not hold (non-unit inversion, index out
/// of range, failed relation check, ...).
struct domain_error : error {
  using error::error;
};

/// Operands live in different algebra backends or group models.
struct backend_mismatch : error {
  using error::error;
};

}  // namespace smbraid
