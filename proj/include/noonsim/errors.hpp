#pragma once

#include <stdexcept>

namespace noonsim {

/// Invalid user-facing configuration: bad file contents, bad truncation,
/// out-of-domain protocol parameters.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A runtime physics check failed: norm drift, truncation leakage,
/// conservation violation.
struct physics_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Internal consistency violation (non-Hermitian assembly, bad frame,
/// oracle support violation). Indicates a bug, not bad input.
struct integrity_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace noonsim
