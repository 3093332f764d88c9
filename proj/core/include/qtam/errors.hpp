#pragma once

#include <stdexcept>
#include <string>

namespace qtam {

/// A state vector (or similar allocation) would meet or exceed the
/// configured memory budget. Deliberately distinct from bad_alloc: the
/// limit is a policy choice, not an allocator failure.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A run configuration or circuit document is structurally valid JSON but
/// semantically unusable (missing fields, inconsistent sizes, bad ranges).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wire refinement failed to converge or to restore connectivity.
class RefinementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qtam
