#pragma once

#include <stdexcept>
#include <string>

namespace aemod {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A configuration or decision set violates a documented invariant.
/// The message names the offending field.
class validation_error : public error {
 public:
  explicit validation_error(const std::string& what) : error(what) {}
};

/// The zone cannot be stabilized for any positive response-rate margin
/// (fleet arrival rate does not exceed total customer demand).
class infeasible_zone_error : public error {
 public:
  explicit infeasible_zone_error(const std::string& what) : error(what) {}
};

/// No decision set satisfies all constraints; the message names the
/// binding constraint.
class no_feasible_point_error : public error {
 public:
  explicit no_feasible_point_error(const std::string& what) : error(what) {}
};

/// An operation that requires positive per-class margins was called on an
/// unstable configuration; the message names the offending class.
class instability_error : public error {
 public:
  explicit instability_error(const std::string& what) : error(what) {}
};

/// Requested candidate enumeration exceeds the configured cap.
class enumeration_error : public error {
 public:
  explicit enumeration_error(const std::string& what) : error(what) {}
};

}  // namespace aemod
