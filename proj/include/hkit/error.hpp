#ifndef HKIT_ERROR_HPP
#define HKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hkit {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct UnboundedPolytope : Error {
  explicit UnboundedPolytope(const std::string& msg) : Error(msg) {}
};

struct EmptyPolytope : Error {
  explicit EmptyPolytope(const std::string& msg) : Error(msg) {}
};

struct InvalidBall : Error {
  explicit InvalidBall(const std::string& msg) : Error(msg) {}
};

// Desk-scale enumeration limits were exceeded (CLI maps this to exit code 3).
struct ScaleGuardExceeded : Error {
  explicit ScaleGuardExceeded(const std::string& msg) : Error(msg) {}
};

// Malformed files or command lines (CLI maps this to exit code 2).
struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// A generator self-check failed after the allowed retries.
struct ConstructionError : Error {
  explicit ConstructionError(const std::string& msg) : Error(msg) {}
};

}  // namespace hkit

#endif
