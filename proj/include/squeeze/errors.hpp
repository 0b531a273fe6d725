#pragma once

#include <stdexcept>
#include <string>

namespace squeeze {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when Im(Phi) >= 0: the eigenvalue problem has no normalizable solution.
struct NonNormalizable : Error {
  using Error::Error;
};

struct WrongLevel : Error {
  using Error::Error;
};

struct GridNotConverged : Error {
  using Error::Error;
};

struct DegenerateFrame : Error {
  using Error::Error;
};

struct OffGridShift : Error {
  using Error::Error;
};

struct CurlMismatch : Error {
  using Error::Error;
};

struct UnsupportedAngle : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct DomainTooSmall : Error {
  using Error::Error;
};

struct GridNotSymmetric : Error {
  using Error::Error;
};

}  // namespace squeeze
