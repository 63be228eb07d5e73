// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace braidmono {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotACoincidencePoint : Error {
  using Error::Error;
};
struct BadEps : Error {
  using Error::Error;
};
struct BadSite : Error {
  using Error::Error;
};
struct PathThroughCoincidence : Error {
  using Error::Error;
};
struct NonGenericProjection : Error {
  using Error::Error;
};
struct NoGenericProjection : Error {
  using Error::Error;
};
struct IndexMismatch : Error {
  using Error::Error;
};
struct DegenerateBlock : Error {
  using Error::Error;
};
struct OverlappingHulls : Error {
  using Error::Error;
};
struct LoopConstructionFailed : Error {
  using Error::Error;
};
struct PoleAtS : Error {
  using Error::Error;
};
struct UnknownFormat : Error {
  using Error::Error;
};
// Raised when a free-group image exceeds the configured length cap.
struct WordLengthExceeded : Error {
  using Error::Error;
};

}  // namespace braidmono
