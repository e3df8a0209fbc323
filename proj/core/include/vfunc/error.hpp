#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vfunc {

enum class ErrorCode {
  InvalidArgument,
  DegenerateSimplex,
  NotGeneralPosition,
  NonConvexQuad,
  NotInteriorEdge,
  CapExceeded,
  CollinearImage,
  InvalidRegion,
  InvalidTriangulation,
  NotInteriorVertex,
  ConstructionFailed,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace vfunc
