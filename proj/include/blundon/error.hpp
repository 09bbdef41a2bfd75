#ifndef BLUNDON_ERROR_HPP
#define BLUNDON_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace blundon {

enum class ErrorKind {
  DegenerateTriangle,
  PointAtInfinity,
  NonPositiveWeights,
  EquilateralDegenerate,
  UndefinedAngle,
  DegenerateVertexAngle,
  InvalidCenterSpec,
  InexactValue,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::PointAtInfinity: return "PointAtInfinity";
    case ErrorKind::NonPositiveWeights: return "NonPositiveWeights";
    case ErrorKind::EquilateralDegenerate: return "EquilateralDegenerate";
    case ErrorKind::UndefinedAngle: return "UndefinedAngle";
    case ErrorKind::DegenerateVertexAngle: return "DegenerateVertexAngle";
    case ErrorKind::InvalidCenterSpec: return "InvalidCenterSpec";
    case ErrorKind::InexactValue: return "InexactValue";
  }
  return "Unknown";
}

/// Domain failure raised by the geometry routines. The kind is what callers
/// (and the CLI exit-code mapping) dispatch on; the message is for humans.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace blundon

#endif  // BLUNDON_ERROR_HPP
