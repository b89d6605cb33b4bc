#pragma once

#include <stdexcept>
#include <string>

namespace orthostab {

enum class ErrorKind {
  InvalidScalar,
  DivisionByZero,
  ShapeError,
  SingularMatrix,
  NotInGroup,
  ParityError,
  InvalidSeed,
  InvalidBlock,
  NotNilpotent,
  BackendUnavailable,
  NotGeneric,
  NotUnitary,
  SamplingFailed,
  InvalidGenerator,
  InvalidSpec,
  InvalidInput,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidScalar: return "InvalidScalar";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::InvalidSeed: return "InvalidSeed";
    case ErrorKind::InvalidBlock: return "InvalidBlock";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::BackendUnavailable: return "BackendUnavailable";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::SamplingFailed: return "SamplingFailed";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(std::move(detail)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace orthostab
