// Error codes and the exception type shared by all npc2 modules.
#pragma once

#include <stdexcept>
#include <string>

namespace npc2 {

enum class ErrorCode {
  MissingFace,
  DuplicateSimplex,
  DegenerateSimplex,
  UnknownSimplex,
  UnknownVertex,
  ParentMismatch,
  DegenerateTriangle,
  EmptyComponent,
  NotFree,
  InvalidGluing,
  UnknownGenerator,
  BadParams,
  ParseError,
  ValidationError,
  Precondition,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace npc2
