#pragma once

#include <stdexcept>
#include <string>

namespace omlat {

enum class ErrorCode {
  NotAPoset,
  NotALattice,
  BadBounds,
  NotAnOrtholattice,
  NotABooleanBlock,
  SizeLimit,
  BlockMismatch,
  BlockCount,
  CoconeMismatch,
  BadSpec,
  BadInput,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::BadBounds: return "BadBounds";
    case ErrorCode::NotAnOrtholattice: return "NotAnOrtholattice";
    case ErrorCode::NotABooleanBlock: return "NotABooleanBlock";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::BlockMismatch: return "BlockMismatch";
    case ErrorCode::BlockCount: return "BlockCount";
    case ErrorCode::CoconeMismatch: return "CoconeMismatch";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace omlat
