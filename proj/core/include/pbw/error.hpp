#ifndef PBW_ERROR_HPP
#define PBW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pbw {

// Error codes surfaced by the CLI as "error: <Code>: <detail>".
enum class ErrorCode {
  IndexOutOfRange,
  DuplicateVertex,
  SizeMismatch,
  CrossingEdge,
  NotInIX,
  SizeTooLarge,
  AsymmetricRule,
  NegativeIndex,
  OverlappingEdges,
  UnvalidatedDescriptor,
  NotInF,
  NotInFL,
  DetectionFailed,
  PreconditionViolated,
  WrongAmbientSize,
  NotACycle,
  NotATrail,
  UnsupportedShape,
  CapExceeded,
  CorruptCache,
  PairNotCovered,
  IndexUnsupported,
  Unsupported,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode c);

class PbwError : public std::runtime_error {
 public:
  PbwError(ErrorCode code, std::string const& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pbw

#endif  // PBW_ERROR_HPP
