#ifndef MMSC_ERROR_HPP_
#define MMSC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mmsc {

enum class ErrorCode {
  kParse,
  kUsage,
  kPrecondition,
  kUnsupportedShape,
  kMalformedBundle,
  kOverBudget,
  kInternal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

// Raises kInternal when a proof step that must hold does not.
inline void ensure(bool condition, const char* what) {
  if (!condition) fail(ErrorCode::kInternal, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::kPrecondition, what);
}

}  // namespace mmsc

#endif  // MMSC_ERROR_HPP_
