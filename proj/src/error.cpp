#include "mmsc/error.hpp"

namespace mmsc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kUsage: return "usage";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kUnsupportedShape: return "unsupported-shape";
    case ErrorCode::kMalformedBundle: return "malformed-bundle";
    case ErrorCode::kOverBudget: return "over-budget";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mmsc
