#include "azvd/error.hpp"

namespace azvd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax-error";
    case ErrorCode::kSchema: return "schema-error";
    case ErrorCode::kDuplicateRule: return "duplicate-rule";
    case ErrorCode::kUnknownRule: return "unknown-rule";
    case ErrorCode::kInvalidExpression: return "invalid-expression";
    case ErrorCode::kUnknownLayout: return "unknown-layout";
    case ErrorCode::kUnknownSlot: return "unknown-slot";
    case ErrorCode::kFillMismatch: return "fill-mismatch";
    case ErrorCode::kUnknownTemplate: return "unknown-template";
    case ErrorCode::kMissingAsset: return "missing-asset";
    case ErrorCode::kDanglingReference: return "dangling-reference";
    case ErrorCode::kIncompleteDiagram: return "incomplete-diagram";
    case ErrorCode::kNoAntecedent: return "no-antecedent";
    case ErrorCode::kIo: return "io-error";
  }
  return "unknown";
}

}  // namespace azvd
