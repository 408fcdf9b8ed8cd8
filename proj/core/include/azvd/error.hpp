#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace azvd {

/// Every failure raised by the library carries one of these codes. The
/// service layer maps them one-to-one onto machine-readable API errors.
enum class ErrorCode {
  kSyntax,             // malformed AZee text
  kSchema,             // JSON document does not match its schema
  kDuplicateRule,      // registry declares a rule twice
  kUnknownRule,        // expression applies a rule the registry lacks
  kInvalidExpression,  // any other validate_expr violation
  kUnknownLayout,
  kUnknownSlot,
  kFillMismatch,       // list given to a single slot or vice versa
  kUnknownTemplate,
  kMissingAsset,
  kDanglingReference,  // catalog element/slot reference does not resolve
  kIncompleteDiagram,
  kNoAntecedent,
  kIo,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string location = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        location_(std::move(location)) {}

  ErrorCode code() const { return code_; }
  /// Slot path, `line:column`, or empty.
  const std::string& location() const { return location_; }

 private:
  ErrorCode code_;
  std::string location_;
};

}  // namespace azvd
