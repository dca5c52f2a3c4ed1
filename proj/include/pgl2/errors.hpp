#pragma once

#include <stdexcept>
#include <string>

namespace pgl2 {

/// Machine-readable error categories. The CLI maps them onto exit codes.
enum class ErrorCode { Parse, Field, Domain, NotDivisible, Numeric, Inconsistent };

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Field: return "FIELD";
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::NotDivisible: return "NOT_DIVISIBLE";
    case ErrorCode::Numeric: return "NUMERIC";
    case ErrorCode::Inconsistent: return "INCONSISTENT";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::Parse, w) {}
};
struct FieldError : Error {
  explicit FieldError(const std::string& w) : Error(ErrorCode::Field, w) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorCode::Domain, w) {}
};
struct NotDivisibleError : Error {
  explicit NotDivisibleError(const std::string& w) : Error(ErrorCode::NotDivisible, w) {}
};
struct NumericError : Error {
  explicit NumericError(const std::string& w) : Error(ErrorCode::Numeric, w) {}
};
struct InconsistencyError : Error {
  explicit InconsistencyError(const std::string& w) : Error(ErrorCode::Inconsistent, w) {}
};

}  // namespace pgl2
