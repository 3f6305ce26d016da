#pragma once

#include <stdexcept>
#include <string>

namespace vip {

enum class ErrorKind {
  Dimension,    // mismatched ambient dimensions or vector lengths
  Domain,       // argument outside an operation's precondition
  Parse,        // lexical / syntax errors in problem files or literals
  Degenerate,   // filtration support or LP data that admits no normalization
  Consistency,  // an internal invariant was violated; indicates a bug
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Consistency: return "consistency";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace vip
